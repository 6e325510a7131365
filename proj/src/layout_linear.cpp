#include "setmosaic/layout_linear.hpp"

#include <set>

#include "setmosaic/error.hpp"

namespace setmosaic {

LinearLayout linear_layout(const ZoneSet& zs, const ZoneOrder& order) {
  segment_count(zs, order);  // validates the permutation

  const std::size_t n_sets = zs.set_count();
  const std::size_t n_cols = order.size();

  LinearLayout layout;
  layout.columns = order;
  layout.legend = zs.set_labels();
  layout.runs.resize(n_sets);

  for (std::size_t s = 0; s < n_sets; ++s) {
    auto& runs = layout.runs[s];
    for (std::size_t col = 0; col < n_cols; ++col) {
      if (!zs.zones()[order[col]].signature.test(s)) continue;
      if (!runs.empty() && runs.back().second == col)
        runs.back().second = col + 1;
      else
        runs.emplace_back(col, col + 1);
    }
  }

  std::set<std::size_t> boundaries;
  for (const auto& runs : layout.runs) {
    for (const auto& [start, end] : runs) {
      boundaries.insert(start);
      boundaries.insert(end);
    }
  }
  layout.guides.assign(boundaries.begin(), boundaries.end());

  return layout;
}

}  // namespace setmosaic
