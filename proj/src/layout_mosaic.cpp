#include "setmosaic/layout_mosaic.hpp"

#include <cstdint>

#include "setmosaic/error.hpp"

namespace setmosaic {

MosaicLayout mosaic_layout(const ZoneSet& zs, const ZoneOrder& order, MosaicMode mode) {
  segment_count(zs, order);  // validates the permutation

  const std::size_t n_cols = order.size();

  MosaicLayout layout;
  layout.mode = mode;
  layout.columns = order;
  layout.legend = zs.set_labels();

  // Edges come from one shared prefix computation so adjacent columns meet
  // exactly and the last edge lands on 1 with no accumulated drift.
  layout.column_edges.resize(n_cols + 1);
  if (mode == MosaicMode::equal) {
    for (std::size_t c = 0; c <= n_cols; ++c)
      layout.column_edges[c] =
          static_cast<double>(c) / static_cast<double>(n_cols);
  } else {
    std::uint64_t total = 0;
    for (std::size_t c = 0; c < n_cols; ++c)
      total += zs.zones()[order[c]].cardinality;
    std::uint64_t prefix = 0;
    layout.column_edges[0] = 0.0;
    for (std::size_t c = 0; c < n_cols; ++c) {
      prefix += zs.zones()[order[c]].cardinality;
      layout.column_edges[c + 1] =
          static_cast<double>(prefix) / static_cast<double>(total);
    }
  }

  for (std::size_t c = 0; c < n_cols; ++c) {
    const SetMask& sig = zs.zones()[order[c]].signature;
    const double x = layout.column_edges[c];
    const double width = layout.column_edges[c + 1] - x;
    const std::size_t present = sig.count();

    std::size_t slot = 0;
    for (std::size_t s = 0; s < zs.set_count(); ++s) {
      if (!sig.test(s)) continue;
      const double top = static_cast<double>(slot) / static_cast<double>(present);
      const double bottom =
          static_cast<double>(slot + 1) / static_cast<double>(present);
      layout.tiles.push_back(Tile{c, s, x, width, top, bottom - top});
      ++slot;
    }
  }

  return layout;
}

}  // namespace setmosaic
