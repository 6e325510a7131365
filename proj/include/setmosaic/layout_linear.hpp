#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "setmosaic/model.hpp"
#include "setmosaic/order.hpp"

namespace setmosaic {

// Resolved linear-diagram geometry in column units. Pixel mapping happens at
// render time.
struct LinearLayout {
  // Zone indices in drawing order, leftmost column first.
  ZoneOrder columns;
  // Per set (legend order): maximal runs of consecutive columns containing
  // it, as half-open [start, end) intervals, sorted and non-adjacent.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> runs;
  // Column boundaries where at least one run starts or ends. 0 and
  // columns.size() always qualify: the first column starts runs and the last
  // ends them.
  std::vector<std::size_t> guides;
  // Labels in SetSystem order; also the vertical row order.
  std::vector<std::string> legend;
};

LinearLayout linear_layout(const ZoneSet& zs, const ZoneOrder& order);

}  // namespace setmosaic
