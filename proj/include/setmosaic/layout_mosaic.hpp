#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "setmosaic/model.hpp"
#include "setmosaic/order.hpp"

namespace setmosaic {

enum class MosaicMode { equal, cardinality };

// One coloured rectangle of the mosaic, in unit-square coordinates
// (x grows rightward, y downward).
struct Tile {
  std::size_t column;     // position in drawing order
  std::size_t set_index;  // into legend
  double x, width;
  double y, height;
};

// Space-filling mosaic geometry. Every column is tiled full-height by the
// sets present in its zone, stacked in legend order top to bottom, each with
// an equal share. Column widths are uniform in equal mode and proportional
// to zone cardinality in cardinality mode; equal mode never reads
// cardinalities.
struct MosaicLayout {
  MosaicMode mode;
  std::vector<Tile> tiles;               // column-major, top to bottom
  std::vector<double> column_edges;      // n_columns + 1 ascending x values
  std::vector<std::string> legend;       // labels in SetSystem order
  std::vector<std::size_t> columns;      // zone index per column
};

MosaicLayout mosaic_layout(const ZoneSet& zs, const ZoneOrder& order, MosaicMode mode);

}  // namespace setmosaic
