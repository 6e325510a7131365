#pragma once

#include <string>

#include "setmosaic/layout_linear.hpp"
#include "setmosaic/layout_mosaic.hpp"
#include "setmosaic/model.hpp"

namespace setmosaic {

// Layout dumps for --dump-layout: columns as arrays of member labels, runs
// keyed by set label in legend order, coordinates at full precision.
std::string linear_layout_to_json(const ZoneSet& zs, const LinearLayout& layout);
std::string mosaic_layout_to_json(const ZoneSet& zs, const MosaicLayout& layout);

}  // namespace setmosaic
