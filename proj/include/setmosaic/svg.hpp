#pragma once

#include <string>

#include "setmosaic/color.hpp"
#include "setmosaic/layout_linear.hpp"
#include "setmosaic/layout_mosaic.hpp"
#include "setmosaic/style.hpp"

namespace setmosaic {

// Well-formed SVG 1.1 text. Rendering is a pure function of
// (layout, palette, style): identical inputs give byte-identical documents.
// Elements are emitted in a fixed order (background, guides, shapes,
// borders, legend swatches, labels) and every numeric attribute is rounded
// to 2 decimals. Countable elements carry class names: "guide", "run",
// "tile", "tile-border", "swatch".
using SvgDocument = std::string;

// Thin coloured line per run, one row per set in legend order, vertical
// guide lines at every recorded boundary, legend swatches on the left.
// Throws if the palette misses a legend label or line_thickness is not
// under a third of the row spacing.
SvgDocument render_linear(const LinearLayout& layout, const Palette& palette,
                          const Style& style);

// Filled rectangle per tile plus a high-contrast border pass; the diagram
// area is tiled completely, no background shows through it.
SvgDocument render_mosaic(const MosaicLayout& layout, const Palette& palette,
                          const Style& style);

}  // namespace setmosaic
