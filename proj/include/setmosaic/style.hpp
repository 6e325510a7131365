#pragma once

#include <string>
#include <string_view>

namespace setmosaic {

// Rendering parameters shared by both diagram types. Lines must stay thin
// relative to row spacing (thickness < spacing / 3); the renderer checks
// this once row spacing is known.
struct Style {
  double canvas_width = 600;
  double canvas_height = 300;
  double line_thickness = 2;  // linear-diagram set lines
  double guide_stroke_width = 1;
  std::string guide_color = "#c8c8c8";
  double tile_border_width = 1;
  // Border grey level in [0, 1]; 1 is white. High luminance contrast keeps
  // neighbouring tiles separable.
  double tile_border_luminance = 1.0;
  double font_size = 12;
  std::string background = "#ffffff";
  double legend_width = 120;
  double margin = 10;
};

// Applies a JSON object of overrides on top of the defaults. Keys match the
// field names; unknown keys are rejected.
Style style_from_json(std::string_view text);

}  // namespace setmosaic
