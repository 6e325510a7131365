#include "setmosaic/style.hpp"

#include <json.hpp>

#include "setmosaic/color.hpp"
#include "setmosaic/error.hpp"

namespace setmosaic {

Style style_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("invalid style JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error("style JSON must be an object");

  Style style;
  for (const auto& [key, value] : doc.items()) {
    auto number = [&](double lo) {
      if (!value.is_number())
        throw Error("style key '" + key + "' must be a number");
      const double v = value.get<double>();
      if (v < lo)
        throw Error("style key '" + key + "' must be >= " + std::to_string(lo));
      return v;
    };
    auto color = [&] {
      if (!value.is_string())
        throw Error("style key '" + key + "' must be a colour string");
      parse_hex_color(value.get<std::string>());  // validates
      return value.get<std::string>();
    };

    if (key == "canvas_width") style.canvas_width = number(1);
    else if (key == "canvas_height") style.canvas_height = number(1);
    else if (key == "line_thickness") style.line_thickness = number(0);
    else if (key == "guide_stroke_width") style.guide_stroke_width = number(0);
    else if (key == "guide_color") style.guide_color = color();
    else if (key == "tile_border_width") style.tile_border_width = number(0);
    else if (key == "tile_border_luminance") {
      const double v = number(0);
      if (v > 1.0) throw Error("style key 'tile_border_luminance' must be in [0, 1]");
      style.tile_border_luminance = v;
    } else if (key == "font_size") style.font_size = number(1);
    else if (key == "background") style.background = color();
    else if (key == "legend_width") style.legend_width = number(0);
    else if (key == "margin") style.margin = number(0);
    else throw Error("unknown style key '" + key + "'");
  }
  return style;
}

}  // namespace setmosaic
