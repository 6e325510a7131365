#include "setmosaic/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "setmosaic/error.hpp"

namespace setmosaic {

namespace {

// Numeric attribute policy: round to 2 decimals, trim trailing zeros so
// whole numbers stay short. printf with the C locale keeps the decimal
// point stable.
std::string fmt(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  std::string s = buf;
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

std::string escape_xml(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Frame {
  double x0, y0, plot_w, plot_h, row_spacing;
};

Frame plot_frame(const Style& style, std::size_t n_sets) {
  Frame f;
  f.x0 = style.margin + style.legend_width;
  f.y0 = style.margin;
  f.plot_w = style.canvas_width - style.margin - f.x0;
  f.plot_h = style.canvas_height - 2 * style.margin;
  if (f.plot_w <= 0 || f.plot_h <= 0)
    throw Error("canvas too small for margins and legend");
  f.row_spacing = f.plot_h / static_cast<double>(n_sets);
  return f;
}

void check_palette(const Palette& palette, const std::vector<std::string>& legend) {
  for (const auto& label : legend)
    if (!palette.find(label)) throw Error("no colour for set '" + label + "'");
}

void open_document(std::ostringstream& out, const Style& style) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << fmt(style.canvas_width) << "\" height=\"" << fmt(style.canvas_height)
      << "\" viewBox=\"0 0 " << fmt(style.canvas_width) << ' '
      << fmt(style.canvas_height) << "\">\n";
  out << " <rect class=\"background\" x=\"0\" y=\"0\" width=\""
      << fmt(style.canvas_width) << "\" height=\"" << fmt(style.canvas_height)
      << "\" fill=\"" << style.background << "\"/>\n";
}

void emit_legend(std::ostringstream& out, const std::vector<std::string>& legend,
                 const Palette& palette, const Style& style, const Frame& frame) {
  const double swatch = 10.0;
  for (std::size_t i = 0; i < legend.size(); ++i) {
    const double row_y = frame.y0 + (static_cast<double>(i) + 0.5) * frame.row_spacing;
    out << " <rect class=\"swatch\" x=\"" << fmt(style.margin) << "\" y=\""
        << fmt(row_y - swatch / 2) << "\" width=\"" << fmt(swatch)
        << "\" height=\"" << fmt(swatch) << "\" fill=\""
        << rgb_to_hex(palette.find(legend[i])->rgb) << "\"/>\n";
  }
  for (std::size_t i = 0; i < legend.size(); ++i) {
    const double row_y = frame.y0 + (static_cast<double>(i) + 0.5) * frame.row_spacing;
    out << " <text class=\"label\" x=\"" << fmt(style.margin + swatch + 4)
        << "\" y=\"" << fmt(row_y + 0.35 * style.font_size)
        << "\" font-family=\"sans-serif\" font-size=\"" << fmt(style.font_size)
        << "\">" << escape_xml(legend[i]) << "</text>\n";
  }
}

std::string border_color(const Style& style) {
  const auto channel =
      static_cast<std::uint8_t>(std::lround(style.tile_border_luminance * 255.0));
  return rgb_to_hex(Rgb8{channel, channel, channel});
}

}  // namespace

SvgDocument render_linear(const LinearLayout& layout, const Palette& palette,
                          const Style& style) {
  check_palette(palette, layout.legend);
  const Frame frame = plot_frame(style, layout.legend.size());

  if (style.line_thickness >= frame.row_spacing / 3.0)
    throw Error("line thickness " + fmt(style.line_thickness) +
                " is not thin against row spacing " + fmt(frame.row_spacing) +
                "; keep it under a third (enlarge the canvas or thin the lines)");

  const std::size_t n_cols = layout.columns.size();
  auto col_x = [&](std::size_t boundary) {
    return frame.x0 + frame.plot_w * static_cast<double>(boundary) /
                          static_cast<double>(n_cols);
  };

  std::ostringstream out;
  open_document(out, style);

  for (std::size_t g : layout.guides) {
    out << " <line class=\"guide\" x1=\"" << fmt(col_x(g)) << "\" y1=\""
        << fmt(frame.y0) << "\" x2=\"" << fmt(col_x(g)) << "\" y2=\""
        << fmt(frame.y0 + frame.plot_h) << "\" stroke=\"" << style.guide_color
        << "\" stroke-width=\"" << fmt(style.guide_stroke_width) << "\"/>\n";
  }

  for (std::size_t s = 0; s < layout.legend.size(); ++s) {
    const double row_y =
        frame.y0 + (static_cast<double>(s) + 0.5) * frame.row_spacing;
    const std::string color = rgb_to_hex(palette.find(layout.legend[s])->rgb);
    for (const auto& [start, end] : layout.runs[s]) {
      out << " <line class=\"run\" x1=\"" << fmt(col_x(start)) << "\" y1=\""
          << fmt(row_y) << "\" x2=\"" << fmt(col_x(end)) << "\" y2=\""
          << fmt(row_y) << "\" stroke=\"" << color << "\" stroke-width=\""
          << fmt(style.line_thickness) << "\"/>\n";
    }
  }

  emit_legend(out, layout.legend, palette, style, frame);
  out << "</svg>\n";
  return out.str();
}

SvgDocument render_mosaic(const MosaicLayout& layout, const Palette& palette,
                          const Style& style) {
  check_palette(palette, layout.legend);
  const Frame frame = plot_frame(style, layout.legend.size());

  auto tile_rect = [&](const Tile& t) {
    std::ostringstream attrs;
    attrs << "x=\"" << fmt(frame.x0 + t.x * frame.plot_w) << "\" y=\""
          << fmt(frame.y0 + t.y * frame.plot_h) << "\" width=\""
          << fmt(t.width * frame.plot_w) << "\" height=\""
          << fmt(t.height * frame.plot_h) << "\"";
    return attrs.str();
  };

  std::ostringstream out;
  open_document(out, style);

  for (const Tile& t : layout.tiles) {
    out << " <rect class=\"tile\" " << tile_rect(t) << " fill=\""
        << rgb_to_hex(palette.find(layout.legend[t.set_index])->rgb) << "\"/>\n";
  }
  if (style.tile_border_width > 0) {
    const std::string stroke = border_color(style);
    for (const Tile& t : layout.tiles) {
      out << " <rect class=\"tile-border\" " << tile_rect(t)
          << " fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
          << fmt(style.tile_border_width) << "\"/>\n";
    }
  }

  emit_legend(out, layout.legend, palette, style, frame);
  out << "</svg>\n";
  return out.str();
}

}  // namespace setmosaic
