#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace setmosaic {

struct Rgb8 {
  std::uint8_t r = 0, g = 0, b = 0;
  friend bool operator==(const Rgb8&, const Rgb8&) = default;
};

struct Luv {
  double l = 0, u = 0, v = 0;
};

// sRGB (D65, 2 degree observer) <-> CIELUV conversions via CIE XYZ.
Luv srgb_to_luv(Rgb8 rgb);
// Converts an arbitrary CIELUV point, clamping each sRGB channel into gamut.
Rgb8 luv_to_srgb_clamped(const Luv& luv);
double luv_distance(const Luv& a, const Luv& b);

// Largest chroma c such that (lightness, c*cos(hue), c*sin(hue)) converts to
// an in-gamut sRGB colour. Fixed-iteration bisection, so the result is a
// pure function of its arguments.
double max_chroma(double lightness, double hue_degrees);

std::string rgb_to_hex(Rgb8 rgb);          // "#rrggbb"
Rgb8 parse_hex_color(std::string_view s);  // accepts "#rrggbb" or "rrggbb"

struct PaletteColor {
  std::string set_label;
  Rgb8 rgb;
  Luv luv;  // of the emitted 8-bit colour
};

// At most 10 entries: beyond ten hues colours stop being reliably
// distinguishable, so larger requests are rejected rather than degraded.
struct Palette {
  std::vector<PaletteColor> colors;
  const PaletteColor* find(std::string_view label) const;
};

inline constexpr std::size_t kMaxPaletteSize = 10;
inline constexpr double kDefaultMinLuvDistance = 25.0;
// Full-saturation ring lightness. High-saturation colours discriminate
// best; L*=60 keeps every hue direction reasonably chromatic in gamut.
inline constexpr double kPaletteLightness = 60.0;

// n colours at equally spaced hue angles (starting at 0) on the L*=60,
// maximum-feasible-chroma ring in CIELUV, rounded to 8-bit sRGB. Labels are
// left empty; use with_labels to attach them. Throws if any pairwise CIELUV
// distance of the emitted colours falls below min_distance, reporting the
// best separation achievable at this n.
Palette generate_palette(std::size_t n, double min_distance = kDefaultMinLuvDistance);

// generate_palette(labels.size()) with labels attached in order.
Palette palette_for_labels(std::span<const std::string> labels,
                           double min_distance = kDefaultMinLuvDistance);

// Explicit user colours, one hex value per label. The 10-colour cap always
// applies; the pairwise distance check may be switched off.
Palette palette_from_hex(std::span<const std::string> labels,
                         std::span<const std::string> hex_colors,
                         double min_distance = kDefaultMinLuvDistance,
                         bool check_distance = true);

}  // namespace setmosaic
