#include "setmosaic/color.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "setmosaic/error.hpp"

namespace setmosaic {

namespace {

// sRGB <-> XYZ matrices (IEC 61966-2-1, D65 white).
constexpr double kRgbToXyz[3][3] = {
    {0.4124564, 0.3575761, 0.1804375},
    {0.2126729, 0.7151522, 0.0721750},
    {0.0193339, 0.1191920, 0.9503041},
};
constexpr double kXyzToRgb[3][3] = {
    {3.2404542, -1.5371385, -0.4985314},
    {-0.9692660, 1.8760108, 0.0415560},
    {0.0556434, -0.2040259, 1.0572252},
};
constexpr double kWhiteX = 0.95047, kWhiteY = 1.0, kWhiteZ = 1.08883;

double srgb_decode(double c) {
  return c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
}

double srgb_encode(double c) {
  return c <= 0.0031308 ? 12.92 * c : 1.055 * std::pow(c, 1.0 / 2.4) - 0.055;
}

struct Xyz {
  double x, y, z;
};

Xyz linear_rgb_to_xyz(double r, double g, double b) {
  return {kRgbToXyz[0][0] * r + kRgbToXyz[0][1] * g + kRgbToXyz[0][2] * b,
          kRgbToXyz[1][0] * r + kRgbToXyz[1][1] * g + kRgbToXyz[1][2] * b,
          kRgbToXyz[2][0] * r + kRgbToXyz[2][1] * g + kRgbToXyz[2][2] * b};
}

void white_uv(double& un, double& vn) {
  const double d = kWhiteX + 15.0 * kWhiteY + 3.0 * kWhiteZ;
  un = 4.0 * kWhiteX / d;
  vn = 9.0 * kWhiteY / d;
}

Luv xyz_to_luv(const Xyz& xyz) {
  const double yr = xyz.y / kWhiteY;
  const double l = yr > 216.0 / 24389.0 ? 116.0 * std::cbrt(yr) - 16.0
                                        : 24389.0 / 27.0 * yr;
  if (l <= 0.0) return {0.0, 0.0, 0.0};

  const double d = xyz.x + 15.0 * xyz.y + 3.0 * xyz.z;
  double up = 0.0, vp = 0.0;
  if (d > 0.0) {
    up = 4.0 * xyz.x / d;
    vp = 9.0 * xyz.y / d;
  }
  double un, vn;
  white_uv(un, vn);
  return {l, 13.0 * l * (up - un), 13.0 * l * (vp - vn)};
}

// Linear RGB for a CIELUV point, unclamped; out-of-gamut channels fall
// outside [0, 1].
void luv_to_linear_rgb(const Luv& luv, double& r, double& g, double& b) {
  if (luv.l <= 0.0) {
    r = g = b = 0.0;
    return;
  }
  double un, vn;
  white_uv(un, vn);
  const double up = luv.u / (13.0 * luv.l) + un;
  const double vp = luv.v / (13.0 * luv.l) + vn;

  const double y = luv.l > 8.0 ? kWhiteY * std::pow((luv.l + 16.0) / 116.0, 3.0)
                               : kWhiteY * luv.l * 27.0 / 24389.0;
  const double x = y * 9.0 * up / (4.0 * vp);
  const double z = y * (12.0 - 3.0 * up - 20.0 * vp) / (4.0 * vp);

  r = kXyzToRgb[0][0] * x + kXyzToRgb[0][1] * y + kXyzToRgb[0][2] * z;
  g = kXyzToRgb[1][0] * x + kXyzToRgb[1][1] * y + kXyzToRgb[1][2] * z;
  b = kXyzToRgb[2][0] * x + kXyzToRgb[2][1] * y + kXyzToRgb[2][2] * z;
}

bool in_gamut(double r, double g, double b) {
  return r >= 0.0 && r <= 1.0 && g >= 0.0 && g <= 1.0 && b >= 0.0 && b <= 1.0;
}

Luv luv_at(double lightness, double chroma, double hue_degrees) {
  const double rad = hue_degrees * std::numbers::pi / 180.0;
  return {lightness, chroma * std::cos(rad), chroma * std::sin(rad)};
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

double min_pairwise_distance(const Palette& palette) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < palette.colors.size(); ++i)
    for (std::size_t j = i + 1; j < palette.colors.size(); ++j)
      best = std::min(best,
                      luv_distance(palette.colors[i].luv, palette.colors[j].luv));
  return best;
}

void check_size(std::size_t n) {
  if (n < 1) throw Error("palette needs at least one colour");
  if (n > kMaxPaletteSize)
    throw Error("at most " + std::to_string(kMaxPaletteSize) +
                " distinguishable hues are supported, got " + std::to_string(n));
}

}  // namespace

Luv srgb_to_luv(Rgb8 rgb) {
  const Xyz xyz = linear_rgb_to_xyz(srgb_decode(rgb.r / 255.0),
                                    srgb_decode(rgb.g / 255.0),
                                    srgb_decode(rgb.b / 255.0));
  return xyz_to_luv(xyz);
}

Rgb8 luv_to_srgb_clamped(const Luv& luv) {
  double r, g, b;
  luv_to_linear_rgb(luv, r, g, b);
  auto to_channel = [](double lin) {
    const double s = srgb_encode(std::clamp(lin, 0.0, 1.0));
    return static_cast<std::uint8_t>(std::lround(std::clamp(s, 0.0, 1.0) * 255.0));
  };
  return {to_channel(r), to_channel(g), to_channel(b)};
}

double luv_distance(const Luv& a, const Luv& b) {
  const double dl = a.l - b.l, du = a.u - b.u, dv = a.v - b.v;
  return std::sqrt(dl * dl + du * du + dv * dv);
}

double max_chroma(double lightness, double hue_degrees) {
  double lo = 0.0, hi = 400.0;  // sRGB chromas at any lightness stay below 400
  for (int i = 0; i < 64; ++i) {
    const double mid = 0.5 * (lo + hi);
    double r, g, b;
    luv_to_linear_rgb(luv_at(lightness, mid, hue_degrees), r, g, b);
    (in_gamut(r, g, b) ? lo : hi) = mid;
  }
  return lo;
}

std::string rgb_to_hex(Rgb8 rgb) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", rgb.r, rgb.g, rgb.b);
  return buf;
}

Rgb8 parse_hex_color(std::string_view s) {
  std::string_view digits = s;
  if (!digits.empty() && digits.front() == '#') digits.remove_prefix(1);
  if (digits.size() != 6)
    throw Error("invalid colour '" + std::string(s) + "': expected #rrggbb");
  std::uint8_t channels[3];
  for (int i = 0; i < 3; ++i) {
    const int hi = hex_digit(digits[2 * i]);
    const int lo = hex_digit(digits[2 * i + 1]);
    if (hi < 0 || lo < 0)
      throw Error("invalid colour '" + std::string(s) + "': expected #rrggbb");
    channels[i] = static_cast<std::uint8_t>(hi * 16 + lo);
  }
  return {channels[0], channels[1], channels[2]};
}

const PaletteColor* Palette::find(std::string_view label) const {
  for (const auto& c : colors)
    if (c.set_label == label) return &c;
  return nullptr;
}

Palette generate_palette(std::size_t n, double min_distance) {
  check_size(n);

  Palette palette;
  for (std::size_t k = 0; k < n; ++k) {
    const double hue = 360.0 * static_cast<double>(k) / static_cast<double>(n);
    const double chroma = max_chroma(kPaletteLightness, hue);
    const Rgb8 rgb = luv_to_srgb_clamped(luv_at(kPaletteLightness, chroma, hue));
    // Store the CIELUV position of the colour actually emitted, after the
    // 8-bit rounding, so distance guarantees hold for the output.
    palette.colors.push_back(PaletteColor{"", rgb, srgb_to_luv(rgb)});
  }

  if (n > 1) {
    const double separation = min_pairwise_distance(palette);
    if (separation < min_distance) {
      char buf[96];
      std::snprintf(buf, sizeof(buf),
                    "cannot separate %zu colours by CIELUV distance %g; "
                    "best achievable is %.2f",
                    n, min_distance, separation);
      throw Error(buf);
    }
  }
  return palette;
}

Palette palette_for_labels(std::span<const std::string> labels, double min_distance) {
  Palette palette = generate_palette(labels.size(), min_distance);
  for (std::size_t i = 0; i < labels.size(); ++i)
    palette.colors[i].set_label = labels[i];
  return palette;
}

Palette palette_from_hex(std::span<const std::string> labels,
                         std::span<const std::string> hex_colors,
                         double min_distance, bool check_distance) {
  check_size(labels.size());
  if (hex_colors.size() != labels.size())
    throw Error("got " + std::to_string(hex_colors.size()) + " colours for " +
                std::to_string(labels.size()) + " sets");

  Palette palette;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const Rgb8 rgb = parse_hex_color(hex_colors[i]);
    palette.colors.push_back(PaletteColor{labels[i], rgb, srgb_to_luv(rgb)});
  }

  if (check_distance && labels.size() > 1) {
    const double separation = min_pairwise_distance(palette);
    if (separation < min_distance) {
      char buf[112];
      std::snprintf(buf, sizeof(buf),
                    "supplied colours are only %.2f apart in CIELUV, need %g "
                    "(use --no-color-check to override)",
                    separation, min_distance);
      throw Error(buf);
    }
  }
  return palette;
}

}  // namespace setmosaic
