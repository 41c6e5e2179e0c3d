#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "diairesis/errors.hpp"
#include "diairesis/four_valued.hpp"
#include "diairesis/phi_number.hpp"
#include "diairesis/rational.hpp"

namespace diairesis {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Maps determination data to pixels: a continuous ramp for fuzzy values in
// [0,1] and one color per four-valued verdict.
class Colormap {
 public:
  // black at 0, white at 1; verdicts F and T at the ends, B and N mid-gray
  static Colormap grayscale() {
    Colormap m;
    m.name_ = "grayscale";
    m.low_ = Rgb{0, 0, 0};
    m.high_ = Rgb{255, 255, 255};
    m.value_colors_[detail::vidx(Value::N)] = Rgb{128, 128, 128};
    m.value_colors_[detail::vidx(Value::F)] = Rgb{0, 0, 0};
    m.value_colors_[detail::vidx(Value::T)] = Rgb{255, 255, 255};
    m.value_colors_[detail::vidx(Value::B)] = Rgb{128, 128, 128};
    return m;
  }

  const std::string& name() const { return name_; }

  // linear interpolation with round-to-nearest, exact in integer arithmetic
  Rgb fuzzy_color(const Rational& v) const {
    const auto lerp = [&](std::uint8_t lo, std::uint8_t hi) {
      const std::int64_t span = static_cast<std::int64_t>(hi) - lo;
      const std::int64_t scaled = lo * v.den() + span * v.num();
      return static_cast<std::uint8_t>((2 * scaled + v.den()) / (2 * v.den()));
    };
    return Rgb{lerp(low_.r, high_.r), lerp(low_.g, high_.g), lerp(low_.b, high_.b)};
  }

  Rgb value_color(Value v) const { return value_colors_[detail::vidx(v)]; }

 private:
  std::string name_;
  Rgb low_, high_;
  std::array<Rgb, 4> value_colors_{};
};

inline constexpr std::size_t fractal_max_depth = 16;
inline constexpr std::size_t raster_max_side = 1u << 16;

struct FractalParams {
  std::size_t depth = 1;        // generations, 1..16
  std::size_t cell_size = 8;    // pixels per leaf column at the deepest band
  Colormap colormap = Colormap::grayscale();
};

class RasterImage {
 public:
  RasterImage(std::size_t width, std::size_t height)
      : width_(width), height_(height), pixels_(width * height * 3, 0) {}

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  const std::vector<std::uint8_t>& bytes() const { return pixels_; }

  void set(std::size_t x, std::size_t y, Rgb color) {
    const std::size_t at = (y * width_ + x) * 3;
    pixels_[at] = color.r;
    pixels_[at + 1] = color.g;
    pixels_[at + 2] = color.b;
  }

  Rgb at(std::size_t x, std::size_t y) const {
    const std::size_t p = (y * width_ + x) * 3;
    return Rgb{pixels_[p], pixels_[p + 1], pixels_[p + 2]};
  }

  friend bool operator==(const RasterImage&, const RasterImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> pixels_;  // row-major RGB
};

// The branch as a point of [0,1): the decision bits read as a binary
// fraction, root bit excluded. The bare root maps to 0.
inline Rational branch_to_unit_interval(const PhiNumber& phi) {
  const auto decisions = phi.decision_bits();
  if (decisions.empty()) return Rational(0);
  std::int64_t value = 0;
  for (char c : decisions) value = (value << 1) | (c == '1' ? 1 : 0);
  return Rational(value, std::int64_t{1} << decisions.size());
}

// One horizontal band per generation g = 1..depth, 2^g cells wide, every
// cell colored by the fuzzy determination of its branch. Cell k of band g
// is the branch whose decision bits are k written in g binary digits, so
// each band lays the generation's branches out left to right in
// lexicographic order. Pure integer arithmetic end to end: the bytes are a
// function of the parameters alone.
inline RasterImage render_fractal(const FractalParams& params) {
  if (params.depth < 1 || params.depth > fractal_max_depth)
    throw std::invalid_argument("fractal depth must be in 1.." +
                                std::to_string(fractal_max_depth));
  if (params.cell_size < 1)
    throw std::invalid_argument("cell size must be at least 1");

  const std::uint64_t width =
      static_cast<std::uint64_t>(params.cell_size) << params.depth;
  const std::uint64_t height =
      static_cast<std::uint64_t>(params.cell_size) * params.depth;
  if (width > raster_max_side || height > raster_max_side)
    throw DimensionError("raster would be " + std::to_string(width) + "x" +
                         std::to_string(height) + ", limit is " +
                         std::to_string(raster_max_side) + " per side");

  RasterImage img(static_cast<std::size_t>(width), static_cast<std::size_t>(height));
  for (std::size_t g = 1; g <= params.depth; ++g) {
    const std::size_t cells = std::size_t{1} << g;
    const std::size_t cell_width = static_cast<std::size_t>(width) / cells;
    const std::size_t y0 = (g - 1) * params.cell_size;
    for (std::size_t k = 0; k < cells; ++k) {
      const auto ones = static_cast<std::int64_t>(std::popcount(k));
      const Rgb color = params.colormap.fuzzy_color(
          Rational(ones, static_cast<std::int64_t>(g)));
      for (std::size_t y = y0; y < y0 + params.cell_size; ++y)
        for (std::size_t x = k * cell_width; x < (k + 1) * cell_width; ++x)
          img.set(x, y, color);
    }
  }
  return img;
}

// Binary PPM (P6), bit-exact: "P6\n{width} {height}\n255\n" then the raw
// row-major RGB payload.
inline std::vector<std::uint8_t> encode_ppm(const RasterImage& img) {
  const std::string header = "P6\n" + std::to_string(img.width()) + " " +
                             std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out;
  out.reserve(header.size() + img.bytes().size());
  out.insert(out.end(), header.begin(), header.end());
  out.insert(out.end(), img.bytes().begin(), img.bytes().end());
  return out;
}

}  // namespace diairesis
