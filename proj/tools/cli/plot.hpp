#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "molecule/continuation.hpp"

namespace molecule::cli {

struct Window {
  double re_min = -2.0;
  double re_max = 0.75;
  double im_min = -1.15;
  double im_max = 1.15;
};

/// "re_min,re_max,im_min,im_max"; throws DomainError on malformed input.
Window parse_window(const std::string& text);

struct PlotSpec {
  unsigned n = 6;
  unsigned width = 800;
  unsigned height = 600;
  Window window;
  unsigned max_iter = 256;
  double escape_radius = 2.0;

  /// width, height >= 16; non-degenerate window; escape_radius >= 2; max_iter >= 1.
  void validate() const;
};

/// 8-bit RGB raster, row-major from the top-left pixel.
struct Image {
  unsigned width = 0;
  unsigned height = 0;
  std::vector<std::uint8_t> rgb;

  std::uint8_t* pixel(unsigned x, unsigned y) { return &rgb[(static_cast<std::size_t>(y) * width + x) * 3]; }
  const std::uint8_t* pixel(unsigned x, unsigned y) const {
    return &rgb[(static_cast<std::size_t>(y) * width + x) * 3];
  }

  /// Binary P6 with maxval 255.
  std::string to_ppm() const;
};

/// Pixel containing c, or nothing if c lies outside the window.
std::optional<std::pair<unsigned, unsigned>> pixel_of(const PlotSpec& spec, ComplexParam c);

/// Grey escape-time shading: floor(255 iter / max_iter) for escaping pixels,
/// black for pixels still bounded after max_iter iterations.
Image render_escape_time(const PlotSpec& spec);

/// Red cross with arms of two pixels (five pixels across) centred on c;
/// clipped at the image border. Returns false when c is outside the window.
bool draw_cross(Image& image, const PlotSpec& spec, ComplexParam c);

Image render_plot(const PlotSpec& spec, std::span<const Center> centers);

}  // namespace molecule::cli
