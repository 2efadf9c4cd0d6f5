#include "cli/plot.hpp"

#include <cmath>
#include <sstream>

#include "molecule/errors.hpp"

namespace molecule::cli {

Window parse_window(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw DomainError("trailing characters");
    } catch (const std::exception&) {
      throw DomainError("malformed window '" + text + "'");
    }
  }
  if (values.size() != 4) throw DomainError("window needs four comma-separated numbers, got '" + text + "'");
  return {values[0], values[1], values[2], values[3]};
}

void PlotSpec::validate() const {
  if (width < 16 || height < 16) throw DomainError("plot width and height must be at least 16");
  if (!(window.re_max > window.re_min) || !(window.im_max > window.im_min)) {
    throw DomainError("plot window is degenerate");
  }
  if (!(escape_radius >= 2.0)) throw DomainError("escape radius must be at least 2");
  if (max_iter == 0) throw DomainError("max_iter must be positive");
  if (n == 0) throw DomainError("period must be positive");
}

std::string Image::to_ppm() const {
  std::string out = "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  out.append(reinterpret_cast<const char*>(rgb.data()), rgb.size());
  return out;
}

namespace {

double pixel_re(const PlotSpec& spec, unsigned x) {
  return spec.window.re_min + (x + 0.5) * (spec.window.re_max - spec.window.re_min) / spec.width;
}

double pixel_im(const PlotSpec& spec, unsigned y) {
  return spec.window.im_max - (y + 0.5) * (spec.window.im_max - spec.window.im_min) / spec.height;
}

}  // namespace

std::optional<std::pair<unsigned, unsigned>> pixel_of(const PlotSpec& spec, ComplexParam c) {
  const double fx = (c.real() - spec.window.re_min) / (spec.window.re_max - spec.window.re_min) * spec.width;
  const double fy = (spec.window.im_max - c.imag()) / (spec.window.im_max - spec.window.im_min) * spec.height;
  if (!(fx >= 0.0 && fx < spec.width && fy >= 0.0 && fy < spec.height)) return std::nullopt;
  return std::pair{static_cast<unsigned>(fx), static_cast<unsigned>(fy)};
}

Image render_escape_time(const PlotSpec& spec) {
  spec.validate();
  Image image{spec.width, spec.height, std::vector<std::uint8_t>(std::size_t{spec.width} * spec.height * 3)};
  const double bailout = spec.escape_radius * spec.escape_radius;
  for (unsigned y = 0; y < spec.height; ++y) {
    const double im = pixel_im(spec, y);
    for (unsigned x = 0; x < spec.width; ++x) {
      const double re = pixel_re(spec, x);
      double zr = 0.0;
      double zi = 0.0;
      unsigned iter = 0;
      while (iter < spec.max_iter && zr * zr + zi * zi <= bailout) {
        const double t = zr * zr - zi * zi + re;
        zi = 2.0 * zr * zi + im;
        zr = t;
        ++iter;
      }
      const std::uint8_t grey =
          iter >= spec.max_iter ? 0 : static_cast<std::uint8_t>((255ULL * iter) / spec.max_iter);
      std::uint8_t* px = image.pixel(x, y);
      px[0] = px[1] = px[2] = grey;
    }
  }
  return image;
}

bool draw_cross(Image& image, const PlotSpec& spec, ComplexParam c) {
  const auto at = pixel_of(spec, c);
  if (!at) return false;
  const auto [cx, cy] = *at;
  auto paint = [&](long x, long y) {
    if (x < 0 || y < 0 || x >= static_cast<long>(image.width) || y >= static_cast<long>(image.height)) return;
    std::uint8_t* px = image.pixel(static_cast<unsigned>(x), static_cast<unsigned>(y));
    px[0] = 255;
    px[1] = 0;
    px[2] = 0;
  };
  for (long d = -2; d <= 2; ++d) {
    paint(static_cast<long>(cx) + d, cy);
    paint(cx, static_cast<long>(cy) + d);
  }
  return true;
}

Image render_plot(const PlotSpec& spec, std::span<const Center> centers) {
  Image image = render_escape_time(spec);
  for (const Center& center : centers) draw_cross(image, spec, center.c);
  return image;
}

}  // namespace molecule::cli
