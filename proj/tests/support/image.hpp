#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace molecule::testing {

struct DecodedPpm {
  unsigned width = 0;
  unsigned height = 0;
  std::vector<std::uint8_t> rgb;
};

inline DecodedPpm decode_p6(const std::string& bytes) {
  DecodedPpm out;
  unsigned maxval = 0;
  int consumed = 0;
  if (std::sscanf(bytes.c_str(), "P6 %u %u %u%n", &out.width, &out.height, &maxval, &consumed) != 3 ||
      maxval != 255) {
    throw std::runtime_error("not a P6 image");
  }
  const std::size_t start = static_cast<std::size_t>(consumed) + 1;  // one whitespace byte after maxval
  out.rgb.assign(bytes.begin() + static_cast<std::ptrdiff_t>(start), bytes.end());
  if (out.rgb.size() != std::size_t{out.width} * out.height * 3) throw std::runtime_error("truncated P6 payload");
  return out;
}

// Number of 8-connected clusters of pure red pixels.
inline std::size_t count_red_clusters(const DecodedPpm& image) {
  const std::size_t w = image.width;
  const std::size_t h = image.height;
  auto red = [&](std::size_t x, std::size_t y) {
    const std::uint8_t* p = &image.rgb[(y * w + x) * 3];
    return p[0] == 255 && p[1] == 0 && p[2] == 0;
  };
  std::vector<char> seen(w * h, 0);
  std::size_t clusters = 0;
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      if (seen[y * w + x] || !red(x, y)) continue;
      ++clusters;
      stack.push_back({x, y});
      seen[y * w + x] = 1;
      while (!stack.empty()) {
        auto [cx, cy] = stack.back();
        stack.pop_back();
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            const long nx = static_cast<long>(cx) + dx;
            const long ny = static_cast<long>(cy) + dy;
            if (nx < 0 || ny < 0 || nx >= static_cast<long>(w) || ny >= static_cast<long>(h)) continue;
            const std::size_t idx = static_cast<std::size_t>(ny) * w + static_cast<std::size_t>(nx);
            if (seen[idx] || !red(static_cast<std::size_t>(nx), static_cast<std::size_t>(ny))) continue;
            seen[idx] = 1;
            stack.push_back({static_cast<std::size_t>(nx), static_cast<std::size_t>(ny)});
          }
        }
      }
    }
  }
  return clusters;
}

}  // namespace molecule::testing
