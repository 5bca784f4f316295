#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace hullgauge {

// 8-bit RGB image, row-major, channels interleaved.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // height * width * 3

  Image() = default;
  Image(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3, 0) {}

  std::uint8_t& at(int y, int x, int c) {
    return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
  }
  std::uint8_t at(int y, int x, int c) const {
    return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
  }
  bool same_size(const Image& other) const {
    return width == other.width && height == other.height;
  }
};

// Binary PPM (P6, maxval 255). Round-trips bit-exactly.
void write_ppm(const Image& img, const std::filesystem::path& path);
Image read_ppm(const std::filesystem::path& path);

// Geometry and photometric primitives used by the augmentation pipeline.
// All are deterministic pure functions.
Image rotate90(const Image& img, int quarter_turns);  // counter-clockwise
Image hflip(const Image& img);
// Crops [x0, x0+cw) x [y0, y0+ch) and bilinearly resizes back to the source size.
Image crop_resize(const Image& img, int x0, int y0, int cw, int ch);
// v' = clamp((v - 128) * contrast + 128 + brightness).
Image adjust_brightness_contrast(const Image& img, double brightness, double contrast);

}  // namespace hullgauge
