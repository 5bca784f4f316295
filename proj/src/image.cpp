#include "hullgauge/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

namespace hullgauge {

void write_ppm(const Image& img, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << "P6\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.data.data()),
            static_cast<std::streamsize>(img.data.size()));
  if (!out) throw std::runtime_error("short write: " + path.string());
}

namespace {
int read_ppm_token(std::istream& in) {
  // Skips whitespace and '#' comments between header fields.
  int c = in.get();
  while (c == '#' || std::isspace(c)) {
    if (c == '#') {
      while (c != '\n' && c != EOF) c = in.get();
    }
    c = in.get();
  }
  int value = 0;
  bool any = false;
  while (std::isdigit(c)) {
    value = value * 10 + (c - '0');
    any = true;
    c = in.get();
  }
  if (!any) throw std::runtime_error("malformed PPM header");
  return value;
}
}  // namespace

Image read_ppm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path.string());
  char magic[2];
  in.read(magic, 2);
  if (!in || magic[0] != 'P' || magic[1] != '6')
    throw std::runtime_error("not a P6 PPM: " + path.string());
  int w = read_ppm_token(in);
  int h = read_ppm_token(in);
  int maxval = read_ppm_token(in);
  if (maxval != 255) throw std::runtime_error("unsupported PPM maxval: " + std::to_string(maxval));
  Image img(w, h);
  in.read(reinterpret_cast<char*>(img.data.data()),
          static_cast<std::streamsize>(img.data.size()));
  if (!in) throw std::runtime_error("truncated PPM: " + path.string());
  return img;
}

Image rotate90(const Image& img, int quarter_turns) {
  int k = ((quarter_turns % 4) + 4) % 4;
  if (k == 0) return img;
  const int w = img.width, h = img.height;
  Image out = (k == 2) ? Image(w, h) : Image(h, w);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      int ny, nx;
      if (k == 1) {        // 90 degrees CCW: (y,x) -> (w-1-x, y)
        ny = w - 1 - x;
        nx = y;
      } else if (k == 2) {  // 180
        ny = h - 1 - y;
        nx = w - 1 - x;
      } else {              // 270 CCW
        ny = x;
        nx = h - 1 - y;
      }
      for (int c = 0; c < 3; ++c) out.at(ny, nx, c) = img.at(y, x, c);
    }
  }
  return out;
}

Image hflip(const Image& img) {
  Image out(img.width, img.height);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x)
      for (int c = 0; c < 3; ++c) out.at(y, img.width - 1 - x, c) = img.at(y, x, c);
  return out;
}

Image crop_resize(const Image& img, int x0, int y0, int cw, int ch) {
  if (cw <= 0 || ch <= 0 || x0 < 0 || y0 < 0 || x0 + cw > img.width || y0 + ch > img.height)
    throw std::invalid_argument("crop window out of bounds");
  Image out(img.width, img.height);
  const double sx = static_cast<double>(cw) / img.width;
  const double sy = static_cast<double>(ch) / img.height;
  for (int y = 0; y < img.height; ++y) {
    double fy = y0 + (y + 0.5) * sy - 0.5;
    fy = std::clamp(fy, static_cast<double>(y0), static_cast<double>(y0 + ch - 1));
    int iy = static_cast<int>(fy);
    iy = std::min(iy, y0 + ch - 2 >= y0 ? y0 + ch - 2 : y0);
    double wy = fy - iy;
    if (ch == 1) { iy = y0; wy = 0.0; }
    for (int x = 0; x < img.width; ++x) {
      double fx = x0 + (x + 0.5) * sx - 0.5;
      fx = std::clamp(fx, static_cast<double>(x0), static_cast<double>(x0 + cw - 1));
      int ix = static_cast<int>(fx);
      ix = std::min(ix, x0 + cw - 2 >= x0 ? x0 + cw - 2 : x0);
      double wx = fx - ix;
      if (cw == 1) { ix = x0; wx = 0.0; }
      for (int c = 0; c < 3; ++c) {
        double v00 = img.at(iy, ix, c);
        double v01 = img.at(iy, std::min(ix + 1, x0 + cw - 1), c);
        double v10 = img.at(std::min(iy + 1, y0 + ch - 1), ix, c);
        double v11 = img.at(std::min(iy + 1, y0 + ch - 1), std::min(ix + 1, x0 + cw - 1), c);
        double v = (1 - wy) * ((1 - wx) * v00 + wx * v01) + wy * ((1 - wx) * v10 + wx * v11);
        out.at(y, x, c) = static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
      }
    }
  }
  return out;
}

Image adjust_brightness_contrast(const Image& img, double brightness, double contrast) {
  Image out(img.width, img.height);
  for (std::size_t i = 0; i < img.data.size(); ++i) {
    double v = (static_cast<double>(img.data[i]) - 128.0) * contrast + 128.0 + brightness;
    out.data[i] = static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
  }
  return out;
}

}  // namespace hullgauge
