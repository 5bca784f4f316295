#pragma once

#include <cstring>
#include <vector>

#include "hullgauge/kernels.hpp"

namespace hullgauge::kernels::detail {

// Zero-padded copy of a CHW tensor (pad 1 on each spatial side). Both
// backends pad rather than branch on borders so that every output element
// accumulates exactly the same term sequence.
inline std::vector<double> pad_chw(const ConvShape& s, const double* in) {
  const int ph = s.in_h + 2, pw = s.in_w + 2;
  std::vector<double> padded(static_cast<std::size_t>(s.in_c) * ph * pw, 0.0);
  for (int c = 0; c < s.in_c; ++c) {
    const double* src = in + static_cast<std::size_t>(c) * s.in_h * s.in_w;
    double* dst = padded.data() + static_cast<std::size_t>(c) * ph * pw;
    for (int y = 0; y < s.in_h; ++y)
      std::memcpy(dst + (y + 1) * pw + 1, src + y * s.in_w, sizeof(double) * s.in_w);
  }
  return padded;
}

}  // namespace hullgauge::kernels::detail
