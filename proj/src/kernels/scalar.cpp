// Reference kernels. Plain C++ loops, no vector extensions; the AVX2 variants
// in avx2.cpp must reproduce these results bit for bit.

#include <vector>

#include "common.hpp"
#include "hullgauge/kernels.hpp"

namespace hullgauge::kernels {
namespace {

void conv3x3_forward_scalar(const ConvShape& s, const double* in, const double* w_fwd,
                            const double* bias, double* out) {
  const int oh = s.out_h(), ow = s.out_w(), oc_n = s.out_c;
  const int pw = s.in_w + 2;
  const std::vector<double> padded = detail::pad_chw(s, in);
  std::vector<double> acc(oc_n);
  for (int oy = 0; oy < oh; ++oy) {
    for (int ox = 0; ox < ow; ++ox) {
      for (int oc = 0; oc < oc_n; ++oc) acc[oc] = bias[oc];
      for (int ic = 0; ic < s.in_c; ++ic) {
        const double* plane = padded.data() + static_cast<std::size_t>(ic) * (s.in_h + 2) * pw;
        for (int ky = 0; ky < 3; ++ky) {
          const double* row = plane + (oy * s.stride + ky) * pw + ox * s.stride;
          for (int kx = 0; kx < 3; ++kx) {
            const double x = row[kx];
            const double* w = w_fwd + (static_cast<std::size_t>(ic * 3 + ky) * 3 + kx) * oc_n;
            for (int oc = 0; oc < oc_n; ++oc) acc[oc] = acc[oc] + x * w[oc];
          }
        }
      }
      for (int oc = 0; oc < oc_n; ++oc)
        out[(static_cast<std::size_t>(oc) * oh + oy) * ow + ox] = acc[oc];
    }
  }
}

void conv3x3_backward_weights_scalar(const ConvShape& s, const double* in,
                                     const double* dout_hwc, double* dw_fwd, double* dbias) {
  const int oh = s.out_h(), ow = s.out_w(), oc_n = s.out_c;
  const int pw = s.in_w + 2;
  const std::vector<double> padded = detail::pad_chw(s, in);
  for (int ic = 0; ic < s.in_c; ++ic) {
    const double* plane = padded.data() + static_cast<std::size_t>(ic) * (s.in_h + 2) * pw;
    for (int ky = 0; ky < 3; ++ky) {
      for (int kx = 0; kx < 3; ++kx) {
        double* dw = dw_fwd + (static_cast<std::size_t>(ic * 3 + ky) * 3 + kx) * oc_n;
        for (int oy = 0; oy < oh; ++oy) {
          const double* row = plane + (oy * s.stride + ky) * pw + kx;
          for (int ox = 0; ox < ow; ++ox) {
            const double x = row[ox * s.stride];
            const double* g = dout_hwc + (static_cast<std::size_t>(oy) * ow + ox) * oc_n;
            for (int oc = 0; oc < oc_n; ++oc) dw[oc] = dw[oc] + x * g[oc];
          }
        }
      }
    }
  }
  for (int oy = 0; oy < oh; ++oy)
    for (int ox = 0; ox < ow; ++ox) {
      const double* g = dout_hwc + (static_cast<std::size_t>(oy) * ow + ox) * oc_n;
      for (int oc = 0; oc < oc_n; ++oc) dbias[oc] = dbias[oc] + g[oc];
    }
}

void conv3x3_backward_input_scalar(const ConvShape& s, const double* dout,
                                   const double* w_bwd, double* din) {
  const int oh = s.out_h(), ow = s.out_w(), ic_n = s.in_c;
  const int ph = s.in_h + 2, pw = s.in_w + 2;
  // Padded gradient in HWC ([iy][ix][ic]); interior is copied out at the end.
  std::vector<double> dpad(static_cast<std::size_t>(ph) * pw * ic_n, 0.0);
  for (int oc = 0; oc < s.out_c; ++oc) {
    const double* dplane = dout + static_cast<std::size_t>(oc) * oh * ow;
    for (int oy = 0; oy < oh; ++oy) {
      for (int ox = 0; ox < ow; ++ox) {
        const double g = dplane[static_cast<std::size_t>(oy) * ow + ox];
        for (int ky = 0; ky < 3; ++ky) {
          double* drow = dpad.data() +
                         (static_cast<std::size_t>(oy * s.stride + ky) * pw + ox * s.stride) * ic_n;
          const double* w = w_bwd + static_cast<std::size_t>(oc * 3 + ky) * 3 * ic_n;
          for (int kx = 0; kx < 3; ++kx) {
            double* d = drow + kx * ic_n;
            const double* wk = w + kx * ic_n;
            for (int ic = 0; ic < ic_n; ++ic) d[ic] = d[ic] + g * wk[ic];
          }
        }
      }
    }
  }
  for (int ic = 0; ic < ic_n; ++ic)
    for (int y = 0; y < s.in_h; ++y)
      for (int x = 0; x < s.in_w; ++x)
        din[(static_cast<std::size_t>(ic) * s.in_h + y) * s.in_w + x] =
            dpad[(static_cast<std::size_t>(y + 1) * pw + (x + 1)) * ic_n + ic];
}

void relu_forward_scalar(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_backward_scalar(const double* y, const double* dy, double* dx, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dx[i] = y[i] > 0.0 ? dy[i] : 0.0;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + a * x[i];
}

void scale_scalar(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] = a * x[i];
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{
      conv3x3_forward_scalar,  conv3x3_backward_weights_scalar,
      conv3x3_backward_input_scalar,
      relu_forward_scalar,     relu_backward_scalar,
      axpy_scalar,             scale_scalar,
  };
  return table;
}

}  // namespace hullgauge::kernels
