// AVX2 kernel variants. Each output element accumulates its terms in exactly
// the same order as the scalar reference (vector lanes are independent
// elements, never partial sums of one element), multiplies and adds are kept
// separate, so results are bit-identical to scalar.cpp.

#include <immintrin.h>

#include <algorithm>
#include <vector>

#include "common.hpp"
#include "hullgauge/kernels.hpp"

namespace hullgauge::kernels {
namespace {

void conv3x3_forward_avx2(const ConvShape& s, const double* in, const double* w_fwd,
                          const double* bias, double* out) {
  const int oh = s.out_h(), ow = s.out_w(), oc_n = s.out_c;
  const int pw = s.in_w + 2;
  const std::vector<double> padded = detail::pad_chw(s, in);
  const std::size_t plane_stride = static_cast<std::size_t>(s.in_h + 2) * pw;
  const int ocv = oc_n & ~3;

  for (int oy = 0; oy < oh; ++oy) {
    for (int ox0 = 0; ox0 < ow; ox0 += 4) {
      const int nx = std::min(4, ow - ox0);
      for (int oc0 = 0; oc0 < ocv; oc0 += 4) {
        __m256d acc[4];
        const __m256d b = _mm256_loadu_pd(bias + oc0);
        for (int u = 0; u < nx; ++u) acc[u] = b;
        for (int ic = 0; ic < s.in_c; ++ic) {
          const double* plane = padded.data() + ic * plane_stride;
          for (int ky = 0; ky < 3; ++ky) {
            const double* row = plane + (oy * s.stride + ky) * pw;
            for (int kx = 0; kx < 3; ++kx) {
              const __m256d w = _mm256_loadu_pd(
                  w_fwd + (static_cast<std::size_t>(ic * 3 + ky) * 3 + kx) * oc_n + oc0);
              for (int u = 0; u < nx; ++u) {
                const __m256d x = _mm256_set1_pd(row[(ox0 + u) * s.stride + kx]);
                acc[u] = _mm256_add_pd(acc[u], _mm256_mul_pd(x, w));
              }
            }
          }
        }
        for (int u = 0; u < nx; ++u) {
          alignas(32) double lanes[4];
          _mm256_store_pd(lanes, acc[u]);
          for (int k = 0; k < 4; ++k)
            out[(static_cast<std::size_t>(oc0 + k) * oh + oy) * ow + (ox0 + u)] = lanes[k];
        }
      }
      for (int oc = ocv; oc < oc_n; ++oc) {
        for (int u = 0; u < nx; ++u) {
          double acc = bias[oc];
          for (int ic = 0; ic < s.in_c; ++ic) {
            const double* plane = padded.data() + ic * plane_stride;
            for (int ky = 0; ky < 3; ++ky) {
              const double* row = plane + (oy * s.stride + ky) * pw + (ox0 + u) * s.stride;
              for (int kx = 0; kx < 3; ++kx)
                acc = acc + row[kx] *
                                w_fwd[(static_cast<std::size_t>(ic * 3 + ky) * 3 + kx) * oc_n + oc];
            }
          }
          out[(static_cast<std::size_t>(oc) * oh + oy) * ow + (ox0 + u)] = acc;
        }
      }
    }
  }
}

void conv3x3_backward_weights_avx2(const ConvShape& s, const double* in,
                                   const double* dout_hwc, double* dw_fwd, double* dbias) {
  const int oh = s.out_h(), ow = s.out_w(), oc_n = s.out_c;
  const int pw = s.in_w + 2;
  const std::vector<double> padded = detail::pad_chw(s, in);
  const std::size_t plane_stride = static_cast<std::size_t>(s.in_h + 2) * pw;
  const int ocv = oc_n & ~3;

  for (int ic = 0; ic < s.in_c; ++ic) {
    const double* plane = padded.data() + ic * plane_stride;
    for (int ky = 0; ky < 3; ++ky) {
      double* dw0 = dw_fwd + static_cast<std::size_t>(ic * 3 + ky) * 3 * oc_n;
      for (int oc0 = 0; oc0 < ocv; oc0 += 4) {
        // Three kx positions advance as independent accumulator chains; each
        // shares the upstream-gradient load for the current (oy, ox).
        __m256d acc0 = _mm256_loadu_pd(dw0 + 0 * oc_n + oc0);
        __m256d acc1 = _mm256_loadu_pd(dw0 + 1 * oc_n + oc0);
        __m256d acc2 = _mm256_loadu_pd(dw0 + 2 * oc_n + oc0);
        for (int oy = 0; oy < oh; ++oy) {
          const double* row = plane + (oy * s.stride + ky) * pw;
          const double* grow = dout_hwc + static_cast<std::size_t>(oy) * ow * oc_n + oc0;
          for (int ox = 0; ox < ow; ++ox) {
            const __m256d g = _mm256_loadu_pd(grow + static_cast<std::size_t>(ox) * oc_n);
            const double* x = row + ox * s.stride;
            acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_set1_pd(x[0]), g));
            acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_set1_pd(x[1]), g));
            acc2 = _mm256_add_pd(acc2, _mm256_mul_pd(_mm256_set1_pd(x[2]), g));
          }
        }
        _mm256_storeu_pd(dw0 + 0 * oc_n + oc0, acc0);
        _mm256_storeu_pd(dw0 + 1 * oc_n + oc0, acc1);
        _mm256_storeu_pd(dw0 + 2 * oc_n + oc0, acc2);
      }
      for (int oc = ocv; oc < oc_n; ++oc) {
        for (int kx = 0; kx < 3; ++kx) {
          double acc = dw0[kx * oc_n + oc];
          for (int oy = 0; oy < oh; ++oy) {
            const double* row = plane + (oy * s.stride + ky) * pw + kx;
            for (int ox = 0; ox < ow; ++ox)
              acc = acc + row[ox * s.stride] *
                              dout_hwc[(static_cast<std::size_t>(oy) * ow + ox) * oc_n + oc];
          }
          dw0[kx * oc_n + oc] = acc;
        }
      }
    }
  }

  for (int oc0 = 0; oc0 < ocv; oc0 += 4) {
    __m256d acc = _mm256_loadu_pd(dbias + oc0);
    for (int oy = 0; oy < oh; ++oy)
      for (int ox = 0; ox < ow; ++ox)
        acc = _mm256_add_pd(
            acc, _mm256_loadu_pd(dout_hwc + (static_cast<std::size_t>(oy) * ow + ox) * oc_n + oc0));
    _mm256_storeu_pd(dbias + oc0, acc);
  }
  for (int oc = ocv; oc < oc_n; ++oc) {
    double acc = dbias[oc];
    for (int oy = 0; oy < oh; ++oy)
      for (int ox = 0; ox < ow; ++ox)
        acc = acc + dout_hwc[(static_cast<std::size_t>(oy) * ow + ox) * oc_n + oc];
    dbias[oc] = acc;
  }
}

void conv3x3_backward_input_avx2(const ConvShape& s, const double* dout,
                                 const double* w_bwd, double* din) {
  const int oh = s.out_h(), ow = s.out_w(), ic_n = s.in_c;
  const int ph = s.in_h + 2, pw = s.in_w + 2;
  const int icv = ic_n & ~3;
  std::vector<double> dpad(static_cast<std::size_t>(ph) * pw * ic_n, 0.0);
  for (int oc = 0; oc < s.out_c; ++oc) {
    const double* dplane = dout + static_cast<std::size_t>(oc) * oh * ow;
    for (int oy = 0; oy < oh; ++oy) {
      for (int ox = 0; ox < ow; ++ox) {
        const double gs = dplane[static_cast<std::size_t>(oy) * ow + ox];
        const __m256d g = _mm256_set1_pd(gs);
        for (int ky = 0; ky < 3; ++ky) {
          double* drow = dpad.data() +
                         (static_cast<std::size_t>(oy * s.stride + ky) * pw + ox * s.stride) * ic_n;
          const double* w = w_bwd + static_cast<std::size_t>(oc * 3 + ky) * 3 * ic_n;
          for (int kx = 0; kx < 3; ++kx) {
            double* d = drow + kx * ic_n;
            const double* wk = w + kx * ic_n;
            int ic = 0;
            for (; ic < icv; ic += 4) {
              const __m256d cur = _mm256_loadu_pd(d + ic);
              const __m256d wv = _mm256_loadu_pd(wk + ic);
              _mm256_storeu_pd(d + ic, _mm256_add_pd(cur, _mm256_mul_pd(g, wv)));
            }
            for (; ic < ic_n; ++ic) d[ic] = d[ic] + gs * wk[ic];
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

void relu_forward_avx2(const double* x, double* y, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_max_pd(_mm256_loadu_pd(x + i), zero));
  for (; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_backward_avx2(const double* y, const double* dy, double* dx, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d mask = _mm256_cmp_pd(_mm256_loadu_pd(y + i), zero, _CMP_GT_OQ);
    _mm256_storeu_pd(dx + i, _mm256_and_pd(mask, _mm256_loadu_pd(dy + i)));
  }
  for (; i < n; ++i) dx[i] = y[i] > 0.0 ? dy[i] : 0.0;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r =
        _mm256_add_pd(_mm256_loadu_pd(y + i), _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
    _mm256_storeu_pd(y + i, r);
  }
  for (; i < n; ++i) y[i] = y[i] + a * x[i];
}

void scale_avx2(double a, double* x, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(x + i, _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) x[i] = a * x[i];
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{
      conv3x3_forward_avx2,  conv3x3_backward_weights_avx2,
      conv3x3_backward_input_avx2,
      relu_forward_avx2,     relu_backward_avx2,
      axpy_avx2,             scale_avx2,
  };
  return table;
}

}  // namespace hullgauge::kernels
