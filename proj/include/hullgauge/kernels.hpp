#pragma once

#include <cstddef>
#include <string>

namespace hullgauge::kernels {

// Data-parallel inner loops of the network, in two interchangeable builds:
// a scalar reference and an AVX2 variant selected at runtime. Both perform
// the same floating-point operations in the same per-element order, with no
// fused multiply-add, so their results are bit-identical; the equivalence
// suite asserts exact equality.
//
// Convolutions are fixed 3x3, zero padding 1. Tensors are CHW, doubles.
// Weight layouts (packed by the caller from the canonical [oc][ic][ky][kx]):
//   forward / backward-weights:  w_fwd  [ic][ky][kx][oc]   (oc fastest)
//   backward-input:              w_bwd  [oc][ky][kx][ic]   (ic fastest)
// dout_hwc is the upstream gradient transposed to [oy][ox][oc].

struct ConvShape {
  int in_c = 0;
  int in_h = 0;
  int in_w = 0;
  int out_c = 0;
  int stride = 1;

  int out_h() const { return (in_h + 2 - 3) / stride + 1; }
  int out_w() const { return (in_w + 2 - 3) / stride + 1; }
};

struct KernelTable {
  void (*conv3x3_forward)(const ConvShape&, const double* in, const double* w_fwd,
                          const double* bias, double* out);
  // dw_fwd and dbias are accumulated into (caller zero-initializes).
  void (*conv3x3_backward_weights)(const ConvShape&, const double* in,
                                   const double* dout_hwc, double* dw_fwd, double* dbias);
  void (*conv3x3_backward_input)(const ConvShape&, const double* dout,
                                 const double* w_bwd, double* din);
  void (*relu_forward)(const double* x, double* y, std::size_t n);
  // dx[i] = y[i] > 0 ? dy[i] : 0, where y is the relu output.
  void (*relu_backward)(const double* y, const double* dy, double* dx, std::size_t n);
  void (*axpy)(double a, const double* x, double* y, std::size_t n);  // y += a*x
  void (*scale)(double a, double* x, std::size_t n);                  // x *= a
};

enum class Backend { kScalar, kAvx2 };

bool avx2_supported();
const KernelTable& table_for(Backend backend);

// Active table used by the network. Defaults to the best supported backend;
// HULLGAUGE_KERNELS=scalar|avx2 overrides, as does select_backend().
const KernelTable& active();
Backend active_backend();
void select_backend(Backend backend);
void select_auto();
std::string backend_name(Backend backend);

}  // namespace hullgauge::kernels
