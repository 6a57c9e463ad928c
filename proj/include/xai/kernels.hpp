#pragma once

#include <cstddef>
#include <cstdint>

// Numeric kernels behind the autodiff layer ops. Hot loops are written so that
// every output element is accumulated by exactly one thread in a fixed order:
// results are bit-identical for any OpenMP thread count, which is what the
// whole-artifact determinism contracts rely on. xai::refk holds naive serial
// textbook versions of the same kernels, kept as an independent reference for
// tests and the benchmark tool.

namespace xai::kernels {

// Convolution, stride 1, symmetric zero padding.
// in: [C,H,W], w: [OC,C,k,k], bias: [OC], out: [OC,Ho,Wo] with Ho = H+2p-k+1.
void conv2d_forward(const double* in, std::size_t C, std::size_t H, std::size_t W,
                    const double* w, const double* bias,
                    std::size_t OC, std::size_t k, std::size_t pad, double* out);

void conv2d_backward_input(const double* dout, std::size_t OC, std::size_t Ho, std::size_t Wo,
                           const double* w, std::size_t C, std::size_t k, std::size_t pad,
                           double* din, std::size_t H, std::size_t W);

void conv2d_backward_params(const double* in, std::size_t C, std::size_t H, std::size_t W,
                            const double* dout, std::size_t OC, std::size_t Ho, std::size_t Wo,
                            std::size_t k, std::size_t pad, double* dw, double* db);

// out = W x + b with W: [n_out, n_in] row-major.
void affine_forward(const double* in, std::size_t n_in,
                    const double* w, const double* b, std::size_t n_out, double* out);
void affine_backward_input(const double* dout, std::size_t n_out,
                           const double* w, std::size_t n_in, double* din);
void affine_backward_params(const double* in, std::size_t n_in,
                            const double* dout, std::size_t n_out, double* dw, double* db);

void relu_forward(const double* in, double* out, std::size_t n);
// Standard: pass upstream where forward input > 0. Guided: additionally require
// upstream > 0; everything else is zeroed.
void relu_backward(const double* fwd_in, const double* upstream, double* out,
                   std::size_t n, bool guided);

// 2x2 max pooling, stride 2; H and W must be even. argmax holds, per output
// element, the flat in-plane index of the selected input (first maximum in
// row-major order on ties).
void maxpool2_forward(const double* in, std::size_t C, std::size_t H, std::size_t W,
                      double* out, std::uint32_t* argmax);
void maxpool2_backward(const std::uint32_t* argmax, const double* dout,
                       std::size_t C, std::size_t H, std::size_t W, double* din);

// Numerically stable; output strictly positive, sums to 1 up to roundoff.
void softmax_forward(const double* in, double* out, std::size_t n);

} // namespace xai::kernels

namespace xai::refk {

void conv2d_forward(const double* in, std::size_t C, std::size_t H, std::size_t W,
                    const double* w, const double* bias,
                    std::size_t OC, std::size_t k, std::size_t pad, double* out);
void conv2d_backward_input(const double* dout, std::size_t OC, std::size_t Ho, std::size_t Wo,
                           const double* w, std::size_t C, std::size_t k, std::size_t pad,
                           double* din, std::size_t H, std::size_t W);
void conv2d_backward_params(const double* in, std::size_t C, std::size_t H, std::size_t W,
                            const double* dout, std::size_t OC, std::size_t Ho, std::size_t Wo,
                            std::size_t k, std::size_t pad, double* dw, double* db);
void affine_forward(const double* in, std::size_t n_in,
                    const double* w, const double* b, std::size_t n_out, double* out);
void maxpool2_forward(const double* in, std::size_t C, std::size_t H, std::size_t W,
                      double* out, std::uint32_t* argmax);

} // namespace xai::refk
