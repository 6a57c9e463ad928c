#include "xai/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <vector>

namespace xai::kernels {

namespace {

// Copies [C,H,W] into a zero-padded [C,H+2m,W+2m] buffer.
std::vector<double> pad_planes(const double* in, std::size_t C, std::size_t H, std::size_t W,
                               std::size_t m) {
    const std::size_t Hp = H + 2 * m, Wp = W + 2 * m;
    std::vector<double> out(C * Hp * Wp, 0.0);
    for (std::size_t c = 0; c < C; ++c)
        for (std::size_t y = 0; y < H; ++y)
            std::memcpy(out.data() + (c * Hp + y + m) * Wp + m,
                        in + (c * H + y) * W, W * sizeof(double));
    return out;
}

} // namespace

void conv2d_forward(const double* in, std::size_t C, std::size_t H, std::size_t W,
                    const double* w, const double* bias,
                    std::size_t OC, std::size_t k, std::size_t pad, double* out) {
    const std::size_t Hp = H + 2 * pad, Wp = W + 2 * pad;
    const std::size_t Ho = Hp - k + 1, Wo = Wp - k + 1;
    const std::vector<double> padded = pad_planes(in, C, H, W, pad);

#pragma omp parallel for schedule(static)
    for (long long oc = 0; oc < static_cast<long long>(OC); ++oc) {
        double* oplane = out + static_cast<std::size_t>(oc) * Ho * Wo;
        std::fill(oplane, oplane + Ho * Wo, bias[oc]);
        for (std::size_t ic = 0; ic < C; ++ic)
            for (std::size_t ky = 0; ky < k; ++ky)
                for (std::size_t kx = 0; kx < k; ++kx) {
                    const double wv = w[((static_cast<std::size_t>(oc) * C + ic) * k + ky) * k + kx];
                    const double* src = padded.data() + (ic * Hp + ky) * Wp + kx;
                    for (std::size_t y = 0; y < Ho; ++y) {
                        const double* s = src + y * Wp;
                        double* o = oplane + y * Wo;
                        for (std::size_t x = 0; x < Wo; ++x) o[x] += wv * s[x];
                    }
                }
    }
}

void conv2d_backward_input(const double* dout, std::size_t OC, std::size_t Ho, std::size_t Wo,
                           const double* w, std::size_t C, std::size_t k, std::size_t pad,
                           double* din, std::size_t H, std::size_t W) {
    // din[ic][y][x] = sum over (oc,ky,kx) of w[oc][ic][ky][kx] * dout[oc][y+pad-ky][x+pad-kx],
    // realized as a correlation with the flipped kernel over dout padded by k-1-pad.
    const std::size_t m = k - 1 - pad;
    const std::size_t Hd = H + k - 1, Wd = W + k - 1;
    std::vector<double> dpad(OC * Hd * Wd, 0.0);
    for (std::size_t oc = 0; oc < OC; ++oc)
        for (std::size_t y = 0; y < Ho; ++y)
            std::memcpy(dpad.data() + (oc * Hd + y + m) * Wd + m,
                        dout + (oc * Ho + y) * Wo, Wo * sizeof(double));

#pragma omp parallel for schedule(static)
    for (long long ic = 0; ic < static_cast<long long>(C); ++ic) {
        double* dplane = din + static_cast<std::size_t>(ic) * H * W;
        std::fill(dplane, dplane + H * W, 0.0);
        for (std::size_t oc = 0; oc < OC; ++oc)
            for (std::size_t ky = 0; ky < k; ++ky)
                for (std::size_t kx = 0; kx < k; ++kx) {
                    const double wv =
                        w[((oc * C + static_cast<std::size_t>(ic)) * k + (k - 1 - ky)) * k + (k - 1 - kx)];
                    const double* src = dpad.data() + (oc * Hd + ky) * Wd + kx;
                    for (std::size_t y = 0; y < H; ++y) {
                        const double* s = src + y * Wd;
                        double* o = dplane + y * W;
                        for (std::size_t x = 0; x < W; ++x) o[x] += wv * s[x];
                    }
                }
    }
}

void conv2d_backward_params(const double* in, std::size_t C, std::size_t H, std::size_t W,
                            const double* dout, std::size_t OC, std::size_t Ho, std::size_t Wo,
                            std::size_t k, std::size_t pad, double* dw, double* db) {
    const std::size_t Hp = H + 2 * pad, Wp = W + 2 * pad;
    const std::vector<double> padded = pad_planes(in, C, H, W, pad);

#pragma omp parallel for schedule(static)
    for (long long oc = 0; oc < static_cast<long long>(OC); ++oc) {
        const double* dplane = dout + static_cast<std::size_t>(oc) * Ho * Wo;
        double bacc = 0.0;
        for (std::size_t i = 0; i < Ho * Wo; ++i) bacc += dplane[i];
        db[oc] = bacc;
        for (std::size_t ic = 0; ic < C; ++ic)
            for (std::size_t ky = 0; ky < k; ++ky)
                for (std::size_t kx = 0; kx < k; ++kx) {
                    const double* src = padded.data() + (ic * Hp + ky) * Wp + kx;
                    double acc = 0.0;
                    for (std::size_t y = 0; y < Ho; ++y) {
                        const double* s = src + y * Wp;
                        const double* d = dplane + y * Wo;
                        for (std::size_t x = 0; x < Wo; ++x) acc += s[x] * d[x];
                    }
                    dw[((static_cast<std::size_t>(oc) * C + ic) * k + ky) * k + kx] = acc;
                }
    }
}

void affine_forward(const double* in, std::size_t n_in,
                    const double* w, const double* b, std::size_t n_out, double* out) {
    // Four independent accumulators per row; the summation order is fixed by
    // this code, not by the optimizer.
#pragma omp parallel for schedule(static) if (n_out * n_in > (1u << 16))
    for (long long o = 0; o < static_cast<long long>(n_out); ++o) {
        const double* row = w + static_cast<std::size_t>(o) * n_in;
        double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
        std::size_t i = 0;
        for (; i + 4 <= n_in; i += 4) {
            s0 += row[i] * in[i];
            s1 += row[i + 1] * in[i + 1];
            s2 += row[i + 2] * in[i + 2];
            s3 += row[i + 3] * in[i + 3];
        }
        double s = (s0 + s1) + (s2 + s3);
        for (; i < n_in; ++i) s += row[i] * in[i];
        out[o] = s + b[o];
    }
}

void affine_backward_input(const double* dout, std::size_t n_out,
                           const double* w, std::size_t n_in, double* din) {
    std::fill(din, din + n_in, 0.0);
    for (std::size_t o = 0; o < n_out; ++o) {
        const double g = dout[o];
        const double* row = w + o * n_in;
        for (std::size_t i = 0; i < n_in; ++i) din[i] += g * row[i];
    }
}

void affine_backward_params(const double* in, std::size_t n_in,
                            const double* dout, std::size_t n_out, double* dw, double* db) {
#pragma omp parallel for schedule(static) if (n_out * n_in > (1u << 16))
    for (long long o = 0; o < static_cast<long long>(n_out); ++o) {
        const double g = dout[o];
        db[o] = g;
        double* row = dw + static_cast<std::size_t>(o) * n_in;
        for (std::size_t i = 0; i < n_in; ++i) row[i] = g * in[i];
    }
}

void relu_forward(const double* in, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = in[i] > 0.0 ? in[i] : 0.0;
}

void relu_backward(const double* fwd_in, const double* upstream, double* out,
                   std::size_t n, bool guided) {
    if (guided) {
        for (std::size_t i = 0; i < n; ++i)
            out[i] = (fwd_in[i] > 0.0 && upstream[i] > 0.0) ? upstream[i] : 0.0;
    } else {
        for (std::size_t i = 0; i < n; ++i)
            out[i] = fwd_in[i] > 0.0 ? upstream[i] : 0.0;
    }
}

void maxpool2_forward(const double* in, std::size_t C, std::size_t H, std::size_t W,
                      double* out, std::uint32_t* argmax) {
    const std::size_t Ho = H / 2, Wo = W / 2;
#pragma omp parallel for schedule(static) if (C * H * W > (1u << 14))
    for (long long c = 0; c < static_cast<long long>(C); ++c) {
        const double* plane = in + static_cast<std::size_t>(c) * H * W;
        double* oplane = out + static_cast<std::size_t>(c) * Ho * Wo;
        std::uint32_t* aplane = argmax + static_cast<std::size_t>(c) * Ho * Wo;
        for (std::size_t y = 0; y < Ho; ++y)
            for (std::size_t x = 0; x < Wo; ++x) {
                // Window scanned in row-major order; strict > keeps the first
                // maximum, so ties route deterministically.
                std::size_t best = (2 * y) * W + 2 * x;
                double bv = plane[best];
                const std::size_t cands[3] = {(2 * y) * W + 2 * x + 1,
                                              (2 * y + 1) * W + 2 * x,
                                              (2 * y + 1) * W + 2 * x + 1};
                for (std::size_t idx : cands)
                    if (plane[idx] > bv) { bv = plane[idx]; best = idx; }
                oplane[y * Wo + x] = bv;
                aplane[y * Wo + x] = static_cast<std::uint32_t>(best);
            }
    }
}

void maxpool2_backward(const std::uint32_t* argmax, const double* dout,
                       std::size_t C, std::size_t H, std::size_t W, double* din) {
    const std::size_t Ho = H / 2, Wo = W / 2;
    std::fill(din, din + C * H * W, 0.0);
    for (std::size_t c = 0; c < C; ++c) {
        const double* dplane = dout + c * Ho * Wo;
        const std::uint32_t* aplane = argmax + c * Ho * Wo;
        double* iplane = din + c * H * W;
        for (std::size_t i = 0; i < Ho * Wo; ++i) iplane[aplane[i]] += dplane[i];
    }
}

void softmax_forward(const double* in, double* out, std::size_t n) {
    double m = in[0];
    for (std::size_t i = 1; i < n; ++i) m = std::max(m, in[i]);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = std::exp(in[i] - m);
        sum += out[i];
    }
    for (std::size_t i = 0; i < n; ++i) out[i] /= sum;
}

} // namespace xai::kernels
