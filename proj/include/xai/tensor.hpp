#pragma once

#include <cstddef>
#include <vector>

#include "xai/errors.hpp"

namespace xai {

inline std::size_t shape_size(const std::vector<std::size_t>& shape) {
    std::size_t n = 1;
    for (std::size_t d : shape) n *= d;
    return shape.empty() ? 0 : n;
}

// Dense row-major tensor of 64-bit reals with an optional gradient buffer.
// 64-bit throughout: the gradient-check tolerances used by the test suites
// are unreachable in single precision.
struct Tensor {
    std::vector<std::size_t> shape;
    std::vector<double> data;
    std::vector<double> grad;   // empty unless materialized; same length as data otherwise

    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> s)
        : shape(std::move(s)), data(shape_size(shape), 0.0) {}
    Tensor(std::vector<std::size_t> s, std::vector<double> values)
        : shape(std::move(s)), data(std::move(values)) {
        if (data.size() != shape_size(shape))
            throw DimensionError("tensor data length does not match shape");
    }

    static Tensor zeros(std::vector<std::size_t> s) { return Tensor(std::move(s)); }

    std::size_t size() const { return data.size(); }
    std::size_t rank() const { return shape.size(); }
    bool has_grad() const { return !grad.empty(); }
    void ensure_grad() { if (grad.size() != data.size()) grad.assign(data.size(), 0.0); }
    bool all_finite() const;
};

} // namespace xai
