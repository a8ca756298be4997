// Reference kernels: plain libm loops, the ground truth the SIMD backends are
// equivalence-tested against.

#include <cmath>

#include "kernel_impl.hpp"

namespace spinsqueeze::kernels::detail {

namespace {

void bond_trig_scalar(const double* chi, std::size_t n, double half_t, double* c, double* s) {
    for (std::size_t i = 0; i < n; ++i) {
        const double x = chi[i] * half_t;
        c[i] = std::cos(x);
        s[i] = std::sin(x);
    }
}

ChainSums windowed_scalar(const double* c, const double* s, std::size_t n) {
    ChainSums out;
    for (std::size_t i = 0; i < n; ++i) {
        out.cos_pair += c[i] * c[i + 1];
        out.quad += c[i] * s[i + 1] * s[i + 2] * c[i + 3];
        out.sin_pair += s[i] * c[i + 1] + c[i] * s[i + 1];
    }
    return out;
}

} // namespace

const Impl scalar_impl = {&bond_trig_scalar, &windowed_scalar};

} // namespace spinsqueeze::kernels::detail
