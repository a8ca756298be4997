#pragma once

// Internal backend table shared by the kernel translation units.

#include <cstddef>

#include "spinsqueeze/kernels.hpp"

namespace spinsqueeze::kernels::detail {

// bond_trig: fill c[i] = cos(chi[i]*half_t), s[i] = sin(chi[i]*half_t), i < n.
// windowed:  the three reductions over arrays padded with a 3-element cyclic
//            wrap (c[n+k] = c[k], likewise s), so the loops stay linear.
struct Impl {
    void (*bond_trig)(const double* chi, std::size_t n, double half_t, double* c, double* s);
    ChainSums (*windowed)(const double* c, const double* s, std::size_t n);
};

extern const Impl scalar_impl;
#if defined(SPINSQUEEZE_HAVE_AVX2)
extern const Impl avx2_impl;
bool avx2_usable(); // CPU supports AVX2 + FMA
#endif

} // namespace spinsqueeze::kernels::detail
