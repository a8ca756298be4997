#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace spinsqueeze::kernels {

enum class Backend { scalar, avx2 };

const char* name(Backend b);
bool parse_backend(std::string_view text, Backend& out); // "scalar" / "avx2"

// Backends compiled in AND usable on this host (scalar is always first).
std::vector<Backend> supported();

Backend active();

// Returns false (and leaves the selection unchanged) if the backend is not
// supported on this host.  The environment variable SPINSQUEEZE_KERNEL
// ("scalar" or "avx2") overrides the initial auto selection.
bool set_backend(Backend b);

// The three cyclic windowed reductions every closed-form squeezing expression
// is built from, with c_i = cos(chi_i t/2) and s_i = sin(chi_i t/2):
//   cos_pair = sum_i c_i c_{i+1}
//   quad     = sum_i c_i s_{i+1} s_{i+2} c_{i+3}
//   sin_pair = sum_i (s_i c_{i+1} + c_i s_{i+1})   [= sum_i sin((chi_i+chi_{i+1}) t/2)]
struct ChainSums {
    double cos_pair = 0.0;
    double quad = 0.0;
    double sin_pair = 0.0;
};

ChainSums chain_sums(std::span<const double> couplings, double t);

// c[i] = cos(couplings[i] * half_t), s[i] = sin(couplings[i] * half_t).
// c and s must have at least couplings.size() elements.
void bond_trig(std::span<const double> couplings, double half_t,
               std::span<double> c, std::span<double> s);

} // namespace spinsqueeze::kernels
