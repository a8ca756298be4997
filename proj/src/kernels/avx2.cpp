// AVX2+FMA kernels.  bond_trig uses a 4-lane sincos (Cody-Waite reduction by
// pi/2 plus Cephes-style minimax polynomials on [-pi/4, pi/4]); the windowed
// reductions are straight FMA accumulations.  Lanes with |x| > 1e6 fall back
// to libm, keeping the reduction error below ~2e-15 everywhere the vector
// path runs.

#if defined(SPINSQUEEZE_HAVE_AVX2)

#include <cmath>
#include <cstdint>
#include <immintrin.h>

#include "kernel_impl.hpp"

namespace spinsqueeze::kernels::detail {

namespace {

constexpr double kTwoOverPi = 6.36619772367581382433e-01;
// pi/2 = kPio2Hi + kPio2Tail; the high part carries 33 significant bits so
// q * kPio2Hi is exact for quadrant counts up to 2^20.
constexpr double kPio2Hi = 1.57079632673412561417e+00;
constexpr double kPio2Tail = 6.07710050650619224932e-11;
constexpr double kVectorRangeLimit = 1.0e6;

// sin(r) ~ r + r z P(z), cos(r) ~ 1 - z/2 + z^2 Q(z), z = r^2, |r| <= pi/4
constexpr double kS1 = -1.66666666666666307295e-01;
constexpr double kS2 = 8.33333333332211858878e-03;
constexpr double kS3 = -1.98412698295895385996e-04;
constexpr double kS4 = 2.75573136213857245213e-06;
constexpr double kS5 = -2.50507477628578072866e-08;
constexpr double kS6 = 1.58962301576546568060e-10;

constexpr double kC1 = 4.16666666666665929218e-02;
constexpr double kC2 = -1.38888888888730564116e-03;
constexpr double kC3 = 2.48015872888517179954e-05;
constexpr double kC4 = -2.75573141792967388112e-07;
constexpr double kC5 = 2.08757008419747316778e-09;
constexpr double kC6 = -1.13585365213876817300e-11;

inline __m256d widen_mask(__m128i m32) {
    return _mm256_castsi256_pd(_mm256_cvtepi32_epi64(m32));
}

inline void sincos4(__m256d x, __m256d& s_out, __m256d& c_out) {
    const __m256d q = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(kTwoOverPi)),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(q, _mm256_set1_pd(kPio2Hi), x);
    r = _mm256_fnmadd_pd(q, _mm256_set1_pd(kPio2Tail), r);
    const __m256d z = _mm256_mul_pd(r, r);

    __m256d ps = _mm256_set1_pd(kS6);
    ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(kS5));
    ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(kS4));
    ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(kS3));
    ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(kS2));
    ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(kS1));
    ps = _mm256_fmadd_pd(_mm256_mul_pd(r, z), ps, r);

    __m256d pc = _mm256_set1_pd(kC6);
    pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(kC5));
    pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(kC4));
    pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(kC3));
    pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(kC2));
    pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(kC1));
    pc = _mm256_fmadd_pd(_mm256_mul_pd(z, z), pc,
                         _mm256_fnmadd_pd(_mm256_set1_pd(0.5), z, _mm256_set1_pd(1.0)));

    // quadrant selection: k & 1 swaps sin/cos, k & 2 and (k+1) & 2 set signs
    const __m128i k = _mm256_cvtpd_epi32(q);
    const __m128i one = _mm_set1_epi32(1);
    const __m128i two = _mm_set1_epi32(2);
    const __m256d swap = widen_mask(_mm_cmpeq_epi32(_mm_and_si128(k, one), one));
    const __m256d sneg = widen_mask(_mm_cmpeq_epi32(_mm_and_si128(k, two), two));
    const __m256d cneg =
        widen_mask(_mm_cmpeq_epi32(_mm_and_si128(_mm_add_epi32(k, one), two), two));

    const __m256d signbit = _mm256_set1_pd(-0.0);
    __m256d s = _mm256_blendv_pd(ps, pc, swap);
    __m256d c = _mm256_blendv_pd(pc, ps, swap);
    s_out = _mm256_xor_pd(s, _mm256_and_pd(sneg, signbit));
    c_out = _mm256_xor_pd(c, _mm256_and_pd(cneg, signbit));
}

void bond_trig_avx2(const double* chi, std::size_t n, double half_t, double* c, double* s) {
    const __m256d ht = _mm256_set1_pd(half_t);
    const __m256d limit = _mm256_set1_pd(kVectorRangeLimit);
    const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d x = _mm256_mul_pd(_mm256_loadu_pd(chi + i), ht);
        __m256d sv, cv;
        sincos4(x, sv, cv);
        const int oob =
            _mm256_movemask_pd(_mm256_cmp_pd(_mm256_and_pd(x, abs_mask), limit, _CMP_GT_OQ));
        if (oob != 0) {
            alignas(32) double xs[4];
            _mm256_store_pd(xs, x);
            alignas(32) double ss[4], cs[4];
            _mm256_store_pd(ss, sv);
            _mm256_store_pd(cs, cv);
            for (int lane = 0; lane < 4; ++lane) {
                if (oob & (1 << lane)) {
                    ss[lane] = std::sin(xs[lane]);
                    cs[lane] = std::cos(xs[lane]);
                }
            }
            sv = _mm256_load_pd(ss);
            cv = _mm256_load_pd(cs);
        }
        _mm256_storeu_pd(c + i, cv);
        _mm256_storeu_pd(s + i, sv);
    }
    for (; i < n; ++i) {
        const double x = chi[i] * half_t;
        c[i] = std::cos(x);
        s[i] = std::sin(x);
    }
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d sum2 = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(sum2, _mm_unpackhi_pd(sum2, sum2)));
}

ChainSums windowed_avx2(const double* c, const double* s, std::size_t n) {
    __m256d acc_cc = _mm256_setzero_pd();
    __m256d acc_quad = _mm256_setzero_pd();
    __m256d acc_pair = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d c0 = _mm256_loadu_pd(c + i);
        const __m256d c1 = _mm256_loadu_pd(c + i + 1);
        const __m256d c3 = _mm256_loadu_pd(c + i + 3);
        const __m256d s0 = _mm256_loadu_pd(s + i);
        const __m256d s1 = _mm256_loadu_pd(s + i + 1);
        const __m256d s2 = _mm256_loadu_pd(s + i + 2);
        acc_cc = _mm256_fmadd_pd(c0, c1, acc_cc);
        acc_quad = _mm256_fmadd_pd(_mm256_mul_pd(_mm256_mul_pd(c0, s1), s2), c3, acc_quad);
        acc_pair = _mm256_fmadd_pd(s0, c1, _mm256_fmadd_pd(c0, s1, acc_pair));
    }
    ChainSums out{hsum(acc_cc), hsum(acc_quad), hsum(acc_pair)};
    for (; i < n; ++i) {
        out.cos_pair += c[i] * c[i + 1];
        out.quad += c[i] * s[i + 1] * s[i + 2] * c[i + 3];
        out.sin_pair += s[i] * c[i + 1] + c[i] * s[i + 1];
    }
    return out;
}

} // namespace

bool avx2_usable() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

const Impl avx2_impl = {&bond_trig_avx2, &windowed_avx2};

} // namespace spinsqueeze::kernels::detail

#endif // SPINSQUEEZE_HAVE_AVX2
