#include "spinsqueeze/verify.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "spinsqueeze/analytic.hpp"
#include "spinsqueeze/chain.hpp"
#include "spinsqueeze/disorder.hpp"
#include "spinsqueeze/figures.hpp"
#include "spinsqueeze/oracle.hpp"
#include "spinsqueeze/short_time.hpp"

namespace spinsqueeze::verify {

namespace {

double uniform01(std::mt19937_64& eng) { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

double uniform(std::mt19937_64& eng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(eng);
}

CouplingChain random_chain(std::mt19937_64& eng, int n) {
    std::vector<double> chi(static_cast<std::size_t>(n));
    for (auto& c : chi) c = uniform(eng, 0.0, 2.0);
    return CouplingChain(std::move(chi));
}

Orientation random_orientation(std::mt19937_64& eng) {
    return {uniform(eng, 0.0, 2.0 * M_PI), uniform(eng, 0.0, M_PI), uniform(eng, 0.0, 2.0 * M_PI)};
}

shorttime::PairCouplingSet random_pairset(std::mt19937_64& eng, int n) {
    shorttime::PairCouplingSet ps;
    ps.n = n;
    for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
            if (k == l) continue;
            if (uniform01(eng) > 0.6) continue;
            shorttime::PairTerm term;
            term.k = k;
            term.l = l;
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) term.m(r, c) = uniform(eng, -1.0, 1.0);
            ps.terms.push_back(term);
        }
    }
    if (ps.terms.empty()) {
        shorttime::PairTerm term;
        term.k = 1;
        term.l = 2;
        term.m(0, 0) = 1.0;
        ps.terms.push_back(term);
    }
    return ps;
}

double rel_gap(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

} // namespace

CheckResult oracle_equivalence(int n_min, int n_max, int chains_per_n, int times_per_chain,
                               std::uint64_t seed, double tol) {
    CheckResult res;
    char buf[128];
    std::snprintf(buf, sizeof buf, "oracle-equivalence-xi (N=%d..%d, %d chains, %d times)", n_min,
                  n_max, chains_per_n, times_per_chain);
    res.name = buf;
    res.tol = tol;

    std::mt19937_64 eng(seed);
    int skipped = 0;
    int flag_mismatch = 0;
    for (int n = n_min; n <= n_max; ++n) {
        for (int c = 0; c < chains_per_n; ++c) {
            const CouplingChain chain = random_chain(eng, n);
            for (int k = 0; k < times_per_chain; ++k) {
                const double t = uniform(eng, 0.0, 2.0 * M_PI);
                const double a = analytic::xi_pi4(chain, t);
                const auto mo = oracle::moments(
                    oracle::evolve_ising(oracle::prepare_polarized(n, Orientation{}), chain, t));
                const double o = oracle::xi_from_moments(mo, n, QuadratureAngle::pi4());
                if (std::isinf(a) != std::isinf(o)) {
                    ++flag_mismatch;
                    continue;
                }
                if (std::isinf(a)) continue; // flags agree
                const double mean_spin =
                    std::sqrt(mo.jx * mo.jx + mo.jy * mo.jy + mo.jz * mo.jz);
                if (mean_spin < 1e-4) {
                    ++skipped; // ratio of two ~1e-14-accurate quantities by <1e-8
                    continue;
                }
                res.worst = std::max(res.worst, rel_gap(a, o));
            }
        }
    }
    res.pass = res.worst <= tol && flag_mismatch == 0;
    std::snprintf(buf, sizeof buf, "%d ill-conditioned points skipped, %d flag mismatches",
                  skipped, flag_mismatch);
    res.note = buf;
    return res;
}

CheckResult moment_equivalence(int n_min, int n_max, int chains_per_n, int times_per_chain,
                               std::uint64_t seed, double tol) {
    CheckResult res;
    char buf[96];
    std::snprintf(buf, sizeof buf, "moment-equivalence (N=%d..%d)", n_min, n_max);
    res.name = buf;
    res.tol = tol;

    std::mt19937_64 eng(seed);
    for (int n = std::max(5, n_min); n <= n_max; ++n) {
        for (int c = 0; c < chains_per_n; ++c) {
            const CouplingChain chain = random_chain(eng, n);
            for (int k = 0; k < times_per_chain; ++k) {
                const double t = uniform(eng, 0.0, 2.0 * M_PI);
                const auto psi =
                    oracle::evolve_ising(oracle::prepare_polarized(n, Orientation{}), chain, t);
                const auto mo = oracle::moments(psi);
                res.worst = std::max(res.worst, std::abs(analytic::mean_jz(chain, t) - mo.jz));
                res.worst =
                    std::max(res.worst, std::abs(analytic::jy_squared(chain, t) - mo.jy2()));
                res.worst =
                    std::max(res.worst, std::abs(analytic::jxjy_sym(chain, t) - mo.jxjy_sym()));
            }
        }
    }
    res.pass = res.worst <= tol;
    return res;
}

CheckResult reduction_identities(double tol) {
    CheckResult res;
    res.name = "reduction-identities (301-point grid)";
    res.tol = tol;

    const auto grid_compare = [&](auto&& lhs, auto&& rhs) {
        for (int k = 0; k < figures::kGridPoints; ++k) {
            const double t = figures::kGridMax * k / (figures::kGridPoints - 1);
            const double a = lhs(t);
            const double b = rhs(t);
            if (std::isinf(a) || std::isinf(b)) {
                if (std::isinf(a) != std::isinf(b)) res.worst = std::max(res.worst, 1.0);
                continue;
            }
            res.worst = std::max(res.worst, rel_gap(a, b));
        }
    };

    // generic expression on uniform chains vs the uniform closed form
    for (int n = 5; n <= 12; ++n) {
        const CouplingChain chain = make_uniform(n, 1.0);
        grid_compare([&](double t) { return analytic::xi_pi4_general(chain, t); },
                     [](double t) { return analytic::xi_pi4_uniform(1.0, t); });
    }
    // four-spin form on a uniform chain vs the uniform closed form
    grid_compare([](double t) { return analytic::xi_pi4_n4(1.0, 1.0, 1.0, 1.0, t); },
                 [](double t) { return analytic::xi_pi4_uniform(1.0, t); });
    // dimerized limits
    grid_compare([](double t) { return analytic::xi_pi4_dimerized(1.0, 0.0, t); },
                 [](double t) { return analytic::xi_pi4_uniform(1.0, t); });
    grid_compare([](double t) { return analytic::xi_pi4_dimerized(1.0, 1.0, t); },
                 [](double t) { return analytic::xi_pi4_n2(1.0, t); });
    // random dilution at p = 1
    grid_compare([](double t) { return disorder::xi_random_analytic(1.0, 1.0, t); },
                 [](double t) { return analytic::xi_pi4_uniform(1.0, t); });
    // N-independence of the dimerized chain
    for (int n : {6, 8, 10}) {
        for (double delta : {0.25, 0.5, 0.75}) {
            const CouplingChain chain = make_dimerized({n / 2, 1.0, delta});
            grid_compare([&](double t) { return analytic::xi_pi4_general(chain, t); },
                         [&](double t) { return analytic::xi_pi4_dimerized(1.0, delta, t); });
        }
    }

    res.pass = res.worst <= tol;
    return res;
}

CheckResult fd_suite(std::uint64_t seed, int sets, int orientations_per_set) {
    CheckResult res;
    char buf[96];
    std::snprintf(buf, sizeof buf, "fd-derivative (%d pair sets x %d orientations)", sets,
                  orientations_per_set);
    res.name = buf;
    res.tol = 1.0; // deviations scaled by max(1e-8, 1e-6 |value|)

    std::mt19937_64 eng(seed);
    for (int i = 0; i < sets; ++i) {
        const int n = 4 + i % 3;
        const auto ps = random_pairset(eng, n);
        const auto ac = shorttime::aggregate(ps);
        const double dt = oracle::default_fd_step(ps);
        for (int j = 0; j < orientations_per_set; ++j) {
            const Orientation o = random_orientation(eng);
            const double a = shorttime::noise_derivative(ac, o);
            const double fd = oracle::fd_derivative(ps, o, dt);
            const double scale = std::max(1e-8, 1e-6 * std::abs(a));
            res.worst = std::max(res.worst, std::abs(a - fd) / scale);
        }
    }
    res.pass = res.worst <= res.tol;
    return res;
}

CheckResult ising_rate_suite(std::uint64_t seed, double tol) {
    CheckResult res;
    res.name = "ising-optimal-rate (rate = -(1/4) sum chi_i)";
    res.tol = tol;

    std::mt19937_64 eng(seed);
    for (int i = 0; i < 10; ++i) {
        const int n = 2 + static_cast<int>(eng() % 9);
        const CouplingChain chain = random_chain(eng, n);
        const auto opt = shorttime::optimal_orientation(
            shorttime::aggregate(shorttime::ising_to_pairset(chain)));
        res.worst = std::max(res.worst, std::abs(opt.rate + 0.25 * chain.coupling_sum()));
    }
    res.pass = res.worst <= tol;
    return res;
}

CheckResult extremum_suite(std::uint64_t seed, int matrices, double tol) {
    CheckResult res;
    char buf[96];
    std::snprintf(buf, sizeof buf, "extremum-bound (%d matrices, 27000-point Euler grid)",
                  matrices);
    res.name = buf;
    res.tol = tol;

    std::mt19937_64 eng(seed);
    double worst_excess = -1e30;
    for (int i = 0; i < matrices; ++i) {
        Mat3 m;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m(r, c) = uniform(eng, -2.0, 2.0);
        const auto ac = shorttime::AggregateCoupling::from_matrix(m);
        const double rate = shorttime::optimal_orientation(ac).rate;
        double grid_min = 1e30;
        for (int ia = 0; ia < 30; ++ia) {
            for (int ib = 0; ib < 30; ++ib) {
                for (int ig = 0; ig < 30; ++ig) {
                    const Orientation o{2.0 * M_PI * ia / 30.0, M_PI * ib / 29.0,
                                        2.0 * M_PI * ig / 30.0};
                    grid_min = std::min(grid_min, shorttime::noise_derivative(ac, o));
                }
            }
        }
        worst_excess = std::max(worst_excess, rate - grid_min);
    }
    res.worst = std::max(0.0, worst_excess); // positive excess would break the bound
    res.pass = worst_excess <= tol;
    return res;
}

CheckResult mean_spin_derivative_suite(std::uint64_t seed) {
    CheckResult res;
    res.name = "mean-spin-length-derivative-zero";
    res.tol = 1e-6;

    std::mt19937_64 eng(seed);
    for (int i = 0; i < 5; ++i) {
        const int n = 4 + i % 3;
        const auto ps = random_pairset(eng, n);
        const Orientation o = random_orientation(eng);
        const double h = oracle::default_fd_step(ps);
        const auto jsq_at = [&](double tau) {
            const auto st = oracle::evolve_general(oracle::prepare_polarized(n, o), ps, tau);
            const auto mo = oracle::moments(st);
            return mo.jx * mo.jx + mo.jy * mo.jy + mo.jz * mo.jz;
        };
        const double deriv = (jsq_at(h) - jsq_at(-h)) / (2.0 * h);
        const double scale =
            std::max(1.0, shorttime::aggregate(ps).matrix.frobenius_norm() * n);
        res.worst = std::max(res.worst, std::abs(deriv) / scale);
    }
    res.pass = res.worst <= res.tol;
    return res;
}

CheckResult mc_suite(std::uint64_t seed) {
    CheckResult res;
    res.name = "disorder-mc (n=1e5, 8 samples, p in {0.25,0.5,0.75})";
    res.tol = 1.0; // max of |gap|/(5 SE) and |gap|/(2% relative)

    int idx = 0;
    for (double p : {0.25, 0.5, 0.75}) {
        for (double chit = 0.2; chit <= 1.2 + 1e-9; chit += 0.2) {
            const auto est =
                disorder::xi_random_mc(p, 1.0, 100000, chit, 8, splitmix64_at(seed, idx++));
            const double ana = disorder::xi_random_analytic(p, 1.0, chit);
            const double gap = std::abs(est.mean - ana);
            res.worst = std::max(res.worst, gap / std::max(5.0 * est.std_error, 1e-300));
            res.worst = std::max(res.worst, gap / (0.02 * std::abs(ana)));
        }
    }
    res.pass = res.worst <= res.tol;
    return res;
}

CheckResult trig_means_suite(std::uint64_t seed) {
    CheckResult res;
    res.name = "trig-means (1e6 draws per (p, mu), 5 sigma)";
    res.tol = 1.0; // |gap| / (5 SE)

    constexpr int kDraws = 1'000'000;
    constexpr int kBatches = 1000;
    constexpr int kBatchLen = kDraws / kBatches;

    int cfg = 0;
    for (int ip = 1; ip <= 9; ++ip) {
        const double p = 0.1 * ip;
        for (int im = 0; im < 10; ++im) {
            const double mu = 0.05 + (2.0 * M_PI - 0.1) * im / 9.0;
            std::mt19937_64 eng(splitmix64_at(seed, cfg++));
            const double cos_v[2] = {1.0, std::cos(mu)};
            const double sin_v[2] = {0.0, std::sin(mu)};
            const double pair_v[2][2] = {{0.0, std::sin(mu)},
                                         {std::sin(mu), std::sin(2.0 * mu)}};
            double bm_cos[kBatches], bm_sin[kBatches], bm_pair[kBatches];
            int prev = uniform01(eng) < p ? 1 : 0;
            for (int b = 0; b < kBatches; ++b) {
                double sc = 0.0, ss = 0.0, sp = 0.0;
                for (int i = 0; i < kBatchLen; ++i) {
                    const int cur = uniform01(eng) < p ? 1 : 0;
                    sc += cos_v[cur];
                    ss += sin_v[cur];
                    sp += pair_v[prev][cur];
                    prev = cur;
                }
                bm_cos[b] = sc / kBatchLen;
                bm_sin[b] = ss / kBatchLen;
                bm_pair[b] = sp / kBatchLen;
            }
            const auto check = [&](const double* bm, double expected) {
                double mean = 0.0;
                for (int b = 0; b < kBatches; ++b) mean += bm[b];
                mean /= kBatches;
                double var = 0.0;
                for (int b = 0; b < kBatches; ++b) var += (bm[b] - mean) * (bm[b] - mean);
                const double se = std::sqrt(var / (kBatches * (kBatches - 1.0)));
                res.worst =
                    std::max(res.worst, std::abs(mean - expected) / std::max(5.0 * se, 1e-12));
            };
            const auto tm = disorder::trig_means(p, mu);
            check(bm_cos, tm.cos_mean);
            check(bm_sin, tm.sin_mean);
            check(bm_pair, tm.sin_pair_mean);
        }
    }
    res.pass = res.worst <= res.tol;
    return res;
}

std::vector<CheckResult> run(Level level, std::uint64_t seed) {
    std::vector<CheckResult> results;
    if (level == Level::fast) {
        results.push_back(oracle_equivalence(2, 8, 10, 20, splitmix64_at(seed, 100)));
        results.push_back(moment_equivalence(5, 8, 5, 10, splitmix64_at(seed, 101)));
        results.push_back(reduction_identities());
    } else {
        results.push_back(oracle_equivalence(2, 12, 50, 20, splitmix64_at(seed, 200)));
        results.push_back(moment_equivalence(5, 12, 10, 20, splitmix64_at(seed, 201)));
        results.push_back(reduction_identities());
        results.push_back(fd_suite(splitmix64_at(seed, 202)));
        results.push_back(ising_rate_suite(splitmix64_at(seed, 203)));
        results.push_back(extremum_suite(splitmix64_at(seed, 204)));
        results.push_back(mean_spin_derivative_suite(splitmix64_at(seed, 205)));
        results.push_back(mc_suite(splitmix64_at(seed, 206)));
        results.push_back(trig_means_suite(splitmix64_at(seed, 207)));
    }
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

std::string format_result(const CheckResult& r) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s  %s: worst=%.3e tol=%.3e%s%s", r.pass ? "PASS" : "FAIL",
                  r.name.c_str(), r.worst, r.tol, r.note.empty() ? "" : "  ", r.note.c_str());
    return buf;
}

} // namespace spinsqueeze::verify
