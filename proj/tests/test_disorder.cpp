#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "spinsqueeze/analytic.hpp"
#include "spinsqueeze/disorder.hpp"

using namespace spinsqueeze;
namespace dis = spinsqueeze::disorder;

namespace {

double rel_gap(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

} // namespace

TEST_CASE("trig_means") {
    SUBCASE("p = 1 reproduces the deterministic values") {
        for (double mu : {0.1, 0.8, 2.3}) {
            const auto tm = dis::trig_means(1.0, mu);
            CHECK(tm.cos_mean == doctest::Approx(std::cos(mu)).epsilon(1e-15));
            CHECK(tm.sin_mean == doctest::Approx(std::sin(mu)).epsilon(1e-15));
            CHECK(tm.sin_pair_mean == doctest::Approx(std::sin(2 * mu)).epsilon(1e-15));
        }
    }
    SUBCASE("p = 0 has no bonds") {
        const auto tm = dis::trig_means(0.0, 1.3);
        CHECK(tm.cos_mean == 1.0);
        CHECK(tm.sin_mean == 0.0);
        CHECK(tm.sin_pair_mean == 0.0);
    }
    SUBCASE("p = 0.5, mu = pi/3 vs one million empirical draws (5 sigma)") {
        const double p = 0.5, mu = M_PI / 3.0;
        const auto tm = dis::trig_means(p, mu);
        constexpr int kDraws = 1'000'000;
        std::mt19937_64 eng(404);
        const double cmu = std::cos(mu), smu = std::sin(mu), s2mu = std::sin(2 * mu);
        double sum_c = 0, sum_s = 0, sum_pair = 0;
        double ss_c = 0, ss_s = 0, ss_pair = 0;
        int prev = ((eng() >> 11) * 0x1.0p-53) < p ? 1 : 0;
        for (int i = 0; i < kDraws; ++i) {
            const int cur = ((eng() >> 11) * 0x1.0p-53) < p ? 1 : 0;
            const double vc = cur ? cmu : 1.0;
            const double vs = cur ? smu : 0.0;
            const double vp = (prev && cur) ? s2mu : ((prev || cur) ? smu : 0.0);
            sum_c += vc;
            ss_c += vc * vc;
            sum_s += vs;
            ss_s += vs * vs;
            sum_pair += vp;
            ss_pair += vp * vp;
            prev = cur;
        }
        const auto check5sigma = [&](double sum, double ss, double expected, double corr) {
            const double mean = sum / kDraws;
            const double var = ss / kDraws - mean * mean;
            // corr > 1 widens the bound for the 1-dependent pair sequence
            const double se = corr * std::sqrt(var / kDraws);
            CHECK(std::abs(mean - expected) <= 5.0 * se + 1e-12);
        };
        check5sigma(sum_c, ss_c, tm.cos_mean, 1.0);
        check5sigma(sum_s, ss_s, tm.sin_mean, 1.0);
        check5sigma(sum_pair, ss_pair, tm.sin_pair_mean, 2.0);
    }
    SUBCASE("bad probability") {
        CHECK_THROWS_AS(dis::trig_means(-0.5, 1.0), invalid_probability_error);
        CHECK_THROWS_AS(dis::trig_means(1.5, 1.0), invalid_probability_error);
    }
}

TEST_CASE("xi_random_analytic") {
    SUBCASE("p = 1 reduces to the uniform closed form") {
        for (int k = 0; k <= 300; ++k) {
            const double t = 0.01 * k;
            const double a = dis::xi_random_analytic(1.0, 1.0, t);
            const double b = analytic::xi_pi4_uniform(1.0, t);
            if (std::isinf(a) || std::isinf(b)) {
                CHECK(std::isinf(a) == std::isinf(b));
            } else {
                CHECK(rel_gap(a, b) <= 1e-12);
            }
        }
    }
    SUBCASE("p = 0 means no interactions") {
        for (double t : {0.0, 0.7, 2.9}) CHECK(dis::xi_random_analytic(0.0, 1.0, t) == 1.0);
    }
    SUBCASE("matches the printed four-term ratio at benign points") {
        for (double p : {0.25, 0.5, 0.75}) {
            for (double t : {0.3, 0.9, 1.7}) {
                const double mu = 0.5 * t;
                const double cbar = 1.0 - p * (1.0 - std::cos(mu));
                const double printed =
                    (1.0 + cbar * cbar * p * p * std::sin(mu) * std::sin(mu) -
                     (p * p * std::sin(2 * mu) + 2 * p * (1 - p) * std::sin(mu))) /
                    std::pow(cbar, 4);
                CHECK(dis::xi_random_analytic(p, 1.0, t) ==
                      doctest::Approx(printed).epsilon(1e-13));
            }
        }
    }
    SUBCASE("every dilution shows squeezing somewhere") {
        for (double p : {0.25, 0.5, 0.75}) {
            double min_xi = 2.0;
            for (int k = 0; k <= 300; ++k) {
                min_xi = std::min(min_xi, dis::xi_random_analytic(p, 1.0, 0.01 * k));
            }
            CHECK(min_xi < 1.0);
        }
    }
}

TEST_CASE("xi_random_mc") {
    SUBCASE("p = 1 is deterministic and equals the uniform form") {
        const auto est = dis::xi_random_mc(1.0, 1.0, 100, 1.0, 3, 9);
        CHECK(est.std_error == 0.0);
        CHECK(est.samples == 3);
        CHECK(rel_gap(est.mean, analytic::xi_pi4_uniform(1.0, 1.0)) <= 1e-12);
    }
    SUBCASE("p = 0 pins the estimate at 1") {
        for (double t : {0.2, 1.0}) {
            const auto est = dis::xi_random_mc(0.0, 1.0, 50, t, 4, 1);
            CHECK(est.mean == 1.0);
            CHECK(est.std_error == 0.0);
        }
    }
    SUBCASE("same seed, same estimate") {
        const auto a = dis::xi_random_mc(0.5, 1.0, 500, 0.8, 6, 1234);
        const auto b = dis::xi_random_mc(0.5, 1.0, 500, 0.8, 6, 1234);
        CHECK(a.mean == b.mean);
        CHECK(a.std_error == b.std_error);
    }
    SUBCASE("guards") {
        CHECK_THROWS_AS(dis::xi_random_mc(0.5, 1.0, 4, 0.8, 2, 0), unsupported_size_error);
        CHECK_THROWS_AS(dis::xi_random_mc(1.5, 1.0, 10, 0.8, 2, 0), invalid_probability_error);
        CHECK_THROWS_AS(dis::xi_random_mc(0.5, 1.0, 10, 0.8, 0, 0), std::invalid_argument);
    }
    SUBCASE("medium-size MC already tracks the large-N closed form") {
        const auto est = dis::xi_random_mc(0.5, 1.0, 20000, 0.8, 8, 77);
        const double ana = dis::xi_random_analytic(0.5, 1.0, 0.8);
        CHECK(std::abs(est.mean - ana) <= std::max(5.0 * est.std_error, 0.05 * ana));
    }
}
