#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "spinsqueeze/oracle.hpp"
#include "spinsqueeze/short_time.hpp"

using namespace spinsqueeze;
namespace st = spinsqueeze::shorttime;

namespace {

double uniform(std::mt19937_64& eng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
}

Mat3 random_symmetric(std::mt19937_64& eng, double scale) {
    Mat3 m;
    for (int r = 0; r < 3; ++r)
        for (int c = r; c < 3; ++c) m(r, c) = m(c, r) = uniform(eng, -scale, scale);
    return m;
}

double max_entry_gap(const Mat3& a, const Mat3& b) {
    double g = 0.0;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) g = std::max(g, std::abs(a(r, c) - b(r, c)));
    return g;
}

} // namespace

TEST_CASE("rotation_matrix convention") {
    CHECK(max_entry_gap(rotation_matrix({0, 0, 0}), Mat3::identity()) == 0.0);

    SUBCASE("(0,0,gamma) rotates about z") {
        const double g = 0.7;
        const Mat3 r = rotation_matrix({0, 0, g});
        CHECK(r(0, 0) == doctest::Approx(std::cos(g)));
        CHECK(r(0, 1) == doctest::Approx(-std::sin(g)));
        CHECK(r(1, 0) == doctest::Approx(std::sin(g)));
        CHECK(r(2, 2) == 1.0);
    }
    SUBCASE("composition R(a,b,0) Rz(g) = R(a,b,g)") {
        const Mat3 lhs = rotation_matrix({0.4, 1.1, 0.0}) * rotation_matrix({0.0, 0.0, -0.9});
        const Mat3 rhs = rotation_matrix({0.4, 1.1, -0.9});
        CHECK(max_entry_gap(lhs, rhs) <= 1e-15);
    }
    SUBCASE("proper rotation for random angles") {
        std::mt19937_64 eng(3);
        for (int i = 0; i < 50; ++i) {
            const Orientation o{uniform(eng, 0, 2 * M_PI), uniform(eng, 0, M_PI),
                                uniform(eng, 0, 2 * M_PI)};
            const Mat3 r = rotation_matrix(o);
            CHECK(max_entry_gap(r.transposed() * r, Mat3::identity()) <= 1e-12);
            const Vec3 cx = r.column(0), cy = r.column(1), cz = r.column(2);
            CHECK((cx.cross(cy) - cz).norm() <= 1e-12); // det = +1
        }
    }
}

TEST_CASE("euler extraction round-trips") {
    std::mt19937_64 eng(17);
    for (int i = 0; i < 100; ++i) {
        const Orientation o{uniform(eng, 0, 2 * M_PI), uniform(eng, 0, M_PI),
                            uniform(eng, 0, 2 * M_PI)};
        const Mat3 r = rotation_matrix(o);
        const Mat3 back = rotation_matrix(euler_from_rotation(r));
        CHECK(max_entry_gap(r, back) <= 1e-12);
    }
    // gimbal cases
    for (const Orientation o : {Orientation{0.3, 0.0, 1.2}, Orientation{1.0, M_PI, -0.4}}) {
        const Mat3 r = rotation_matrix(o);
        CHECK(max_entry_gap(r, rotation_matrix(euler_from_rotation(r))) <= 1e-12);
    }
}

TEST_CASE("symmetric_eigen3") {
    std::mt19937_64 eng(23);
    SUBCASE("random symmetric matrices") {
        for (int trial = 0; trial < 200; ++trial) {
            const Mat3 m = random_symmetric(eng, 3.0);
            const auto d = st::symmetric_eigen3(m);
            CHECK(d.values[0] >= d.values[1]);
            CHECK(d.values[1] >= d.values[2]);
            for (int i = 0; i < 3; ++i) {
                const Vec3 v = d.vectors[static_cast<std::size_t>(i)];
                const Vec3 mv = m * v;
                const Vec3 lv = v * d.values[static_cast<std::size_t>(i)];
                CHECK((mv - lv).norm() <= 1e-10 * std::max(1.0, m.max_abs()));
                CHECK(std::abs(v.norm() - 1.0) <= 1e-12);
            }
            CHECK(std::abs(d.vectors[0].dot(d.vectors[1])) <= 1e-10);
            CHECK(std::abs(d.vectors[0].dot(d.vectors[2])) <= 1e-10);
            CHECK(std::abs(d.vectors[1].dot(d.vectors[2])) <= 1e-10);
        }
    }
    SUBCASE("degenerate spectra") {
        const auto id = st::symmetric_eigen3(Mat3::identity());
        CHECK(id.values[0] == doctest::Approx(1.0));
        CHECK(id.values[2] == doctest::Approx(1.0));

        Mat3 d110 = Mat3::zero();
        d110(0, 0) = 1.0;
        d110(1, 1) = 1.0;
        const auto d = st::symmetric_eigen3(d110);
        CHECK(d.values[0] == doctest::Approx(1.0));
        CHECK(d.values[1] == doctest::Approx(1.0));
        CHECK(d.values[2] == doctest::Approx(0.0));

        // near-degenerate: Jacobi fallback still orthonormal
        Mat3 nd = Mat3::identity();
        nd(0, 1) = nd(1, 0) = 1e-11;
        const auto e = st::symmetric_eigen3(nd);
        CHECK(std::abs(e.vectors[0].dot(e.vectors[1])) <= 1e-10);
    }
}

TEST_CASE("aggregate") {
    SUBCASE("empty set -> zero matrix") {
        st::PairCouplingSet ps;
        ps.n = 3;
        const auto ac = st::aggregate(ps);
        CHECK(ac.matrix.max_abs() == 0.0);
        CHECK(ac.eigen.values[0] == 0.0);
        CHECK(ac.eigen.values[2] == 0.0);
    }
    SUBCASE("antisymmetric term is annihilated") {
        st::PairCouplingSet ps;
        ps.n = 2;
        st::PairTerm term;
        term.k = 1;
        term.l = 2;
        term.m(0, 1) = 1.0;
        term.m(1, 0) = -1.0;
        ps.terms.push_back(term);
        CHECK(st::aggregate(ps).matrix.max_abs() == 0.0);
    }
    SUBCASE("uniform Ising chain aggregates to diag(sum chi, 0, 0)") {
        const auto ac = st::aggregate(st::ising_to_pairset(make_uniform(4, 1.0)));
        Mat3 want = Mat3::zero();
        want(0, 0) = 4.0;
        CHECK(max_entry_gap(ac.matrix, want) <= 1e-12);
        CHECK(ac.eigen.values[0] == doctest::Approx(4.0).epsilon(1e-12));
        CHECK(std::abs(ac.eigen.values[1]) <= 1e-12);
        CHECK(std::abs(ac.eigen.values[2]) <= 1e-12);
    }
    SUBCASE("validation errors") {
        st::PairCouplingSet bad;
        bad.n = 3;
        bad.terms.push_back({2, 2, Mat3::identity()});
        CHECK_THROWS_AS(st::aggregate(bad), invalid_pairset_error);
        bad.terms[0] = {1, 4, Mat3::identity()};
        CHECK_THROWS_AS(st::aggregate(bad), invalid_pairset_error);
    }
}

TEST_CASE("noise_derivative") {
    SUBCASE("isotropic M gives zero for any orientation") {
        const auto ac = st::AggregateCoupling::from_matrix(Mat3::identity().scaled(2.5));
        std::mt19937_64 eng(5);
        for (int i = 0; i < 20; ++i) {
            const Orientation o{uniform(eng, 0, 2 * M_PI), uniform(eng, 0, M_PI),
                                uniform(eng, 0, 2 * M_PI)};
            CHECK(std::abs(st::noise_derivative(ac, o)) <= 1e-14);
        }
    }
    SUBCASE("diag(0,1,0) at gamma = pi/4 gives 1/4") {
        Mat3 m = Mat3::zero();
        m(1, 1) = 1.0;
        const auto ac = st::AggregateCoupling::from_matrix(m);
        CHECK(st::noise_derivative(ac, {0, 0, M_PI_4}) == doctest::Approx(0.25).epsilon(1e-13));
    }
    SUBCASE("diagonal M at beta = 0, gamma = +-pi/4 gives +-(My-Mx)/4") {
        Mat3 m = Mat3::zero();
        m(0, 0) = 0.7;
        m(1, 1) = -1.9;
        m(2, 2) = 0.4;
        const auto ac = st::AggregateCoupling::from_matrix(m);
        const double want = 0.25 * (m(1, 1) - m(0, 0));
        CHECK(st::noise_derivative(ac, {0, 0, M_PI_4}) == doctest::Approx(want).epsilon(1e-13));
        CHECK(st::noise_derivative(ac, {0, 0, -M_PI_4}) == doctest::Approx(-want).epsilon(1e-13));
    }
    SUBCASE("adding antisymmetric parts to the terms changes nothing") {
        std::mt19937_64 eng(9);
        st::PairCouplingSet ps;
        ps.n = 3;
        for (int i = 0; i < 4; ++i) {
            st::PairTerm t;
            t.k = 1 + i % 3;
            t.l = 1 + (i + 1) % 3;
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) t.m(r, c) = uniform(eng, -1, 1);
            ps.terms.push_back(t);
        }
        st::PairCouplingSet skewed = ps;
        for (auto& t : skewed.terms) {
            Mat3 anti = Mat3::zero();
            anti(0, 1) = uniform(eng, -1, 1);
            anti(1, 0) = -anti(0, 1);
            anti(1, 2) = uniform(eng, -1, 1);
            anti(2, 1) = -anti(1, 2);
            t.m += anti;
        }
        const auto ac1 = st::aggregate(ps);
        const auto ac2 = st::aggregate(skewed);
        const Orientation o{0.3, 0.9, -0.6};
        CHECK(st::noise_derivative(ac1, o) ==
              doctest::Approx(st::noise_derivative(ac2, o)).epsilon(1e-12));
    }
}

TEST_CASE("optimal_orientation") {
    SUBCASE("isotropic M cannot squeeze") {
        const auto opt = st::optimal_orientation(
            st::AggregateCoupling::from_matrix(Mat3::identity().scaled(3.0)));
        CHECK(opt.rate == 0.0);
    }
    SUBCASE("diag(0,1,0) squeezes at rate -1/4") {
        Mat3 m = Mat3::zero();
        m(1, 1) = 1.0;
        const auto opt = st::optimal_orientation(st::AggregateCoupling::from_matrix(m));
        CHECK(opt.rate == doctest::Approx(-0.25).epsilon(1e-12));
    }
    SUBCASE("uniform Ising N=6 squeezes at rate -6/4") {
        const auto opt = st::optimal_orientation(
            st::aggregate(st::ising_to_pairset(make_uniform(6, 1.0))));
        CHECK(opt.rate == doctest::Approx(-1.5).epsilon(1e-12));
    }
    SUBCASE("returned orientation achieves the returned rate") {
        std::mt19937_64 eng(31);
        for (int trial = 0; trial < 50; ++trial) {
            const auto ac = st::AggregateCoupling::from_matrix(random_symmetric(eng, 2.0));
            const auto opt = st::optimal_orientation(ac);
            CHECK(st::noise_derivative(ac, opt.orientation) ==
                  doctest::Approx(opt.rate).epsilon(1e-10));
            // small grid sanity: no orientation on a coarse grid goes lower
            for (int ia = 0; ia < 8; ++ia)
                for (int ib = 0; ib < 8; ++ib)
                    for (int ig = 0; ig < 8; ++ig) {
                        const Orientation o{2 * M_PI * ia / 8.0, M_PI * ib / 7.0,
                                            2 * M_PI * ig / 8.0};
                        CHECK(opt.rate <= st::noise_derivative(ac, o) + 1e-10);
                    }
        }
    }
}

TEST_CASE("ising_to_pairset") {
    SUBCASE("zero chain -> zero aggregate") {
        const auto ac = st::aggregate(st::ising_to_pairset(make_uniform(5, 0.0)));
        CHECK(ac.matrix.max_abs() == 0.0);
    }
    SUBCASE("optimal rate is -(1/4) sum chi_i") {
        std::mt19937_64 eng(77);
        for (int trial = 0; trial < 10; ++trial) {
            const int n = 2 + static_cast<int>(eng() % 7);
            std::vector<double> chi(static_cast<std::size_t>(n));
            for (auto& c : chi) c = uniform(eng, 0.0, 2.0);
            const CouplingChain chain(chi);
            const auto opt =
                st::optimal_orientation(st::aggregate(st::ising_to_pairset(chain)));
            CHECK(std::abs(opt.rate + 0.25 * chain.coupling_sum()) <= 1e-10);
        }
    }
}

TEST_CASE("analytic derivative matches oracle finite differences (spot check)") {
    std::mt19937_64 eng(41);
    st::PairCouplingSet ps;
    ps.n = 4;
    for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l) {
            if (k == l || uniform(eng, 0, 1) > 0.5) continue;
            st::PairTerm t;
            t.k = k;
            t.l = l;
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) t.m(r, c) = uniform(eng, -1, 1);
            ps.terms.push_back(t);
        }
    if (ps.terms.empty()) {
        st::PairTerm t;
        t.k = 1;
        t.l = 2;
        t.m(0, 0) = 1.0;
        ps.terms.push_back(t);
    }
    const auto ac = st::aggregate(ps);
    const double dt = oracle::default_fd_step(ps);
    for (int i = 0; i < 3; ++i) {
        const Orientation o{uniform(eng, 0, 2 * M_PI), uniform(eng, 0, M_PI),
                            uniform(eng, 0, 2 * M_PI)};
        const double a = st::noise_derivative(ac, o);
        const double fd = oracle::fd_derivative(ps, o, dt);
        CHECK(std::abs(a - fd) <= std::max(1e-8, 1e-6 * std::abs(a)));
    }
}
