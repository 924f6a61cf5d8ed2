#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "akzeta/classical.hpp"
#include "akzeta/gamma.hpp"
#include "akzeta/gl2_bernoulli.hpp"
#include "akzeta/zeta_numeric.hpp"

#include <cmath>
#include <complex>

using namespace akzeta;
using cdouble = std::complex<double>;

namespace {

constexpr double kPi = 3.14159265358979323846;

GaussianRational gq(long n, long d = 1) { return GaussianRational(Rational(n, d)); }

// independent oracle: direct polylog series summation
cdouble li_series(double s, cdouble z, int terms = 400) {
    cdouble acc(0, 0);
    cdouble zp(1, 0);
    for (int n = 1; n <= terms; ++n) {
        zp *= z;
        acc += zp / std::pow(static_cast<double>(n), s);
    }
    return acc;
}

// independent oracle: direct zeta summation with integral tail bound
double zeta_direct(double s) {
    double acc = 0;
    const int N = 1000000;
    for (int n = 1; n <= N; ++n) acc += std::pow(n, -s);
    // tail: integral estimate N^{1-s}/(s-1) with |error| < N^{-s}
    return acc + std::pow(N, 1.0 - s) / (s - 1.0);
}

}  // namespace

TEST_CASE("complex gamma") {
    CHECK(std::abs(complex_gamma({2, 0}) - cdouble(1, 0)) < 1e-13);
    CHECK(std::abs(complex_gamma({0.5, 0}) - cdouble(std::sqrt(kPi), 0)) < 1e-13);
    CHECK(std::abs(complex_gamma({11, 0}) - cdouble(3628800, 0)) < 1e-6);
    // literature value of Gamma(i)
    cdouble gi = complex_gamma({0, 1});
    CHECK(gi.real() == doctest::Approx(-0.15494982830181069).epsilon(1e-11));
    CHECK(gi.imag() == doctest::Approx(-0.49801566811835604).epsilon(1e-11));
    // reflection-consistency at a point that crosses the Re < 1/2 branch
    cdouble z(-1.3, 0.4);
    cdouble lhs = complex_gamma(z) * complex_gamma(1.0 - z);
    cdouble rhs = kPi / std::sin(kPi * z);
    CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(rhs));
}

TEST_CASE("riemann zeta by Euler-Maclaurin") {
    CHECK(std::abs(riemann_zeta_real(2.0) - kPi * kPi / 6.0) < 1e-10);
    CHECK(std::abs(riemann_zeta_real(4.0) - kPi * kPi * kPi * kPi / 90.0) < 1e-10);
    CHECK(std::abs(riemann_zeta_real(3.0) - 1.2020569031595943) < 1e-12);
    CHECK(std::abs(riemann_zeta_real(3.0) - zeta_direct(3.0)) < 1e-10);
    CHECK_THROWS_AS(riemann_zeta_real(1.0), std::domain_error);
}

TEST_CASE("lerch phi: basic identities") {
    QuadratureConfig cfg;
    // Phi(0, u, y) = y^{-u}
    ComplexEval v = lerch_phi({0, 0}, {2.5, 0}, {1.7, 0}, cfg);
    CHECK(std::abs(v.value - std::pow(1.7, -2.5)) < 1e-12);

    // z Phi(z, 2, 1) = Li_2(z) at z = 1/2
    ComplexEval p = lerch_phi({0.5, 0}, {2, 0}, {1, 0}, cfg);
    CHECK(std::abs(0.5 * p.value - li_series(2.0, {0.5, 0})) < 1e-10);

    // forward recurrence consistency at (z,u,y) = (-2, 1.5, 0.7)
    cdouble z(-2, 0), u(1.5, 0), y(0.7, 0);
    ComplexEval a = lerch_phi(z, u, y, cfg);
    ComplexEval b = lerch_phi(z, u, y + 1.0, cfg);
    cdouble residual = a.value - z * b.value - cpow(y, -u);
    CHECK(std::abs(residual) < 1e-10);

    // cut rejection
    CHECK_THROWS_AS(lerch_phi({1.5, 0}, {2, 0}, {1, 0}, cfg), std::domain_error);
    // z = 1 is Hurwitz zeta
    ComplexEval h = lerch_phi({1, 0}, {3, 0}, {1, 0}, cfg);
    CHECK(std::abs(h.value - riemann_zeta_real(3.0)) < 1e-11);
}

TEST_CASE("lerch phi: closed form at nonpositive integer order") {
    QuadratureConfig cfg;
    // Phi(z, -1, y) = y/(1-z) + z/(1-z)^2
    cdouble z(-0.75, 0.4), y(1.3, -0.2);
    ComplexEval v = lerch_phi(z, {-1, 0}, y, cfg);
    cdouble expect = y / (1.0 - z) + z / ((1.0 - z) * (1.0 - z));
    CHECK(std::abs(v.value - expect) < 1e-12);

    // exact-layer cross-check
    PolyYW p = phi_neg_int_poly(gq(-3, 4), 3, YW::w);
    cdouble num = phi_neg_int({-0.75, 0}, 3, {1.25, 0});
    CHECK(std::abs(p.eval(cdouble(0, 0), cdouble(1.25, 0)) - num) < 1e-12);
}

TEST_CASE("lerch phi: derivative lift for negative non-integer order") {
    QuadratureConfig cfg;
    // check the lift against the certified series region (|z| <= 1/2)
    cdouble z(0.45, 0.1), y(1.4, 0);
    for (double ur : {-0.5, -1.5}) {
        ComplexEval lift = lerch_phi(z, {ur, 0}, y, cfg);  // |z| <= 1/2 -> series
        // force the lift by moving z outside the series disc along a path
        // where the series still converges for comparison at 0.6
        cdouble z2(0.6, 0.0);
        ComplexEval lifted = lerch_phi(z2, {ur, 0}, y, cfg);
        // reference: direct series at z2 (converges, |z2| < 1)
        cdouble acc(0, 0);
        cdouble zp(1, 0);
        for (int n = 0; n <= 4000; ++n) {
            acc += zp * cpow(cdouble(n, 0) + y, cdouble(-ur, 0));
            zp *= z2;
        }
        CHECK(std::abs(lifted.value - acc) < 1e-7 * (1 + std::abs(acc)));
        CHECK(lift.est_error < 1e-8);
    }
}

TEST_CASE("xi_d reproduces the zeta(3) value") {
    QuadratureConfig cfg;
    ComplexEval v = xi_d_certified({1, 0}, {2, 0}, {1, 0}, {0, 0}, Matrix2::g_xi(), cfg);
    double target = 2.0 * riemann_zeta_real(3.0);
    CHECK(std::abs(v.value - target) < 1e-8);
    CHECK(std::abs(v.value.real() - 2.404113806319188) < 1e-8);
}

TEST_CASE("order-swap symmetry of the eta preset") {
    QuadratureConfig cfg;
    ComplexEval l = xi_d_certified({1.5, 0}, {2.5, 0}, {1, 0}, {0, 0}, Matrix2::g_eta(), cfg);
    ComplexEval r = xi_d_certified({2.5, 0}, {1.5, 0}, {1, 0}, {0, 0}, Matrix2::g_eta(), cfg);
    CHECK(std::abs(l.value - r.value) < 1e-8);
}

TEST_CASE("xi_n is the y-shift of xi_d") {
    QuadratureConfig cfg;
    Matrix2c g(Matrix2::g_eta());
    ComplexEval a = xi_n({1.5, 0}, {2.0, 0}, {0.3, 0}, {0.2, 0}, g, cfg);
    ComplexEval b = xi_d({1.5, 0}, {2.0, 0}, {1.3, 0}, {0.2, 0}, g, cfg);
    CHECK(std::abs(a.value - b.value) < 1e-12);
}

TEST_CASE("relation residuals at spot points") {
    QuadratureConfig cfg;
    {
        RelationResidual r = xi_relation_check(RelationKind::difference, Matrix2::g_xi(), {2, 0},
                                               {1.5, 0}, {1.3, 0}, {0.8, 0}, cfg);
        CHECK(r.residual < 1e-8);
    }
    {
        RelationResidual r = xi_relation_check(RelationKind::duality0, Matrix2::g_eta(), {1.5, 0},
                                               {2.5, 0}, {1.2, 0}, {1.1, 0}, cfg);
        CHECK(r.residual < 1e-8);
    }
    {
        RelationResidual r = xi_relation_check(RelationKind::duality0, Matrix2::g_xi(), {2.0, 0},
                                               {2.0, 0}, {1.5, 0}, {1.5, 0}, cfg);
        CHECK(r.residual < 1e-8);
    }
}

TEST_CASE("certification rejects out-of-domain points") {
    QuadratureConfig cfg;
    CHECK_THROWS_AS(xi_d_certified({0.2, 0}, {2, 0}, {0.2, 0}, {-0.9, 0}, Matrix2::g_eta(), cfg),
                    std::domain_error);
}

TEST_CASE("hankel agrees with the direct representation") {
    QuadratureConfig cfg;
    ComplexEval h = xi_d_hankel({1.5, 0}, {2.5, 0}, {1.2, 0}, {0.5, 0}, Matrix2::g_xi(), cfg);
    ComplexEval d = xi_d_certified({1.5, 0}, {2.5, 0}, {1.2, 0}, {0.5, 0}, Matrix2::g_xi(), cfg);
    CHECK(std::abs(h.value - d.value) < 1e-7);
    CHECK_THROWS_AS(xi_d_hankel({1.5, 0}, {2, 0}, {1.2, 0}, {0.5, 0}, Matrix2::g_xi(), cfg),
                    std::domain_error);
}

TEST_CASE("hankel at negative non-integer s: radius stability") {
    QuadratureConfig cfg;
    ComplexEval a = xi_d_hankel({2, 0}, {-0.5, 0}, {1, 0}, {0, 0}, Matrix2::g_eta(), cfg);
    QuadratureConfig half = cfg;
    half.hankel_radius = 0.125;
    ComplexEval b = xi_d_hankel({2, 0}, {-0.5, 0}, {1, 0}, {0, 0}, Matrix2::g_eta(), half);
    half.hankel_radius = 0.0625;
    ComplexEval c = xi_d_hankel({2, 0}, {-0.5, 0}, {1, 0}, {0, 0}, Matrix2::g_eta(), half);
    CHECK(std::isfinite(a.value.real()));
    CHECK(std::abs(a.value - b.value) < 1e-7 * (1 + std::abs(a.value)));
    CHECK(std::abs(b.value - c.value) < 1e-7 * (1 + std::abs(b.value)));
}

TEST_CASE("hankel duality spot-check at s = -1.5") {
    // order-zero duality with the s-slot continued below zero:
    // xi_D(u, s; y, w-1; g_eta) = - (1/det) xi_D(s, u; w, y-1; g_eta)
    QuadratureConfig cfg;
    cdouble u(2.5, 0), s(-1.5, 0), y(1.4, 0), w(1.3, 0);
    Matrix2 g = Matrix2::g_eta();
    ComplexEval lhs = xi_d_hankel(u, s, y, w - 1.0, g, cfg);
    ComplexEval rhs = xi_d_hankel(s, u, w, y - 1.0, g.inverse(), cfg);
    cdouble factor = -1.0 / Matrix2c(g).det();
    CHECK(std::abs(lhs.value - factor * rhs.value) <
          std::max(1e-6, 20 * (lhs.est_error + rhs.est_error)));
}

TEST_CASE("circle extraction matches the exact grid") {
    QuadratureConfig cfg;
    GlPolyBernoulli ge = bigen_series(Matrix2::g_eta(), 4, 4);
    for (int m : {0, 2, 3})
        for (int l : {0, 1, 2}) {
            ComplexEval v = xi_d_at_neg_int({static_cast<double>(-l), 0}, m, {1, 0}, {0, 0},
                                            Matrix2::g_eta(), cfg);
            cdouble exact = ge.at(m, l).eval(cdouble(1, 0), cdouble(0, 0));
            CHECK(std::abs(v.value - exact) < 1e-6 * (1 + std::abs(exact)));
        }
    // the 242 anchor through the numeric route
    ComplexEval v = xi_d_at_neg_int({-3, 0}, 2, {1, 0}, {0, 0}, Matrix2::g_alpha(gq(3)), cfg);
    CHECK(std::abs(v.value - cdouble(242, 0)) < 1e-6 * 242);
    // positive integer order on g_eta: grid value at (1,0) is the B-type number
    {
        RationalSeq b = poly_bernoulli_B(3, 2);
        ComplexEval w23 = xi_d_at_neg_int({2, 0}, 3, {1, 0}, {0, 0}, Matrix2::g_eta(), cfg);
        CHECK(std::abs(w23.value - cdouble(b[3].get_d(), 0)) < 1e-9);
    }
    // positive order: constant term of the g_xi grid at (1,0)
    ComplexEval c0 = xi_d_at_neg_int({1, 0}, 0, {1, 0}, {0, 0}, Matrix2::g_xi(), cfg);
    std::vector<PolyYW> rows = unigen_series(Matrix2::g_xi(), 1, 0, gq(1));
    cdouble exact = rows[0].eval(cdouble(0, 0), cdouble(0, 0));
    CHECK(std::abs(c0.value - exact) < 1e-8);
}

TEST_CASE("circle extraction at non-integer order vs the Stirling closed sum") {
    // B_m^{(u)} = (-1)^m sum_n (-1)^n n!/(n+1)^u {m n} holds for real u, so it
    // provides an independent oracle for the circle rule away from integers.
    QuadratureConfig cfg;
    for (double u : {1.5, 2.5}) {
        for (int m : {1, 2, 3}) {
            double expect = 0;
            double fact = 1;
            for (int n = 0; n <= m; ++n) {
                if (n > 0) fact *= n;
                double term = fact * stirling2(m, n).get_d() / std::pow(n + 1.0, u);
                expect += (n % 2 ? -term : term);
            }
            if (m % 2) expect = -expect;
            ComplexEval v = xi_d_at_neg_int({u, 0}, m, {1, 0}, {0, 0}, Matrix2::g_eta(), cfg);
            CHECK(std::abs(v.value - cdouble(expect, 0)) < 1e-9 * (1 + std::abs(expect)));
        }
    }
}

TEST_CASE("refinement stability of the direct integral") {
    QuadratureConfig loose;
    loose.abs_tol = loose.rel_tol = 1e-8;
    QuadratureConfig tight;
    tight.abs_tol = tight.rel_tol = 1e-12;
    ComplexEval a = xi_d_certified({1.5, 0}, {2.0, 0}, {1.2, 0}, {0.5, 0}, Matrix2::g_eta(), loose);
    ComplexEval b = xi_d_certified({1.5, 0}, {2.0, 0}, {1.2, 0}, {0.5, 0}, Matrix2::g_eta(), tight);
    CHECK(std::abs(a.value - b.value) <= std::max(a.est_error, 1e-9));
}
