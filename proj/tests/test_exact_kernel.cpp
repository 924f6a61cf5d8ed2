#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "akzeta/gl2_bernoulli.hpp"
#include "akzeta/series.hpp"

#include <random>

using namespace akzeta;

namespace {

GaussianRational gq(long n, long d = 1) { return GaussianRational(Rational(n, d)); }

std::mt19937 rng(20240817);

GaussianRational random_scalar() {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3), im(0, 2);
    return {Rational(num(rng), den(rng)), im(rng) == 0 ? Rational(num(rng), den(rng)) : Rational(0)};
}

PolyYW random_poly(int max_deg = 2) {
    std::uniform_int_distribution<int> deg(0, max_deg), terms(1, 4);
    PolyYW p;
    int t = terms(rng);
    for (int i = 0; i < t; ++i) p += PolyYW::monomial(deg(rng), deg(rng), random_scalar());
    return p;
}

TruncSeries2 random_series2(int nt, int nx, bool unit_const) {
    TruncSeries2 s(nt, nx);
    for (int i = 0; i <= nt; ++i)
        for (int j = 0; j <= nx; ++j) s.at(i, j) = random_poly(1);
    if (unit_const) s.at(0, 0) = PolyYW(random_scalar() + gq(5));
    return s;
}

}  // namespace

TEST_CASE("gaussian rational field operations") {
    GaussianRational a(Rational(3, 4), Rational(-1, 2));
    GaussianRational b(Rational(-2, 3), Rational(5, 7));
    CHECK(a + b - b == a);
    CHECK((a * b) / b == a);
    CHECK(a * a.inverse() == GaussianRational(1));
    CHECK(a.conj().conj() == a);
    CHECK((a * a.conj()).is_real());
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
    CHECK(a.pow(3) == a * a * a);
    CHECK(a.pow(-2) == (a * a).inverse());
}

TEST_CASE("gaussian rational parse and print round-trip") {
    for (const char* s : {"3", "-1/2", "i", "-i", "2+3i", "-4/125-22/125*i", "1/3+1/7i"}) {
        GaussianRational g = GaussianRational::parse(s);
        CHECK(GaussianRational::parse(g.str()) == g);
    }
    CHECK(GaussianRational::parse("242") == gq(242));
    CHECK(GaussianRational::parse("-4/125-22/125*i") ==
          GaussianRational(Rational(-4, 125), Rational(-22, 125)));
    CHECK_THROWS(GaussianRational::parse(""));
    CHECK_THROWS(GaussianRational::parse("1/0"));
}

TEST_CASE("polynomial shift examples") {
    PolyYW w2 = PolyYW::w().pow(2);
    PolyYW shifted = w2.shift(YW::w, gq(-1));
    PolyYW expect = PolyYW::w().pow(2) - gq(2) * PolyYW::w() + PolyYW(1);
    CHECK(shifted == expect);

    PolyYW p = random_poly();
    CHECK(p.shift(YW::y, gq(0)) == p);
    CHECK(p.shift(YW::y, gq(1)).shift(YW::y, gq(-1)) == p);
    CHECK(p.shift(YW::w, gq(3, 2)).shift(YW::w, gq(-3, 2)) == p);
}

TEST_CASE("polynomial ring axioms on random instances") {
    for (int i = 0; i < 60; ++i) {
        PolyYW a = random_poly(), b = random_poly(), c = random_poly();
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a - a == PolyYW());
    }
}

TEST_CASE("polynomial canonical string") {
    PolyYW p = PolyYW::w().pow(2) - gq(2) * PolyYW::y() * PolyYW::w() + PolyYW(1);
    CHECK(p.str() == "w^2-2*y*w+1");
    CHECK(PolyYW(gq(242)).str() == "242");
    CHECK(PolyYW(GaussianRational(Rational(-4, 125), Rational(-22, 125))).str() == "-4/125-22/125*i");
    CHECK(PolyYW().str() == "0");
}

TEST_CASE("series multiplication examples") {
    // (1 + t)(1 - t) = 1 - t^2 at N = 2
    TruncSeries1 a(Var::t, 2), b(Var::t, 2);
    a[0] = PolyYW(1);
    a[1] = PolyYW(1);
    b[0] = PolyYW(1);
    b[1] = PolyYW(-1);
    TruncSeries1 prod = a * b;
    CHECK(prod[0] == PolyYW(1));
    CHECK(prod[1] == PolyYW());
    CHECK(prod[2] == PolyYW(-1));

    // e^{wt} e^{-wt} = 1 at N = 6
    TruncSeries1 ew = TruncSeries1::exp_linear(PolyYW::w(), Var::t, 6);
    TruncSeries1 ewm = TruncSeries1::exp_linear(-PolyYW::w(), Var::t, 6);
    TruncSeries1 one = ew * ewm;
    CHECK(one[0] == PolyYW(1));
    for (int n = 1; n <= 6; ++n) CHECK(one[n] == PolyYW());

    // separable outer product: grid 1/(i! j!)
    TruncSeries1 et = TruncSeries1::exp_linear(PolyYW(1), Var::t, 4);
    TruncSeries1 ex = TruncSeries1::exp_linear(PolyYW(1), Var::x, 3);
    TruncSeries2 grid = TruncSeries2::outer(et, ex);
    Rational fi(1);
    for (int i = 0; i <= 4; ++i) {
        if (i > 0) fi *= i;
        Rational fj(1);
        for (int j = 0; j <= 3; ++j) {
            if (j > 0) fj *= j;
            CHECK(grid.at(i, j) == PolyYW(GaussianRational(Rational(1) / (fi * fj))));
        }
    }
}

TEST_CASE("series order and variable mismatches are errors") {
    TruncSeries1 a(Var::t, 3), b(Var::t, 4), c(Var::x, 3);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a + c, std::invalid_argument);
    TruncSeries2 p(2, 3), q(3, 3);
    CHECK_THROWS_AS(p * q, std::invalid_argument);
}

TEST_CASE("series division: geometric series and round-trips") {
    // 1 / (1 - t) at N = 3
    TruncSeries1 one = TruncSeries1::constant(Var::t, 3, PolyYW(1));
    TruncSeries1 den(Var::t, 3);
    den[0] = PolyYW(1);
    den[1] = PolyYW(-1);
    TruncSeries1 geo = one / den;
    for (int n = 0; n <= 3; ++n) CHECK(geo[n] == PolyYW(1));

    for (int i = 0; i < 100; ++i) {
        TruncSeries2 num = random_series2(3, 2, false);
        TruncSeries2 d2 = random_series2(3, 2, true);
        TruncSeries2 q = num / d2;
        CHECK(q * d2 == num);
    }

    // non-unit constant term must signal the degenerate denominator
    TruncSeries2 bad(2, 2);
    bad.at(1, 0) = PolyYW(1);
    TruncSeries2 num2 = TruncSeries2::constant(2, 2, PolyYW(1));
    CHECK_THROWS_AS(num2 / bad, std::domain_error);
    TruncSeries2 nonscalar(2, 2);
    nonscalar.at(0, 0) = PolyYW::w();
    CHECK_THROWS_AS(num2 / nonscalar, std::domain_error);
}

TEST_CASE("g_eta denominator has unit constant term 1") {
    // (c e^{-t} + d) - (a e^{-t} + b) e^x for g_eta = (-1 1; 0 1):
    // constant coefficient (c+d) - (a+b) = 1.
    Matrix2 g = Matrix2::g_eta();
    TruncSeries1 et = TruncSeries1::exp_linear(PolyYW(-1), Var::t, 4);
    TruncSeries1 jd = et * PolyYW(g.c) + TruncSeries1::constant(Var::t, 4, PolyYW(g.d));
    TruncSeries1 jn = et * PolyYW(g.a) + TruncSeries1::constant(Var::t, 4, PolyYW(g.b));
    TruncSeries1 ex = TruncSeries1::exp_linear(PolyYW(1), Var::x, 4);
    TruncSeries1 onex = TruncSeries1::constant(Var::x, 4, PolyYW(1));
    TruncSeries2 den = TruncSeries2::outer(jd, onex) - TruncSeries2::outer(jn, ex);
    CHECK(den.at(0, 0) == PolyYW(1));
    TruncSeries2 q = TruncSeries2::constant(4, 4, PolyYW(1)) / den;
    CHECK(q.at(0, 0) == PolyYW(1));
}

TEST_CASE("exp_linear coefficients") {
    TruncSeries1 ew = TruncSeries1::exp_linear(PolyYW::w(), Var::t, 2);
    CHECK(ew[0] == PolyYW(1));
    CHECK(ew[1] == PolyYW::w());
    CHECK(ew[2] == PolyYW::w().pow(2) * gq(1, 2));

    TruncSeries1 e0 = TruncSeries1::exp_linear(PolyYW(0), Var::t, 3);
    CHECK(e0[0] == PolyYW(1));
    for (int n = 1; n <= 3; ++n) CHECK(e0[n] == PolyYW());

    TruncSeries2 g = TruncSeries2::outer(TruncSeries1::exp_linear(PolyYW::w(), Var::t, 2),
                                         TruncSeries1::exp_linear(PolyYW::y(), Var::x, 2));
    CHECK(g.at(1, 1) == PolyYW::y() * PolyYW::w());
}

TEST_CASE("euler operator") {
    // theta(1/(1-z)) = z + 2z^2 + 3z^3
    TruncSeries1 one = TruncSeries1::constant(Var::z, 3, PolyYW(1));
    TruncSeries1 den(Var::z, 3);
    den[0] = PolyYW(1);
    den[1] = PolyYW(-1);
    TruncSeries1 geo = one / den;
    TruncSeries1 th = geo.euler_theta();
    CHECK(th[0] == PolyYW());
    for (int n = 1; n <= 3; ++n) CHECK(th[n] == PolyYW(gq(n)));

    // (1 + theta)(1/(1-z)) = 1/(1-z)^2 at N = 4
    TruncSeries1 one4 = TruncSeries1::constant(Var::z, 4, PolyYW(1));
    TruncSeries1 den4(Var::z, 4);
    den4[0] = PolyYW(1);
    den4[1] = PolyYW(-1);
    TruncSeries1 geo4 = one4 / den4;
    TruncSeries1 lhs = geo4 + geo4.euler_theta();
    TruncSeries1 rhs = geo4 * geo4;
    CHECK(lhs == rhs);

    TruncSeries1 c = TruncSeries1::constant(Var::z, 3, PolyYW(gq(5)));
    TruncSeries1 tc = c.euler_theta();
    for (int n = 0; n <= 3; ++n) CHECK(tc[n] == PolyYW());
}

TEST_CASE("difference-operator identity on the z-series of Phi") {
    // Phi(z, u-1, y) = (y + theta_z) Phi(z, u, y) for u = -l, coefficient-wise.
    const int N = 8;
    for (int l = 0; l <= 4; ++l) {
        TruncSeries1 phi_l = phi_z_series(l, N);
        TruncSeries1 phi_l1 = phi_z_series(l + 1, N);
        TruncSeries1 rhs = phi_l * PolyYW::y() + phi_l.euler_theta();
        CHECK(phi_l1 == rhs);
    }
}

TEST_CASE("product-operator identities on truncated z-series") {
    // with q a fixed unit scalar standing in for e^{-x}:
    // prod_{k<=n} (1 + theta/k) [1/(1-qz)]       = 1/(1-qz)^{n+1}
    // prod_{k<=n} (-1 + theta/k) [qz/(1-qz)]     = (qz/(1-qz))^{n+1}
    const int N = 10;
    GaussianRational q = gq(2, 3);
    TruncSeries1 one = TruncSeries1::constant(Var::z, N, PolyYW(1));
    TruncSeries1 den(Var::z, N);
    den[0] = PolyYW(1);
    den[1] = PolyYW(-q);
    TruncSeries1 f = one / den;  // 1/(1-qz)
    TruncSeries1 qz(Var::z, N);
    qz[1] = PolyYW(q);
    TruncSeries1 g = qz * f;  // qz/(1-qz)

    TruncSeries1 lhs1 = f, lhs2 = g;
    for (int n = 1; n <= 5; ++n) {
        // apply (±1 + theta/n)
        TruncSeries1 th1 = lhs1.euler_theta();
        for (int c = 0; c <= N; ++c) lhs1[c] = lhs1[c] + th1[c] * gq(1, n);
        TruncSeries1 th2 = lhs2.euler_theta();
        for (int c = 0; c <= N; ++c) lhs2[c] = -lhs2[c] + th2[c] * gq(1, n);
        CHECK(lhs1 == f.pow(n + 1));
        CHECK(lhs2 == g.pow(n + 1));
    }
}

TEST_CASE("divide_with_valuation") {
    // (e^t - 1)/t style strip: series t + t^2 with valuation 1 over t.
    TruncSeries1 num(Var::t, 4), den(Var::t, 4);
    num[1] = PolyYW(1);
    num[2] = PolyYW(1);
    den[1] = PolyYW(1);
    TruncSeries1 q = TruncSeries1::divide_with_valuation(num, den, 1);
    CHECK(q[0] == PolyYW(1));
    CHECK(q[1] == PolyYW(1));
    CHECK_THROWS_AS(TruncSeries1::divide_with_valuation(den, num, 0), std::domain_error);
}
