#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "akzeta/classical.hpp"

#include <vector>

using namespace akzeta;

// ---------------------------------------------------------------------------
// Independent oracles.  These stay deliberately separate from the library's
// series kernel: plain dense rational series with naive algorithms.
// ---------------------------------------------------------------------------
namespace oracle {

using S = std::vector<Rational>;

S mul(const S& a, const S& b) {
    S r(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// long division assuming b[0] != 0
S div(const S& a, const S& b) {
    S q(a.size(), Rational(0));
    for (std::size_t n = 0; n < a.size(); ++n) {
        Rational acc = a[n];
        for (std::size_t k = 0; k < n; ++k) acc -= q[k] * b[n - k];
        q[n] = acc / b[0];
    }
    return q;
}

S z_series(int N) {  // 1 - e^{-t}
    S z(N + 1, Rational(0));
    Rational f(1);
    for (int n = 1; n <= N; ++n) {
        f *= n;
        z[n] = Rational((n % 2) ? 1 : -1) / f;
    }
    return z;
}

// t/(1 - e^{-t}) expanded by long division; coefficient n times n! gives the
// B-type Bernoulli numbers.
S b_type_gf(int N) {
    S num(N + 1, Rational(0)), den(N + 1, Rational(0));
    // num = t / t = shifted; divide t by (1-e^{-t}) via stripped series
    S z = z_series(N + 1);
    for (int n = 0; n <= N; ++n) den[n] = z[n + 1];  // (1-e^{-t})/t
    num[0] = 1;
    return div(num, den);
}

// direct double sum: Li_{-1}(z)/z = sum_{m>=1} m z^{m-1} composed with z(t)
S b_minus1_gf(int N) {
    S acc(N + 1, Rational(0));
    S z = z_series(N);
    S zp(N + 1, Rational(0));
    zp[0] = 1;
    for (int m = 1; m <= N + 1; ++m) {
        for (int i = 0; i <= N; ++i) acc[i] += Rational(m) * zp[i];
        zp = mul(zp, z);
    }
    return acc;
}

// classical Bernoulli numbers (B_1 = -1/2) by the defining recurrence
// sum_{j<=m} C(m+1, j) B_j = 0.
S bernoulli(int N) {
    S b(N + 1, Rational(0));
    b[0] = 1;
    for (int m = 1; m <= N; ++m) {
        Rational acc(0);
        for (int j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * b[j];
        b[m] = -acc / Rational(m + 1);
    }
    return b;
}

// classical Bernoulli polynomial B_m(w) = sum_j C(m,j) B_j w^{m-j}
PolyYW bernoulli_poly(int m) {
    S b = bernoulli(m);
    PolyYW p;
    for (int j = 0; j <= m; ++j)
        p += PolyYW::monomial(0, m - j, GaussianRational(Rational(binomial(m, j)) * b[j]));
    return p;
}

// expand prod_{j=0}^{n-1} (X + j) and read off coefficients
Integer stirling1_product(unsigned n, unsigned m) {
    std::vector<Integer> coef{1};
    for (unsigned j = 0; j < n; ++j) {
        std::vector<Integer> next(coef.size() + 1, Integer(0));
        for (std::size_t i = 0; i < coef.size(); ++i) {
            next[i + 1] += coef[i];
            next[i] += Integer(j) * coef[i];
        }
        coef = std::move(next);
    }
    return m < coef.size() ? coef[m] : Integer(0);
}

}  // namespace oracle

TEST_CASE("stirling numbers of the first kind") {
    CHECK(stirling1(0, 0) == 1);
    for (unsigned m = 1; m <= 6; ++m) CHECK(stirling1(0, m) == 0);
    CHECK(stirling1(3, 1) == 2);  // X(X+1)(X+2) = 2X + 3X^2 + X^3
    CHECK(stirling1(3, 2) == 3);
    CHECK(stirling1(3, 3) == 1);

    for (unsigned n = 0; n <= 12; ++n)
        for (unsigned m = 0; m <= n; ++m) CHECK(stirling1(n, m) == oracle::stirling1_product(n, m));

    // recurrence [n+1, m] = [n, m-1] + n [n, m]
    for (unsigned n = 0; n <= 11; ++n)
        for (unsigned m = 1; m <= 12; ++m)
            CHECK(stirling1(n + 1, m) == stirling1(n, m - 1) + Integer(n) * stirling1(n, m));
}

TEST_CASE("stirling numbers of the second kind") {
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(3, 2) == 3);
    for (unsigned m = 0; m <= 6; ++m)
        for (unsigned n = m + 1; n <= 6; ++n) CHECK(stirling2(m, n) == 0);
    for (unsigned m = 0; m <= 12; ++m)
        for (unsigned n = 0; n <= 12; ++n) CHECK(stirling2(m, n) == stirling2_recurrence(m, n));
}

TEST_CASE("B-type values against independent expansions") {
    RationalSeq b1 = poly_bernoulli_B(8, 1);
    oracle::S gf = oracle::b_type_gf(8);
    Rational f(1);
    for (int n = 0; n <= 8; ++n) {
        if (n > 0) f *= n;
        CHECK(b1[n] == gf[n] * f);
    }
    CHECK(b1[0] == Rational(1));
    CHECK(b1[1] == Rational(1, 2));
    CHECK(b1[2] == Rational(1, 6));

    RationalSeq bm1 = poly_bernoulli_B(8, -1);
    oracle::S gfm = oracle::b_minus1_gf(8);
    f = 1;
    for (int n = 0; n <= 8; ++n) {
        if (n > 0) f *= n;
        CHECK(bm1[n] == gfm[n] * f);
    }
}

TEST_CASE("C-type values: Bernoulli convention") {
    RationalSeq c1 = poly_bernoulli_C(8, 1);
    oracle::S b = oracle::bernoulli(8);
    for (int n = 0; n <= 8; ++n) CHECK(c1[n] == b[n]);
    CHECK(c1[1] == Rational(-1, 2));
}

TEST_CASE("index-swap dualities") {
    // B_m^{(-k)} = B_k^{(-m)}
    for (int k = 0; k <= 10; ++k) {
        RationalSeq row = poly_bernoulli_B(10, -k);
        for (int m = 0; m <= 10; ++m) {
            RationalSeq col = poly_bernoulli_B(10, -m);
            CHECK(row[m] == col[k]);
        }
    }
    // C_m^{(-k-1)} = C_k^{(-m-1)}
    for (int k = 0; k <= 10; ++k) {
        RationalSeq row = poly_bernoulli_C(10, -k - 1);
        for (int m = 0; m <= 10; ++m) {
            RationalSeq col = poly_bernoulli_C(10, -m - 1);
            CHECK(row[m] == col[k]);
        }
    }
}

TEST_CASE("B equals C plus shifted C") {
    for (int k = -6; k <= 6; ++k) {
        RationalSeq b = poly_bernoulli_B(12, k);
        RationalSeq c = poly_bernoulli_C(12, k);
        RationalSeq cm = poly_bernoulli_C(12, k - 1);
        for (int m = 1; m <= 12; ++m) CHECK(b[m] == c[m] + cm[m - 1]);
    }
}

TEST_CASE("closed Stirling-sum form") {
    for (int m = 0; m <= 12; ++m)
        for (int k = -8; k <= 8; ++k) {
            RationalSeq b = poly_bernoulli_B(m, k);
            CHECK(poly_bernoulli_B_closed(m, k) == b[m]);
        }
    for (int k = -8; k <= 8; ++k) CHECK(poly_bernoulli_B_closed(0, k) == Rational(1));
    CHECK(poly_bernoulli_B_closed(2, 2) == poly_bernoulli_B(2, 2)[2]);
}

TEST_CASE("one-variable polynomials: endpoints and the classical identity") {
    GaussianRational zero(0), one(1);
    for (int k = -4; k <= 4; ++k) {
        RationalSeq b = poly_bernoulli_B(8, k), c = poly_bernoulli_C(8, k);
        for (int m = 0; m <= 8; ++m) {
            PolyYW p = poly_bernoulli_poly(m, k);
            CHECK(p.eval(zero, zero) == GaussianRational(b[m]));
            CHECK(p.eval(zero, one) == GaussianRational(c[m]));
        }
    }
    // B_m^{(1)}(w) = (-1)^m B_m(w) with B_m the classical Bernoulli polynomial
    for (int m = 0; m <= 8; ++m) {
        PolyYW lhs = poly_bernoulli_poly(m, 1);
        PolyYW rhs = oracle::bernoulli_poly(m);
        if (m % 2) rhs = -rhs;
        CHECK(lhs == rhs);
    }
}
