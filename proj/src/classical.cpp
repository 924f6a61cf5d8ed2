#include "akzeta/classical.hpp"

#include <stdexcept>

namespace akzeta {

Integer stirling1(unsigned n, unsigned m) {
    if (m > n) return 0;
    // [n+1, m] = [n, m-1] + n [n, m], [0,0] = 1.
    std::vector<Integer> row(n + 1, 0);
    row[0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = i; j > 0; --j) row[j] = row[j - 1] + (i - 1) * row[j];
        row[0] = 0;
    }
    return row[m];
}

Integer stirling2(unsigned m, unsigned n) {
    Integer acc = 0;
    for (unsigned j = 0; j <= n; ++j) {
        Integer term = binomial(n, j);
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), j, m);  // 0^0 = 1
        term *= p;
        if (j & 1)
            acc -= term;
        else
            acc += term;
    }
    if (n & 1) acc = -acc;
    Integer nf = factorial(n);
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(), nf.get_mpz_t());
    if (r != 0) throw std::logic_error("stirling2: non-integer alternating sum");
    return q;
}

Integer stirling2_recurrence(unsigned m, unsigned n) {
    if (n > m) return 0;
    std::vector<Integer> row(m + 1, 0);
    row[0] = 1;  // {0 0} = 1
    for (unsigned i = 1; i <= m; ++i) {
        for (unsigned j = std::min<unsigned>(i, m); j > 0; --j) row[j] = j * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[n];
}

namespace {

// Plain rational power series in t, dense, truncated at the vector length.
using QSeries = std::vector<Rational>;

QSeries qs_mul(const QSeries& a, const QSeries& b) {
    QSeries r(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < a.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

QSeries qs_div_unit(const QSeries& num, const QSeries& den) {
    if (den.empty() || den[0] == 0) throw std::domain_error("qs_div_unit: non-unit denominator");
    QSeries q(num.size(), Rational(0));
    for (std::size_t n = 0; n < num.size(); ++n) {
        Rational acc = num[n];
        for (std::size_t k = 0; k < n; ++k) acc -= q[k] * den[n - k];
        q[n] = acc / den[0];
    }
    return q;
}

// 1 - e^{-t} = sum_{n>=1} (-1)^{n+1} t^n / n!
QSeries one_minus_exp_neg(int N) {
    QSeries z(N + 1, Rational(0));
    Rational f(1);
    for (int n = 1; n <= N; ++n) {
        f *= n;
        z[n] = Rational((n & 1) ? 1 : -1) / f;
    }
    return z;
}

// e^t - 1
QSeries exp_minus_one(int N) {
    QSeries z(N + 1, Rational(0));
    Rational f(1);
    for (int n = 1; n <= N; ++n) {
        f *= n;
        z[n] = Rational(1) / f;
    }
    return z;
}

// Li_k(z(t))/z(t) as a t-series, where z = 1-e^{-t} has valuation 1.  The
// composed sum sum_{m=1}^{N+1} z^{m-1}/m^k is exact at order N because z^{m-1}
// has valuation m-1; this makes every integer k (positive or negative) exact
// with no special casing.
QSeries li_over_z(int N, int k) {
    QSeries z = one_minus_exp_neg(N);
    QSeries acc(N + 1, Rational(0));
    QSeries zpow(N + 1, Rational(0));
    zpow[0] = 1;  // z^0
    for (int m = 1; m <= N + 1; ++m) {
        Rational mk = pow_int(Rational(m), k);
        for (int i = 0; i <= N; ++i)
            if (zpow[i] != 0) acc[i] += zpow[i] / mk;
        if (m <= N) zpow = qs_mul(zpow, z);
    }
    return acc;
}

}  // namespace

RationalSeq poly_bernoulli_B(int N, int k) {
    if (N < 0) throw std::invalid_argument("poly_bernoulli_B: negative truncation");
    // Li_k(z)/(1-e^{-t}) = (Li_k(z)/z) directly.
    QSeries f = li_over_z(N, k);
    Rational fact(1);
    RationalSeq out(N + 1);
    for (int n = 0; n <= N; ++n) {
        if (n > 0) fact *= n;
        out[n] = f[n] * fact;
    }
    return out;
}

RationalSeq poly_bernoulli_C(int N, int k) {
    if (N < 0) throw std::invalid_argument("poly_bernoulli_C: negative truncation");
    // Li_k(z)/(e^t-1) = (Li_k(z)/z) * (z/(e^t-1)); both factors are unit series.
    QSeries f = li_over_z(N, k);
    QSeries num = one_minus_exp_neg(N + 1), den = exp_minus_one(N + 1);
    // strip the shared valuation-1 factor t
    QSeries num1(N + 1, Rational(0)), den1(N + 1, Rational(0));
    for (int n = 0; n <= N; ++n) {
        num1[n] = num[n + 1];
        den1[n] = den[n + 1];
    }
    QSeries ratio = qs_div_unit(num1, den1);
    QSeries g = qs_mul(f, ratio);
    Rational fact(1);
    RationalSeq out(N + 1);
    for (int n = 0; n <= N; ++n) {
        if (n > 0) fact *= n;
        out[n] = g[n] * fact;
    }
    return out;
}

Rational poly_bernoulli_B_closed(unsigned m, int k) {
    Rational acc(0);
    for (unsigned n = 0; n <= m; ++n) {
        Rational term = Rational(factorial(n)) * Rational(stirling2(m, n)) / pow_int(Rational(n + 1), k);
        if (n & 1)
            acc -= term;
        else
            acc += term;
    }
    if (m & 1) acc = -acc;
    return acc;
}

std::vector<PolyYW> poly_bernoulli_poly_row(int N, int k) {
    if (N < 0) throw std::invalid_argument("poly_bernoulli_poly_row: negative truncation");
    QSeries f = li_over_z(N, k);
    // multiply by e^{-wt}: coefficient rows become polynomials in w
    std::vector<PolyYW> g(N + 1);
    Rational fact(1);
    std::vector<Rational> inv_fact(N + 1);
    for (int n = 0; n <= N; ++n) {
        if (n > 0) fact *= n;
        inv_fact[n] = Rational(1) / fact;
    }
    for (int n = 0; n <= N; ++n) {
        PolyYW acc;
        for (int i = 0; i <= n; ++i) {
            // [t^i of e^{-wt}] * f[n-i] = (-w)^i/i! * f[n-i]
            if (f[n - i] == 0) continue;
            Rational c = f[n - i] * inv_fact[i];
            if (i & 1) c = -c;
            acc += PolyYW::monomial(0, i, GaussianRational(c));
        }
        g[n] = acc;
    }
    // scale row m by m!
    Rational fm(1);
    for (int n = 0; n <= N; ++n) {
        if (n > 0) fm *= n;
        g[n] *= GaussianRational(fm);
    }
    return g;
}

PolyYW poly_bernoulli_poly(unsigned m, int k) { return poly_bernoulli_poly_row(static_cast<int>(m), k)[m]; }

RationalSeq bernoulli_numbers(int N) { return poly_bernoulli_C(N, 1); }

}  // namespace akzeta
