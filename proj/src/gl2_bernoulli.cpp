#include "akzeta/gl2_bernoulli.hpp"

#include "akzeta/classical.hpp"

#include <stdexcept>

namespace akzeta {

namespace {

bool g1_is_one(const Matrix2& g) { return g.a + g.b == g.c + g.d; }
bool g1_is_zero(const Matrix2& g) { return (g.a + g.b).is_zero(); }
bool g1_is_inf(const Matrix2& g) { return (g.c + g.d).is_zero(); }

TruncSeries1 exp_neg_t(int order) { return TruncSeries1::exp_linear(PolyYW(-1), Var::t, order); }

GaussianRational inv_pow(const GaussianRational& base, unsigned e) { return base.pow(-(long)e); }

}  // namespace

GlPolyBernoulli bigen_series(const Matrix2& g, int order_m, int order_l) {
    if (g1_is_one(g)) throw std::invalid_argument("bigen_series: g1 = 1, denominator is not a unit");

    TruncSeries1 et = exp_neg_t(order_m);
    TruncSeries1 ex = TruncSeries1::exp_linear(PolyYW(1), Var::x, order_l);
    TruncSeries1 one_x = TruncSeries1::constant(Var::x, order_l, PolyYW(1));

    TruncSeries1 jd = et * PolyYW(g.c) + TruncSeries1::constant(Var::t, order_m, PolyYW(g.d));
    TruncSeries1 jn = et * PolyYW(g.a) + TruncSeries1::constant(Var::t, order_m, PolyYW(g.b));

    TruncSeries2 den = TruncSeries2::outer(jd, one_x) - TruncSeries2::outer(jn, ex);
    TruncSeries2 num = TruncSeries2::outer(TruncSeries1::exp_linear(PolyYW::w(), Var::t, order_m),
                                           TruncSeries1::exp_linear(PolyYW::y(), Var::x, order_l));
    TruncSeries2 q = num / den;

    std::vector<PolyYW> grid(static_cast<std::size_t>(order_m + 1) * (order_l + 1));
    Rational fm(1);
    for (int m = 0; m <= order_m; ++m) {
        if (m > 0) fm *= m;
        Rational fl(1);
        for (int l = 0; l <= order_l; ++l) {
            if (l > 0) fl *= l;
            grid[static_cast<std::size_t>(m) * (order_l + 1) + l] =
                q.at(m, l) * GaussianRational(fm * fl);
        }
    }
    return {g, order_m, order_l, std::move(grid)};
}

std::vector<std::vector<Integer>> theta_numerator_polys(int imax) {
    std::vector<std::vector<Integer>> polys(imax + 1);
    polys[0] = {Integer(1)};
    for (int i = 0; i < imax; ++i) {
        const auto& A = polys[i];
        int deg = static_cast<int>(A.size()) - 1;
        // A_{i+1} = z ((1-z) A' + (i+1) A)
        std::vector<Integer> next(deg + 2, Integer(0));
        for (int k = 0; k <= deg; ++k) {
            if (k >= 1) {
                next[k] += k * A[k];       // z * A'
                next[k + 1] -= k * A[k];   // z * (-z) A'
            }
            next[k + 1] += (i + 1) * A[k];  // z * (i+1) A
        }
        polys[i + 1] = std::move(next);
    }
    return polys;
}

PolyYW phi_neg_int_poly(const GaussianRational& z0, int l, YW var) {
    if (z0.is_real() && z0.re() >= 1)
        throw std::domain_error("phi_neg_int_poly: z on the cut [1, inf)");
    auto polys = theta_numerator_polys(l);
    GaussianRational one_minus = GaussianRational(1) - z0;
    // v_i = A_i(z0) / (1 - z0)^{i+1}
    std::vector<GaussianRational> v(l + 1);
    GaussianRational denom = one_minus;
    for (int i = 0; i <= l; ++i) {
        GaussianRational num(0);
        for (int k = static_cast<int>(polys[i].size()) - 1; k >= 0; --k)
            num = num * z0 + GaussianRational(Rational(polys[i][k]));
        v[i] = num / denom;
        denom *= one_minus;
    }
    PolyYW p;
    for (int i = 0; i <= l; ++i) {
        PolyYW t = PolyYW::var(var).pow(l - i) * GaussianRational(Rational(binomial(l, i)));
        p += t * v[i];
    }
    return p;
}

TruncSeries1 phi_z_series(int l, int order) {
    TruncSeries1 s(Var::z, order);
    for (int n = 0; n <= order; ++n)
        s[n] = (PolyYW::y() + PolyYW(GaussianRational(n))).pow(l);
    return s;
}

namespace {

// (y + n)^{-u} as a polynomial factor (u <= 0, symbolic y) or concrete scalar
// (u >= 1 or y given).
PolyYW y_power_factor(int u, int n, const std::optional<GaussianRational>& y_value) {
    if (y_value) {
        GaussianRational base = *y_value + GaussianRational(n);
        if (base.is_zero()) throw std::domain_error("gl2: pole at y + n = 0");
        return PolyYW(base.pow(-(long)u));
    }
    if (u > 0) throw std::invalid_argument("gl2: u >= 1 requires a concrete y");
    return (PolyYW::y() + PolyYW(GaussianRational(n))).pow(-u);
}

}  // namespace

std::vector<PolyYW> unigen_series(const Matrix2& g, int u, int order,
                                  const std::optional<GaussianRational>& y_value) {
    if (g1_is_one(g)) throw std::invalid_argument("unigen_series: g1 = 1 unsupported");
    if (g1_is_inf(g)) throw std::invalid_argument("unigen_series: g1 = inf unsupported");

    const int N = order;
    TruncSeries1 et = exp_neg_t(N);
    TruncSeries1 jd = et * PolyYW(g.c) + TruncSeries1::constant(Var::t, N, PolyYW(g.d));
    TruncSeries1 jn = et * PolyYW(g.a) + TruncSeries1::constant(Var::t, N, PolyYW(g.b));
    TruncSeries1 z = jn / jd;  // g e^{-t}; constant term g1

    TruncSeries1 phi(Var::t, N);
    if (u <= 0) {
        const int l = -u;
        auto polys = theta_numerator_polys(l);
        TruncSeries1 one_minus_z = TruncSeries1::constant(Var::t, N, PolyYW(1)) - z;
        if (one_minus_z[0].is_zero())
            throw std::invalid_argument("unigen_series: 1 - g1 = 0");
        TruncSeries1 inv = TruncSeries1::constant(Var::t, N, PolyYW(1)) / one_minus_z;
        TruncSeries1 inv_pow_series = inv;  // (1-z)^{-(i+1)}
        for (int i = 0; i <= l; ++i) {
            // A_i(z) via Horner in the series z
            TruncSeries1 ai = TruncSeries1::constant(Var::t, N, PolyYW(0));
            for (int k = static_cast<int>(polys[i].size()) - 1; k >= 0; --k) {
                ai = ai * z;
                ai[0] += PolyYW(GaussianRational(Rational(polys[i][k])));
            }
            PolyYW ypow = y_value
                              ? PolyYW((*y_value).pow(l - i))
                              : PolyYW::y().pow(l - i);
            phi = phi + ai * inv_pow_series * (ypow * GaussianRational(Rational(binomial(l, i))));
            if (i < l) inv_pow_series = inv_pow_series * inv;
        }
    } else {
        if (!g1_is_zero(g))
            throw std::invalid_argument("unigen_series: u >= 1 requires g1 = 0");
        if (!y_value) throw std::invalid_argument("unigen_series: u >= 1 requires a concrete y");
        // Phi = sum_{n<=N} z^n / (n+y)^u, exact because z has valuation 1.
        TruncSeries1 zpow = TruncSeries1::constant(Var::t, N, PolyYW(1));
        for (int n = 0; n <= N; ++n) {
            GaussianRational base = *y_value + GaussianRational(n);
            if (base.is_zero()) throw std::domain_error("unigen_series: pole at y + n = 0");
            phi = phi + zpow * PolyYW(inv_pow(base, static_cast<unsigned>(u)));
            if (n < N) zpow = zpow * z;
        }
    }

    TruncSeries1 gen = TruncSeries1::exp_linear(PolyYW::w(), Var::t, N) * phi / jd;
    std::vector<PolyYW> rows(N + 1);
    Rational fm(1);
    for (int m = 0; m <= N; ++m) {
        if (m > 0) fm *= m;
        rows[m] = gen[m] * GaussianRational(fm);
    }
    return rows;
}

PolyYW closed_form_hd(int m, int u, const GaussianRational& d,
                      const std::optional<GaussianRational>& y_value) {
    if (d.is_zero()) throw std::invalid_argument("closed_form_hd: d = 0");
    PolyYW acc;
    for (int n = 0; n <= m; ++n) {
        PolyYW inner;
        for (int j = 0; j <= n; ++j) {
            PolyYW wj = (PolyYW::w() - PolyYW(GaussianRational(j))).pow(m);
            GaussianRational c = GaussianRational(Rational(binomial(n, j)));
            if (j & 1) c = -c;
            inner += wj * c;
        }
        acc += y_power_factor(u, n, y_value) * inner * inv_pow(d, n + 1);
    }
    return acc;
}

PolyYW closed_form_hcprime(int m, int u, const GaussianRational& c,
                           const std::optional<GaussianRational>& y_value) {
    if (c.is_zero()) throw std::invalid_argument("closed_form_hcprime: c = 0");
    PolyYW acc;
    for (int n = 0; n <= m; ++n) {
        PolyYW inner;
        for (int j = 0; j <= n; ++j) {
            PolyYW wj = (PolyYW::w() + PolyYW(GaussianRational(n + 1 - j))).pow(m);
            GaussianRational cf = GaussianRational(Rational(binomial(n, j)));
            if ((n + j) & 1) cf = -cf;
            inner += wj * cf;
        }
        acc += y_power_factor(u, n, y_value) * inner * inv_pow(c, n + 1);
    }
    return acc;
}

PolyYW xi_2k_exact(const Matrix2& g, int k, int u, int m,
                   const std::optional<GaussianRational>& y_value) {
    if (k < 0 || m < 0) throw std::invalid_argument("xi_2k_exact: k, m must be >= 0");
    const bool g_inf_inf = g.c.is_zero();   // g(inf) = inf
    const bool g_zero_inf = g.d.is_zero();  // g(0) = inf

    PolyYW acc;
    for (int n = 0; n < k; ++n) {
        PolyYW base;
        if (g_inf_inf) {
            base = PolyYW::w().pow(m) * inv_pow(g.d, n + 1);
        } else if (g_zero_inf) {
            base = (PolyYW::w() + PolyYW(GaussianRational(n + 1))).pow(m) * inv_pow(g.c, n + 1);
        } else {
            // (1/(c^{n+1} n!)) D_w^{n+1} prod_{j=1}^n (D_s^{-1} - w + j) Phi(-d/c, s, w) at s = -m.
            GaussianRational z0 = -(g.d / g.c);
            PolyYW inner;
            for (int mm = 0; mm <= n; ++mm) {
                Rational s1 = Rational(stirling1(n, mm));
                if (s1 == 0) continue;
                PolyYW sum_sigma;
                for (int sigma = 0; sigma <= mm; ++sigma) {
                    PolyYW pre = (PolyYW(GaussianRational(1)) - PolyYW::w()).pow(mm - sigma) *
                                 GaussianRational(Rational(binomial(mm, sigma)));
                    sum_sigma += pre * phi_neg_int_poly(z0, m + sigma, YW::w);
                }
                inner += sum_sigma * GaussianRational(s1);
            }
            // D_w^{n+1}: w -> w + n + 1
            inner = inner.shift(YW::w, GaussianRational(n + 1));
            base = inner * (inv_pow(g.c, n + 1) / GaussianRational(Rational(factorial(n))));
        }

        // j_N(g, D_w^{-1})^n: sum_tau C(n,tau) a^tau b^{n-tau}, w -> w - tau.
        PolyYW with_op;
        for (int tau = 0; tau <= n; ++tau) {
            GaussianRational cf =
                GaussianRational(Rational(binomial(n, tau))) * g.a.pow(tau) * g.b.pow(n - tau);
            if (cf.is_zero()) continue;
            with_op += base.shift(YW::w, GaussianRational(-tau)) * cf;
        }
        acc += y_power_factor(u, n, y_value) * with_op;
    }
    return acc;
}

PolyYW gl2_poly_via_xi2(const Matrix2& g, int u, int m,
                        const std::optional<GaussianRational>& y_value) {
    if (!g1_is_zero(g)) throw std::invalid_argument("gl2_poly_via_xi2: requires g1 = 0");
    return xi_2k_exact(g, m + 1, u, m, y_value);
}

bool check_inversion(const Matrix2& h, int order_m, int order_l) {
    Matrix2 f{0, 1, 1, 0};
    Matrix2 hf = h * f;
    GlPolyBernoulli lhs = bigen_series(hf, order_m, order_l);
    GlPolyBernoulli rhs = bigen_series(h, order_m, order_l);
    PolyYW img_y = PolyYW::y();
    PolyYW img_w = -PolyYW::w() - PolyYW(1);
    for (int m = 0; m <= order_m; ++m)
        for (int l = 0; l <= order_l; ++l) {
            PolyYW expect = rhs.at(m, l).substitute(img_y, img_w);
            if (m & 1) expect = -expect;
            if (lhs.at(m, l) != expect) return false;
        }
    return true;
}

bool check_scaling(const Matrix2& h, const GaussianRational& alpha, int order_m, int order_l) {
    if (alpha.is_zero()) throw std::invalid_argument("check_scaling: alpha = 0");
    Matrix2 hf = alpha * h;
    GlPolyBernoulli lhs = bigen_series(hf, order_m, order_l);
    GlPolyBernoulli rhs = bigen_series(h, order_m, order_l);
    GaussianRational inv = alpha.inverse();
    for (int m = 0; m <= order_m; ++m)
        for (int l = 0; l <= order_l; ++l)
            if (lhs.at(m, l) != rhs.at(m, l) * inv) return false;
    return true;
}

}  // namespace akzeta
