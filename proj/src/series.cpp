#include "akzeta/series.hpp"

namespace akzeta {

TruncSeries1 TruncSeries1::exp_linear(const PolyYW& coeff, Var v, int order) {
    TruncSeries1 s(v, order);
    s.c_[0] = PolyYW(1);
    Rational fact(1);
    PolyYW p(1);
    for (int n = 1; n <= order; ++n) {
        p *= coeff;
        fact *= n;
        s.c_[n] = p * GaussianRational(Rational(1) / fact);
    }
    return s;
}

TruncSeries1 TruncSeries1::operator-() const {
    TruncSeries1 r(var_, order());
    for (std::size_t n = 0; n < c_.size(); ++n) r.c_[n] = -c_[n];
    return r;
}

TruncSeries1 operator+(TruncSeries1 a, const TruncSeries1& b) {
    a.check_compatible(b);
    for (std::size_t n = 0; n < a.c_.size(); ++n) a.c_[n] += b.c_[n];
    return a;
}

TruncSeries1 operator-(TruncSeries1 a, const TruncSeries1& b) {
    a.check_compatible(b);
    for (std::size_t n = 0; n < a.c_.size(); ++n) a.c_[n] -= b.c_[n];
    return a;
}

TruncSeries1 operator*(const TruncSeries1& a, const TruncSeries1& b) {
    a.check_compatible(b);
    TruncSeries1 r(a.var_, a.order());
    for (int n = 0; n <= a.order(); ++n) {
        if (a.c_[n].is_zero()) continue;
        for (int m = 0; n + m <= a.order(); ++m) {
            if (b.c_[m].is_zero()) continue;
            r.c_[n + m] += a.c_[n] * b.c_[m];
        }
    }
    return r;
}

TruncSeries1 operator*(TruncSeries1 a, const PolyYW& c) {
    for (auto& p : a.c_) p *= c;
    return a;
}

TruncSeries1 operator/(const TruncSeries1& num, const TruncSeries1& den) {
    num.check_compatible(den);
    const PolyYW& d0 = den.c_[0];
    if (!d0.is_constant() || d0.is_zero())
        throw std::domain_error("TruncSeries1: denominator constant term is not a unit");
    GaussianRational inv = d0.constant_term().inverse();
    TruncSeries1 q(num.var_, num.order());
    for (int n = 0; n <= num.order(); ++n) {
        PolyYW acc = num.c_[n];
        for (int k = 0; k < n; ++k) {
            if (q.c_[k].is_zero() || den.c_[n - k].is_zero()) continue;
            acc -= q.c_[k] * den.c_[n - k];
        }
        q.c_[n] = acc * inv;
    }
    return q;
}

TruncSeries1 TruncSeries1::divide_with_valuation(const TruncSeries1& num, const TruncSeries1& den, int v) {
    if (v < 0 || v > num.order()) throw std::invalid_argument("divide_with_valuation: bad valuation");
    num.check_compatible(den);
    int n2 = num.order() - v;
    TruncSeries1 num2(num.var_, n2), den2(num.var_, n2);
    for (int k = 0; k < v; ++k) {
        if (!num.c_[k].is_zero()) throw std::domain_error("divide_with_valuation: numerator valuation too small");
        if (!den.c_[k].is_zero()) throw std::domain_error("divide_with_valuation: denominator valuation too small");
    }
    for (int k = 0; k <= n2; ++k) {
        num2.c_[k] = num.c_[k + v];
        den2.c_[k] = den.c_[k + v];
    }
    // The quotient is exact only to order N - v.
    return num2 / den2;
}

TruncSeries1 TruncSeries1::euler_theta() const {
    TruncSeries1 r(var_, order());
    for (int n = 1; n <= order(); ++n) r.c_[n] = c_[n] * GaussianRational(n);
    return r;
}

TruncSeries1 TruncSeries1::pow(unsigned e) const {
    TruncSeries1 acc = TruncSeries1::constant(var_, order(), PolyYW(1));
    TruncSeries1 base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

TruncSeries2 TruncSeries2::outer(const TruncSeries1& st, const TruncSeries1& sx) {
    if (st.var() != Var::t || sx.var() != Var::x)
        throw std::invalid_argument("TruncSeries2::outer expects a t-series and an x-series");
    TruncSeries2 r(st.order(), sx.order());
    for (int i = 0; i <= st.order(); ++i) {
        if (st[i].is_zero()) continue;
        for (int j = 0; j <= sx.order(); ++j) {
            if (sx[j].is_zero()) continue;
            r.at(i, j) = st[i] * sx[j];
        }
    }
    return r;
}

TruncSeries2 TruncSeries2::operator-() const {
    TruncSeries2 r(nt_, nx_);
    for (std::size_t k = 0; k < grid_.size(); ++k) r.grid_[k] = -grid_[k];
    return r;
}

TruncSeries2 operator+(TruncSeries2 a, const TruncSeries2& b) {
    a.check_compatible(b);
    for (std::size_t k = 0; k < a.grid_.size(); ++k) a.grid_[k] += b.grid_[k];
    return a;
}

TruncSeries2 operator-(TruncSeries2 a, const TruncSeries2& b) {
    a.check_compatible(b);
    for (std::size_t k = 0; k < a.grid_.size(); ++k) a.grid_[k] -= b.grid_[k];
    return a;
}

TruncSeries2 operator*(const TruncSeries2& a, const TruncSeries2& b) {
    a.check_compatible(b);
    TruncSeries2 r(a.nt_, a.nx_);
    for (int i = 0; i <= a.nt_; ++i)
        for (int j = 0; j <= a.nx_; ++j) {
            const PolyYW& av = a.at(i, j);
            if (av.is_zero()) continue;
            for (int p = 0; i + p <= a.nt_; ++p)
                for (int q = 0; j + q <= a.nx_; ++q) {
                    const PolyYW& bv = b.at(p, q);
                    if (bv.is_zero()) continue;
                    r.at(i + p, j + q) += av * bv;
                }
        }
    return r;
}

TruncSeries2 operator*(TruncSeries2 a, const PolyYW& c) {
    for (auto& p : a.grid_) p *= c;
    return a;
}

TruncSeries2 operator/(const TruncSeries2& num, const TruncSeries2& den) {
    num.check_compatible(den);
    const PolyYW& d0 = den.at(0, 0);
    if (!d0.is_constant() || d0.is_zero())
        throw std::domain_error("TruncSeries2: denominator constant term is not a unit");
    GaussianRational inv = d0.constant_term().inverse();
    TruncSeries2 q(num.nt_, num.nx_);
    // q(i,j) depends only on q(p,r) with p <= i, r <= j, (p,r) != (i,j);
    // row-major order satisfies that.
    for (int i = 0; i <= num.nt_; ++i)
        for (int j = 0; j <= num.nx_; ++j) {
            PolyYW acc = num.at(i, j);
            for (int p = 0; p <= i; ++p)
                for (int r = 0; r <= j; ++r) {
                    if (p == i && r == j) continue;
                    const PolyYW& qv = q.at(p, r);
                    if (qv.is_zero()) continue;
                    const PolyYW& dv = den.at(i - p, j - r);
                    if (dv.is_zero()) continue;
                    acc -= qv * dv;
                }
            q.at(i, j) = acc * inv;
        }
    return q;
}

}  // namespace akzeta
