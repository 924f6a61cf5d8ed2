#pragma once

#include "akzeta/poly_yw.hpp"

#include <vector>

namespace akzeta {

enum class Var { t, x, z };

// Univariate power series truncated at order N, coefficients in PolyYW.
// All arithmetic stays at the stored order; mixing orders or variables throws.
class TruncSeries1 {
public:
    TruncSeries1(Var v, int order) : var_(v), c_(order + 1) {
        if (order < 0) throw std::invalid_argument("TruncSeries1: negative order");
    }

    static TruncSeries1 constant(Var v, int order, PolyYW c0) {
        TruncSeries1 s(v, order);
        s.c_[0] = std::move(c0);
        return s;
    }

    // exp(coeff * var) truncated: coefficients coeff^n / n!.
    static TruncSeries1 exp_linear(const PolyYW& coeff, Var v, int order);

    Var var() const { return var_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }

    const PolyYW& operator[](int n) const { return c_.at(n); }
    PolyYW& operator[](int n) { return c_.at(n); }

    TruncSeries1 operator-() const;
    friend TruncSeries1 operator+(TruncSeries1 a, const TruncSeries1& b);
    friend TruncSeries1 operator-(TruncSeries1 a, const TruncSeries1& b);
    friend TruncSeries1 operator*(const TruncSeries1& a, const TruncSeries1& b);
    friend TruncSeries1 operator*(TruncSeries1 a, const PolyYW& c);
    friend TruncSeries1 operator*(const PolyYW& c, TruncSeries1 a) { return std::move(a) * c; }

    // Exact quotient; den must have an invertible (nonzero constant scalar)
    // constant term.
    friend TruncSeries1 operator/(const TruncSeries1& num, const TruncSeries1& den);

    // Quotient where both sides share valuation >= v (the first v
    // coefficients of each must vanish); used for generating functions whose
    // denominator vanishes at the origin, e.g. e^t - 1.  The result is exact
    // only to order N - v and is returned at that order.
    static TruncSeries1 divide_with_valuation(const TruncSeries1& num, const TruncSeries1& den, int v);

    // n-th coefficient multiplied by n (the Euler operator z d/dz).
    TruncSeries1 euler_theta() const;

    TruncSeries1 pow(unsigned e) const;

    friend bool operator==(const TruncSeries1& a, const TruncSeries1& b) {
        return a.var_ == b.var_ && a.c_ == b.c_;
    }

private:
    void check_compatible(const TruncSeries1& o) const {
        if (var_ != o.var_) throw std::invalid_argument("TruncSeries1: variable mismatch");
        if (c_.size() != o.c_.size()) throw std::invalid_argument("TruncSeries1: order mismatch");
    }

    Var var_;
    std::vector<PolyYW> c_;
};

// Bivariate power series in (t, x), truncated per-variable at (N_t, N_x),
// with PolyYW coefficients.
class TruncSeries2 {
public:
    TruncSeries2(int nt, int nx) : nt_(nt), nx_(nx), grid_((nt + 1) * (nx + 1)) {
        if (nt < 0 || nx < 0) throw std::invalid_argument("TruncSeries2: negative order");
    }

    static TruncSeries2 constant(int nt, int nx, PolyYW c) {
        TruncSeries2 s(nt, nx);
        s.at(0, 0) = std::move(c);
        return s;
    }

    // Outer product of a series in t and a series in x.
    static TruncSeries2 outer(const TruncSeries1& st, const TruncSeries1& sx);

    int order_t() const { return nt_; }
    int order_x() const { return nx_; }

    const PolyYW& at(int i, int j) const { return grid_.at(idx(i, j)); }
    PolyYW& at(int i, int j) { return grid_.at(idx(i, j)); }

    TruncSeries2 operator-() const;
    friend TruncSeries2 operator+(TruncSeries2 a, const TruncSeries2& b);
    friend TruncSeries2 operator-(TruncSeries2 a, const TruncSeries2& b);
    friend TruncSeries2 operator*(const TruncSeries2& a, const TruncSeries2& b);
    friend TruncSeries2 operator*(TruncSeries2 a, const PolyYW& c);

    // Exact quotient by recursive coefficient solving; den's constant term
    // must be a nonzero scalar (unit).  A vanishing constant term signals the
    // degenerate g1 = 1 denominator.
    friend TruncSeries2 operator/(const TruncSeries2& num, const TruncSeries2& den);

    friend bool operator==(const TruncSeries2& a, const TruncSeries2& b) {
        return a.nt_ == b.nt_ && a.nx_ == b.nx_ && a.grid_ == b.grid_;
    }

private:
    std::size_t idx(int i, int j) const {
        if (i < 0 || i > nt_ || j < 0 || j > nx_) throw std::out_of_range("TruncSeries2: index");
        return static_cast<std::size_t>(i) * (nx_ + 1) + j;
    }
    void check_compatible(const TruncSeries2& o) const {
        if (nt_ != o.nt_ || nx_ != o.nx_) throw std::invalid_argument("TruncSeries2: order mismatch");
    }

    int nt_, nx_;
    std::vector<PolyYW> grid_;
};

}  // namespace akzeta
