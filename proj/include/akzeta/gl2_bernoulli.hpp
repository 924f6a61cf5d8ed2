#pragma once

#include "akzeta/matrix2.hpp"
#include "akzeta/series.hpp"

#include <optional>
#include <vector>

namespace akzeta {

// Grid of poly-Bernoulli polynomials B_m^{(-l)}(y,w;g) attached to an exact
// matrix g, for 0 <= m <= order_m, 0 <= l <= order_l.
class GlPolyBernoulli {
public:
    GlPolyBernoulli(Matrix2 g, int nm, int nl, std::vector<PolyYW> grid)
        : g_(std::move(g)), nm_(nm), nl_(nl), grid_(std::move(grid)) {}

    const Matrix2& g() const { return g_; }
    int order_m() const { return nm_; }
    int order_l() const { return nl_; }

    // B_m^{(-l)}(y, w; g) as an exact polynomial in y and w.
    const PolyYW& at(int m, int l) const {
        if (m < 0 || m > nm_ || l < 0 || l > nl_) throw std::out_of_range("GlPolyBernoulli::at");
        return grid_[static_cast<std::size_t>(m) * (nl_ + 1) + l];
    }

private:
    Matrix2 g_;
    int nm_, nl_;
    std::vector<PolyYW> grid_;
};

// Bivariate generating expansion: e^{wt} e^{yx} / ((c e^{-t}+d) - (a e^{-t}+b) e^x),
// entry (k,l) scaled by k! l!.  Requires a+b != c+d (g1 != 1); the formal
// layer does not require the geometric admissibility condition.
GlPolyBernoulli bigen_series(const Matrix2& g, int order_m, int order_l);

// Univariate route: e^{wt} Phi(g e^{-t}, u, y) / j_D(g, e^{-t}), rows
// m = 0..order scaled by m!.  Requires g1 not in {1, inf}.  For u >= 1 the
// matrix must satisfy g1 = 0 and y must be a concrete value with y+n != 0 for
// n <= order; for u <= 0, y may stay symbolic (pass nullopt).
std::vector<PolyYW> unigen_series(const Matrix2& g, int u, int order,
                                  const std::optional<GaussianRational>& y_value = std::nullopt);

// Numerator polynomials of the Euler-operator powers:
// theta^i [1/(1-z)] = A_i(z) / (1-z)^{i+1}; integer coefficients, A_0 = 1.
std::vector<std::vector<Integer>> theta_numerator_polys(int imax);

// Phi(z0, -l, v) = (v + theta_z)^l [1/(1-z)] at z = z0, exact polynomial in
// the chosen formal variable.  z0 must avoid [1, +inf).
PolyYW phi_neg_int_poly(const GaussianRational& z0, int l, YW var);

// Truncated z-series of Phi(z, -l, y): coefficients (n+y)^l.
TruncSeries1 phi_z_series(int l, int order);

// Closed double-sum form for h_d = (-1 1; 0 d):
// B_m^{(u)}(y,w;h_d) = sum_n (y+n)^{-u} sum_j C(n,j) (-1)^j (w-j)^m / d^{n+1}.
PolyYW closed_form_hd(int m, int u, const GaussianRational& d,
                      const std::optional<GaussianRational>& y_value = std::nullopt);

// Closed form for h'_c = (1 -1; c 0); the shift operator j_N(h'_c, D_w^{-1})^n
// = (D_w^{-1} - 1)^n carries a (-1)^n relative to the h_d case:
// B_m^{(u)}(y,w;h'_c) = sum_n (y+n)^{-u} sum_j C(n,j) (-1)^{n+j} (w+n+1-j)^m / c^{n+1}.
PolyYW closed_form_hcprime(int m, int u, const GaussianRational& c,
                           const std::optional<GaussianRational>& y_value = std::nullopt);

// xi_{2,k}(u, -m; y, w; g): the finite tail sum of the split integral
// representation, with the three branches g(inf)=inf / g(0)=inf / generic.
// For u >= 1 a concrete y is required.
PolyYW xi_2k_exact(const Matrix2& g, int k, int u, int m,
                   const std::optional<GaussianRational>& y_value = std::nullopt);

// B_m^{(u)}(y,w;g) reconstructed as xi_{2,m+1}(u,-m;y,w;g); requires g1 = 0.
PolyYW gl2_poly_via_xi2(const Matrix2& g, int u, int m,
                        const std::optional<GaussianRational>& y_value = std::nullopt);

// Transformation checks (exact, over the full grid m <= order_m, l <= order_l):
// inversion: B_m^{(u)}(y,w;h f) = (-1)^m B_m^{(u)}(y,-w-1;h) for f = (0 1; 1 0);
// scaling:   B_m^{(u)}(y,w;alpha h) = (1/alpha) B_m^{(u)}(y,w;h).
bool check_inversion(const Matrix2& h, int order_m, int order_l);
bool check_scaling(const Matrix2& h, const GaussianRational& alpha, int order_m, int order_l);

}  // namespace akzeta
