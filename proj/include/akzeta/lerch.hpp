#pragma once

#include "akzeta/quadrature.hpp"

#include <complex>
#include <string>

namespace akzeta {

enum class EvalMethod { series, integral, hankel, circle, closed_form };

struct ComplexEval {
    std::complex<double> value{0.0, 0.0};
    double est_error = 0.0;
    EvalMethod method = EvalMethod::series;
};

std::string to_string(EvalMethod m);

// Lerch transcendent Phi(z, u, y) = sum_{n>=0} z^n (n+y)^{-u}.
// Supported regions: |z| <= 1/2 (certified series, any u); z off the cut
// [1, inf) with Re u > 0 (integral representation, Re y pushed above 1 by the
// forward recurrence); integer u <= 0 off the cut (exact rational form).
ComplexEval lerch_phi(std::complex<double> z, std::complex<double> u, std::complex<double> y,
                      const QuadratureConfig& cfg = {});

// Phi(z, -l, y) = (y + theta_z)^l [1/(1-z)], evaluated in floating point.
std::complex<double> phi_neg_int(std::complex<double> z, int l, std::complex<double> y);

// Hurwitz zeta sum_{n>=0}(n+y)^{-u} for Re u > 1, Re y > 0, by
// Euler-Maclaurin with tail corrections.
ComplexEval hurwitz_zeta(std::complex<double> u, std::complex<double> y, double tol = 1e-13);

// Riemann zeta for real s > 1, independent Euler-Maclaurin summation with a
// 1e-12 target.
double riemann_zeta_real(double s);

}  // namespace akzeta
