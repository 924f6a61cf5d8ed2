#pragma once

#include <complex>
#include <functional>

namespace akzeta {

struct QuadratureConfig {
    double abs_tol = 1e-11;
    double rel_tol = 1e-11;
    int max_levels = 12;       // tanh-sinh / exp-sinh refinement depth
    double hankel_radius = 0;  // 0 = choose from the singularity layout
    int circle_nodes = 64;     // starting trapezoid node count on circles

    QuadratureConfig() = default;
};

struct QuadResult {
    std::complex<double> value{0.0, 0.0};
    double est_error = 0.0;
};

using Integrand = std::function<std::complex<double>(double)>;

// Double-exponential (tanh-sinh) rule on the finite interval [a, b]; handles
// integrable endpoint singularities like t^{s-1}.
QuadResult tanh_sinh(const Integrand& f, double a, double b, const QuadratureConfig& cfg);

// Double-exponential rule on [a, +inf) for integrands with exponential decay
// (x = a + exp((pi/2) sinh u)).
QuadResult exp_sinh(const Integrand& f, double a, const QuadratureConfig& cfg);

// tanh_sinh on [a, 1] + exp_sinh on [1, inf).
QuadResult integrate_zero_inf(const Integrand& f, const QuadratureConfig& cfg);

}  // namespace akzeta
