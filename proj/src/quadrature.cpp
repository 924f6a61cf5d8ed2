#include "akzeta/quadrature.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace akzeta {

namespace {

constexpr double kPiHalf = 1.57079632679489661923132169163975144;

bool usable(const std::complex<double>& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

// Shared double-exponential driver.  `node` maps the transform variable u to
// (x, weight) and reports whether the node is still inside the interval in
// floating point.
struct DENode {
    double x;
    double weight;
    bool ok;
};

template <typename NodeFn>
QuadResult de_integrate(const Integrand& f, const NodeFn& node, const QuadratureConfig& cfg) {
    const double u_max = 6.5;
    auto eval = [&](double u) -> std::complex<double> {
        DENode n = node(u);
        if (!n.ok || n.weight == 0.0) return {0.0, 0.0};
        std::complex<double> v = f(n.x);
        if (!usable(v)) return {0.0, 0.0};  // weight-killed endpoint overflow
        return n.weight * v;
    };

    double h = 1.0;
    std::complex<double> sum = eval(0.0);
    for (int j = 1; j * h <= u_max; ++j) sum += eval(j * h) + eval(-j * h);
    std::complex<double> prev = sum * h;

    QuadResult res;
    res.value = prev;
    res.est_error = std::numeric_limits<double>::infinity();
    double prev_diff = std::numeric_limits<double>::infinity();

    for (int level = 1; level <= cfg.max_levels; ++level) {
        h *= 0.5;
        std::complex<double> add(0.0, 0.0);
        for (int j = 1; j * h <= u_max; j += 2) add += eval(j * h) + eval(-j * h);
        std::complex<double> cur = prev * 0.5 + add * h;
        double diff = std::abs(cur - prev);
        double scale = std::max(1.0, std::abs(cur));
        res.value = cur;
        res.est_error = diff;
        prev = cur;
        if (level >= 3 && diff <= std::max(cfg.abs_tol, cfg.rel_tol * scale) &&
            prev_diff <= 10 * std::max(cfg.abs_tol, cfg.rel_tol * scale))
            break;
        prev_diff = diff;
    }
    res.est_error = std::max(res.est_error, 5e-16 * (1.0 + std::abs(res.value)));
    return res;
}

}  // namespace

QuadResult tanh_sinh(const Integrand& f, double a, double b, const QuadratureConfig& cfg) {
    if (!(b > a)) return {};
    const double c = 0.5 * (a + b), hh = 0.5 * (b - a);
    auto node = [&](double u) -> DENode {
        double s = kPiHalf * std::sinh(u);
        double t = std::tanh(s);
        double x = c + hh * t;
        double w = hh * kPiHalf * std::cosh(u) / (std::cosh(s) * std::cosh(s));
        bool ok = x > a && x < b && std::isfinite(w);
        return {x, w, ok};
    };
    return de_integrate(f, node, cfg);
}

QuadResult exp_sinh(const Integrand& f, double a, const QuadratureConfig& cfg) {
    auto node = [&](double u) -> DENode {
        double s = kPiHalf * std::sinh(u);
        double e = std::exp(s);
        double x = a + e;
        double w = kPiHalf * std::cosh(u) * e;
        bool ok = x > a && std::isfinite(x) && std::isfinite(w) && w > 0;
        return {x, w, ok};
    };
    return de_integrate(f, node, cfg);
}

QuadResult integrate_zero_inf(const Integrand& f, const QuadratureConfig& cfg) {
    QuadResult head = tanh_sinh(f, 0.0, 1.0, cfg);
    QuadResult tail = exp_sinh(f, 1.0, cfg);
    QuadResult out;
    out.value = head.value + tail.value;
    out.est_error = head.est_error + tail.est_error;
    return out;
}

}  // namespace akzeta
