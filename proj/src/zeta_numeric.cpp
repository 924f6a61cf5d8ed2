#include "akzeta/zeta_numeric.hpp"

#include "akzeta/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace akzeta {

namespace {

using cdouble = std::complex<double>;

constexpr double kTwoPi = 6.28318530717958647692528676655900577;

struct InnerErrorTracker {
    // Maximal absolute error density |inner est| * |prefactor| over the nodes;
    // scaled by an effective support width when folded into the estimate.
    double max_density = 0.0;
    void record(const ComplexEval& e, double prefactor_mag) {
        double d = e.est_error * prefactor_mag;
        if (d > max_density) max_density = d;
    }
};

// Integrand of the direct representation at real t > 0, written with e^{-t}
// so nothing overflows for large t:
//   z = (a + b e^{-t}) / (c + d e^{-t}),  1/j_D = e^{-t} / (c + d e^{-t}).
cdouble xi_integrand(double t, cdouble u, cdouble s, cdouble y, cdouble w, const Matrix2c& g,
                     const QuadratureConfig& inner_cfg, InnerErrorTracker* track) {
    double em = std::exp(-t);
    cdouble den = g.c + g.d * em;
    cdouble z = (g.a + g.b * em) / den;
    ComplexEval phi;
    try {
        phi = lerch_phi(z, u, y, inner_cfg);
    } catch (const std::domain_error& e) {
        // Far in the tail e^{-t} underflows against the finite limit point and
        // z rounds onto the cut; the integrand is negligible there.
        if (t > 30.0) return {0.0, 0.0};
        throw std::domain_error(std::string(e.what()) + " (xi_d integrand at t=" + std::to_string(t) +
                                ")");
    }
    cdouble pre = cpow(cdouble(t, 0.0), s - 1.0) * std::exp(-w * t) * em / den;
    if (track) track->record(phi, std::abs(pre));
    return pre * phi.value;
}

QuadratureConfig inner_config(const QuadratureConfig& cfg) {
    QuadratureConfig inner = cfg;
    inner.abs_tol = cfg.abs_tol * 0.1;
    inner.rel_tol = cfg.rel_tol * 0.1;
    return inner;
}

// Distance from the origin to the nearest singularity of
// t -> Phi(g e^t, u, y)/j_D(g, e^t): branch points where g e^t = 1 and poles
// where j_D(g, e^t) = 0, over the branches of the logarithm nearest 0.
double nearest_singularity(const Matrix2c& g) {
    double best = std::numeric_limits<double>::infinity();
    auto consider = [&](cdouble target) {
        if (!(std::isfinite(target.real()) && std::isfinite(target.imag()))) return;
        if (std::abs(target) == 0.0) return;
        cdouble lg = std::log(target);
        for (int k = -1; k <= 1; ++k) {
            cdouble t = lg + cdouble(0.0, kTwoPi * k);
            double d = std::abs(t);
            if (d > 1e-12 && d < best) best = d;
        }
    };
    // e^t = g^{-1}(1) = (d*1 - b)/(-c*1 + a)
    cdouble det = g.det();
    if (std::abs(det) > 0) {
        cdouble denom = g.a - g.c;
        if (std::abs(denom) > 0) consider((g.d - g.b) / denom);
    }
    // e^t = -d/c (pole of j_D)
    if (std::abs(g.c) > 0) consider(-g.d / g.c);
    return best;
}

double choose_radius(const Matrix2c& g, const QuadratureConfig& cfg) {
    if (cfg.hankel_radius > 0) return cfg.hankel_radius;
    double d = nearest_singularity(g);
    double eps = std::isfinite(d) ? 0.25 * d : 0.4;
    return std::min(std::max(eps, 1e-3), 0.4);
}

}  // namespace

ComplexEval xi_d(cdouble u, cdouble s, cdouble y, cdouble w, const Matrix2c& g,
                 const QuadratureConfig& cfg) {
    QuadratureConfig inner = inner_config(cfg);
    InnerErrorTracker track;
    auto f = [&](double t) { return xi_integrand(t, u, s, y, w, g, inner, &track); };
    QuadResult q = integrate_zero_inf(f, cfg);
    cdouble gamma_s = complex_gamma(s);
    ComplexEval out;
    out.value = q.value / gamma_s;
    out.est_error = (q.est_error + 10.0 * track.max_density) / std::abs(gamma_s) +
                    1e-15 * (1.0 + std::abs(out.value));
    out.method = EvalMethod::integral;
    return out;
}

ComplexEval xi_d_certified(cdouble u, cdouble s, cdouble y, cdouble w, const Matrix2& g,
                           const QuadratureConfig& cfg) {
    DomainReport rep = domain_report(g);
    if (!rep.certifies(u, s, y, w))
        throw std::domain_error("xi_d_certified: parameters outside the certified domain");
    return xi_d(u, s, y, w, Matrix2c(g), cfg);
}

ComplexEval xi_n(cdouble u, cdouble s, cdouble y, cdouble w, const Matrix2c& g,
                 const QuadratureConfig& cfg) {
    return xi_d(u, s, y + 1.0, w, g, cfg);
}

RelationResidual xi_relation_check(RelationKind kind, const Matrix2& g, cdouble u, cdouble s,
                                   cdouble y, cdouble w, const QuadratureConfig& cfg) {
    Matrix2c gc(g);
    RelationResidual rr;
    if (kind == RelationKind::difference) {
        ComplexEval n1 = xi_n(u, s, y, w - 1.0, gc, cfg);
        ComplexEval n2 = xi_n(u, s, y, w, gc, cfg);
        ComplexEval d1 = xi_d(u, s, y, w - 1.0, gc, cfg);
        ComplexEval d2 = xi_d(u, s, y, w, gc, cfg);
        cdouble corr = cpow(y, -u) * cpow(w, -s);
        cdouble lhs = gc.a * n1.value + gc.b * n2.value;
        cdouble rhs = gc.c * d1.value + gc.d * d2.value - corr;
        rr.residual = std::abs(lhs - rhs);
        rr.combined_error = std::abs(gc.a) * n1.est_error + std::abs(gc.b) * n2.est_error +
                            std::abs(gc.c) * d1.est_error + std::abs(gc.d) * d2.est_error +
                            1e-14 * (1.0 + std::abs(lhs) + std::abs(rhs));
    } else {
        Matrix2 gi = g.inverse();
        ComplexEval lhs = xi_d(u, s, y, w - 1.0, gc, cfg);
        ComplexEval rhs = xi_d(s, u, w, y - 1.0, Matrix2c(gi), cfg);
        cdouble factor = -1.0 / gc.det();
        rr.residual = std::abs(lhs.value - factor * rhs.value);
        rr.combined_error = lhs.est_error + std::abs(factor) * rhs.est_error +
                            1e-14 * (1.0 + std::abs(lhs.value));
    }
    return rr;
}

namespace {

// e^{-wt} Phi(g e^t, u, y) / j_D(g, e^t) at complex t, written with e^{-t} so
// nothing overflows on the outgoing ray.
cdouble hankel_core(cdouble t, cdouble u, cdouble y, cdouble w, const Matrix2c& g,
                    const QuadratureConfig& inner_cfg, InnerErrorTracker* track) {
    cdouble em = std::exp(-t);
    cdouble den = g.c + g.d * em;
    cdouble z = (g.a + g.b * em) / den;
    ComplexEval phi;
    try {
        phi = lerch_phi(z, u, y, inner_cfg);
    } catch (const std::domain_error&) {
        if (t.real() > 30.0) return {0.0, 0.0};  // z rounded onto the cut in the far tail
        throw;
    }
    cdouble pre = std::exp(-w * t) * em / den;
    if (track) track->record(phi, std::abs(pre));
    return pre * phi.value;
}

}  // namespace

ComplexEval xi_d_hankel(cdouble u, cdouble s, cdouble y, cdouble w, const Matrix2& g,
                        const QuadratureConfig& cfg) {
    if (s.imag() == 0.0 && std::abs(s.real() - std::round(s.real())) < 1e-12)
        throw std::domain_error("xi_d_hankel: integer s; use the circle representation");
    {
        // g1 must avoid {1, inf} for the uniform-radius contour.
        GaussianRational cd = g.c + g.d;
        if (cd.is_zero()) throw std::domain_error("xi_d_hankel: g1 = inf unsupported");
        if (g.a + g.b == cd) throw std::domain_error("xi_d_hankel: g1 = 1 unsupported");
    }
    {
        // The contour frees s, and the continued Phi frees u; what remains is
        // the (y, w) tail behaviour, so test feasibility with u and s
        // effectively unconstrained.
        DomainReport rep = domain_report(g);
        if (!rep.certifies(cdouble(1e9, 0.0), cdouble(1e9, 0.0), y, w))
            throw std::domain_error("xi_d_hankel: (y, w) outside the certified domain");
    }

    Matrix2c gc(g);
    QuadratureConfig inner = inner_config(cfg);
    InnerErrorTracker track;
    double eps = choose_radius(gc, cfg);

    for (int attempt = 0; attempt < 5; ++attempt) {
        try {
            // Ray part: (e^{2pi i s} - 1) cancels against the prefactor.
            auto fray = [&](double t) {
                return cpow(cdouble(t, 0.0), s - 1.0) * hankel_core(cdouble(t, 0.0), u, y, w, gc, inner, &track);
            };
            QuadResult ray1 = eps < 1.0 ? tanh_sinh(fray, eps, 1.0, cfg) : QuadResult{};
            QuadResult ray2 = exp_sinh(fray, std::max(eps, 1.0), cfg);

            // Circle part with explicit phase continuation of t^{s-1}.
            double leps = std::log(eps);
            auto fcirc = [&](double theta) {
                cdouble t = eps * std::exp(cdouble(0.0, theta));
                cdouble tpow = std::exp((s - 1.0) * cdouble(leps, theta));
                return tpow * hankel_core(t, u, y, w, gc, inner, &track) * cdouble(0.0, 1.0) * t;
            };
            QuadResult circ = tanh_sinh(fcirc, 0.0, kTwoPi, cfg);

            // Phase closure: after a full turn the power picks up e^{2pi i (s-1)}.
            cdouble start = std::exp((s - 1.0) * cdouble(leps, 0.0));
            cdouble stop = std::exp((s - 1.0) * cdouble(leps, kTwoPi));
            cdouble expected = start * std::exp(cdouble(0.0, kTwoPi) * (s - 1.0));
            if (std::abs(stop - expected) > 1e-8 * (1.0 + std::abs(expected)))
                throw std::logic_error("xi_d_hankel: phase closure failed");

            cdouble gamma_s = complex_gamma(s);
            cdouble prefactor = std::exp(cdouble(0.0, kTwoPi) * s) - 1.0;
            ComplexEval out;
            out.value = (ray1.value + ray2.value + circ.value / prefactor) / gamma_s;
            out.est_error = (ray1.est_error + ray2.est_error + circ.est_error / std::abs(prefactor) +
                             10.0 * track.max_density) /
                                std::abs(gamma_s) +
                            1e-15 * (1.0 + std::abs(out.value));
            out.method = EvalMethod::hankel;
            return out;
        } catch (const std::domain_error&) {
            eps *= 0.5;  // circle clipped a singularity: shrink and retry
            if (eps < 1e-6) throw;
        }
    }
    throw std::domain_error("xi_d_hankel: could not find an admissible radius");
}

ComplexEval xi_d_at_neg_int(cdouble u, int m, cdouble y, cdouble w, const Matrix2& g,
                            const QuadratureConfig& cfg) {
    if (m < 0) throw std::invalid_argument("xi_d_at_neg_int: m must be >= 0");
    if (g.a + g.b == g.c + g.d) throw std::domain_error("xi_d_at_neg_int: g1 = 1 unsupported");
    if ((g.c + g.d).is_zero())
        throw std::domain_error("xi_d_at_neg_int: g1 = inf puts a pole of 1/j_D inside the circle");

    Matrix2c gc(g);
    QuadratureConfig inner = inner_config(cfg);
    double eps = choose_radius(gc, cfg);

    double fact = 1.0;
    for (int k = 2; k <= m; ++k) fact *= k;
    double sign = (m % 2 == 0) ? 1.0 : -1.0;

    for (int attempt = 0; attempt < 5; ++attempt) {
        try {
            InnerErrorTracker track;
            // (1/2pi) int_0^{2pi} G(eps e^{i th}) (eps e^{i th})^{-m} dth, periodic
            // and analytic: the trapezoid rule converges spectrally.
            int nodes = std::clamp(cfg.circle_nodes, 16, 4096);
            cdouble prev(0.0, 0.0);
            double change = std::numeric_limits<double>::infinity();
            cdouble val(0.0, 0.0);
            for (; nodes <= 8192; nodes *= 2) {
                cdouble acc(0.0, 0.0);
                for (int j = 0; j < nodes; ++j) {
                    double th = kTwoPi * j / nodes;
                    cdouble t = eps * std::exp(cdouble(0.0, th));
                    cdouble tpw(1.0, 0.0);
                    for (int k = 0; k < m; ++k) tpw *= t;
                    acc += hankel_core(t, u, y, w, gc, inner, &track) / tpw;
                }
                val = acc / static_cast<double>(nodes);
                change = std::abs(val - prev);
                prev = val;
                if (nodes > cfg.circle_nodes && change < cfg.abs_tol * 0.5) break;
            }
            ComplexEval out;
            out.value = sign * fact * val;
            out.est_error = fact * (change + 7.0 * track.max_density) +
                            1e-15 * (1.0 + std::abs(out.value));
            out.method = EvalMethod::circle;
            return out;
        } catch (const std::domain_error&) {
            eps *= 0.5;
            if (eps < 1e-6) throw;
        }
    }
    throw std::domain_error("xi_d_at_neg_int: could not find an admissible radius");
}

}  // namespace akzeta
