#include "akzeta/lerch.hpp"

#include "akzeta/gamma.hpp"
#include "akzeta/gl2_bernoulli.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace akzeta {

namespace {

using cdouble = std::complex<double>;

bool on_cut(cdouble z) { return z.imag() == 0.0 && z.real() >= 1.0; }

bool is_nonpositive_int(cdouble u, long& out) {
    if (u.imag() != 0.0) return false;
    double r = std::round(u.real());
    if (std::abs(u.real() - r) > 1e-14 * (1.0 + std::abs(u.real()))) return false;
    if (r > 0) return false;
    out = static_cast<long>(r);
    return true;
}

// Certified truncated series for |z| <= 1/2: tail bounded by the geometric
// ratio once (n + Re y)^{-Re u} stops growing against z^n.
ComplexEval phi_series(cdouble z, cdouble u, cdouble y, const QuadratureConfig& cfg) {
    const double q = std::abs(z);
    ComplexEval out;
    out.method = EvalMethod::series;
    cdouble zp(1.0, 0.0);
    cdouble acc(0.0, 0.0);
    double last = 0.0;
    const int n_max = 1200;
    int n = 0;
    int calm = 0;
    for (; n <= n_max; ++n) {
        cdouble term = zp * cpow(cdouble(n, 0.0) + y, -u);
        acc += term;
        zp *= z;
        last = std::abs(term);
        double tail_bound = last * q / std::max(1e-300, 1.0 - q);
        if (n > 4 && tail_bound < cfg.abs_tol * 0.1)
            ++calm;
        else
            calm = 0;
        if (calm >= 3) break;
    }
    out.value = acc;
    out.est_error = std::max(last * q / std::max(1e-300, 1.0 - q), 1e-16 * (1.0 + std::abs(acc)));
    return out;
}

ComplexEval phi_dispatch(cdouble z, cdouble u, cdouble y, const QuadratureConfig& cfg);

// Order lift for Re u <= 0 (non-integer): Phi(z,u,y) = (y + theta_z)^K
// Phi(z, u+K, y) with theta_z = z d/dz; the z-derivatives come from a Cauchy
// circle that stays off the cut, and (z d/dz)^i = sum_j {i j} z^j d^j/dz^j.
ComplexEval phi_theta_lift(cdouble z, cdouble u, cdouble y, const QuadratureConfig& cfg) {
    const int K = static_cast<int>(std::ceil(-u.real())) + 1;
    double dist = z.real() >= 1.0 ? std::abs(z.imag()) : std::abs(z - cdouble(1.0, 0.0));
    double r = 0.4 * dist;
    if (!(r > 0)) throw std::domain_error("lerch_phi: cannot lift on the cut");

    // Stirling numbers of the second kind up to K (small, exact in doubles).
    std::vector<std::vector<double>> s2(K + 1, std::vector<double>(K + 1, 0.0));
    s2[0][0] = 1.0;
    for (int i = 1; i <= K; ++i)
        for (int j = 1; j <= i; ++j) s2[i][j] = j * s2[i - 1][j] + s2[i - 1][j - 1];

    auto eval_with_nodes = [&](int nodes, double& max_inner_err) {
        // f^{(j)}(z) j!/j! packaged as j! c_j with c_j the Taylor coefficients.
        std::vector<cdouble> deriv(K + 1, cdouble(0.0, 0.0));
        max_inner_err = 0.0;
        std::vector<cdouble> vals(nodes);
        for (int t = 0; t < nodes; ++t) {
            double th = 2.0 * 3.14159265358979323846 * t / nodes;
            cdouble zp = z + r * std::exp(cdouble(0.0, th));
            ComplexEval e = phi_dispatch(zp, u + cdouble(K, 0.0), y, cfg);
            max_inner_err = std::max(max_inner_err, e.est_error);
            vals[t] = e.value;
        }
        for (int j = 0; j <= K; ++j) {
            cdouble acc(0.0, 0.0);
            for (int t = 0; t < nodes; ++t) {
                double th = 2.0 * 3.14159265358979323846 * t / nodes;
                acc += vals[t] * std::exp(cdouble(0.0, -j * th));
            }
            cdouble cj = acc / static_cast<double>(nodes);  // c_j r^j
            double fact = 1.0;
            for (int q = 2; q <= j; ++q) fact *= q;
            deriv[j] = cj * fact / std::pow(r, j);
        }
        // (y + theta)^K f = sum_i C(K,i) y^{K-i} sum_j {i j} z^j f^{(j)}
        cdouble out(0.0, 0.0);
        double binom = 1.0;
        for (int i = 0; i <= K; ++i) {
            if (i > 0) binom = binom * (K - i + 1) / i;
            cdouble yp(1.0, 0.0);
            for (int q = 0; q < K - i; ++q) yp *= y;
            cdouble inner(0.0, 0.0);
            cdouble zp(1.0, 0.0);
            for (int j = 0; j <= i; ++j) {
                if (j > 0) zp *= z;
                inner += s2[i][j] * zp * deriv[j];
            }
            out += binom * yp * inner;
        }
        return out;
    };

    double err1 = 0, err2 = 0;
    cdouble v1 = eval_with_nodes(32, err1);
    cdouble v2 = eval_with_nodes(64, err2);
    ComplexEval out;
    out.value = v2;
    out.est_error = std::abs(v2 - v1) + 4.0 * err2 + 1e-14 * (1.0 + std::abs(v2));
    out.method = EvalMethod::integral;
    return out;
}

// Integral representation for Re u > 0, Re y > 0, z off the cut:
// Phi = (1/Gamma(u)) int_0^inf x^{u-1} e^{-yx} / (1 - z e^{-x}) dx.
ComplexEval phi_integral(cdouble z, cdouble u, cdouble y, const QuadratureConfig& cfg) {
    auto f = [&](double x) -> cdouble {
        cdouble ex = std::exp(-x);
        return cpow(cdouble(x, 0.0), u - 1.0) * std::exp(-y * x) / (1.0 - z * ex);
    };
    QuadResult q = integrate_zero_inf(f, cfg);
    ComplexEval out;
    cdouble g = complex_gamma(u);
    out.value = q.value / g;
    out.est_error = q.est_error / std::abs(g);
    out.method = EvalMethod::integral;
    return out;
}

}  // namespace

std::complex<double> phi_neg_int(cdouble z, int l, cdouble y) {
    static thread_local std::vector<std::vector<Integer>> cache;
    if (static_cast<int>(cache.size()) < l + 1) cache = theta_numerator_polys(std::max(l, 8));
    cdouble one_minus = 1.0 - z;
    cdouble acc(0.0, 0.0);
    cdouble denom = one_minus;
    // sum_i C(l,i) y^{l-i} A_i(z)/(1-z)^{i+1}
    for (int i = 0; i <= l; ++i) {
        cdouble num(0.0, 0.0);
        const auto& A = cache[i];
        for (int k = static_cast<int>(A.size()) - 1; k >= 0; --k) num = num * z + A[k].get_d();
        double binom = 1.0;
        for (int t = 0; t < i; ++t) binom *= static_cast<double>(l - t) / (t + 1);
        cdouble yp(1.0, 0.0);
        for (int t = 0; t < l - i; ++t) yp *= y;
        acc += binom * yp * num / denom;
        denom *= one_minus;
    }
    return acc;
}

namespace {

ComplexEval phi_dispatch(cdouble z, cdouble u, cdouble y, const QuadratureConfig& cfg) {

    long l = 0;
    if (is_nonpositive_int(u, l)) {
        // rational in z; only the pole at z = 1 is excluded, the cut is moot
        if (z == cdouble(1.0, 0.0)) throw std::domain_error("lerch_phi: pole at z = 1");
        ComplexEval out;
        out.value = phi_neg_int(z, static_cast<int>(-l), y);
        out.est_error = 1e-14 * (1.0 + std::abs(out.value));
        out.method = EvalMethod::closed_form;
        return out;
    }

    if (std::abs(z) <= 0.5) {
        bool y_nonpos_int = y.imag() == 0.0 && y.real() <= 0.0 && std::round(y.real()) == y.real();
        if (y_nonpos_int && u.real() > 0)
            throw std::domain_error("lerch_phi: pole at nonpositive integer y");
        return phi_series(z, u, y, cfg);
    }

    if (z == cdouble(1.0, 0.0)) {
        if (u.real() <= 1.0) throw std::domain_error("lerch_phi: z = 1 requires Re u > 1");
        return hurwitz_zeta(u, y, cfg.abs_tol);
    }

    if (u.real() > 0) {
        if (on_cut(z)) throw std::domain_error("lerch_phi: z on the cut [1, inf)");
        if (y.real() <= 0)
            throw std::domain_error("lerch_phi: integral route requires Re y > 0");
        // Push Re y into (1, 2] with the forward recurrence
        // Phi(z,u,y) = z^k Phi(z,u,y+k) + sum_{n<k} z^n (y+n)^{-u}.
        // Only for |z| <= 1: beyond that the reconstruction cancels
        // catastrophically (head and z^k Phi are large and opposite), while
        // the direct integral is perfectly well conditioned.
        int k = 0;
        if (y.real() <= 1.0 && std::abs(z) <= 1.0) k = static_cast<int>(std::floor(2.0 - y.real()));
        cdouble head(0.0, 0.0);
        cdouble zp(1.0, 0.0);
        for (int n = 0; n < k; ++n) {
            head += zp * cpow(y + cdouble(n, 0.0), -u);
            zp *= z;
        }
        ComplexEval tail = phi_integral(z, u, y + cdouble(k, 0.0), cfg);
        ComplexEval out;
        out.value = head + zp * tail.value;
        out.est_error = std::abs(zp) * tail.est_error + 1e-15 * (1.0 + std::abs(out.value));
        out.method = EvalMethod::integral;
        return out;
    }

    if (u.real() <= 0.0 && !on_cut(z)) return phi_theta_lift(z, u, y, cfg);

    throw std::domain_error("lerch_phi: parameters outside every supported region");
}

}  // namespace

ComplexEval lerch_phi(cdouble z, cdouble u, cdouble y, const QuadratureConfig& cfg) {
    return phi_dispatch(z, u, y, cfg);
}

ComplexEval hurwitz_zeta(cdouble u, cdouble y, double tol) {
    if (u.real() <= 1.0) throw std::domain_error("hurwitz_zeta: requires Re u > 1");
    if (y.real() <= 0.0) throw std::domain_error("hurwitz_zeta: requires Re y > 0");
    // Euler-Maclaurin: sum_{n<M} + (M+y)^{1-u}/(u-1) + (M+y)^{-u}/2 + corrections.
    const int M = 24;
    cdouble acc(0.0, 0.0);
    for (int n = 0; n < M; ++n) acc += cpow(y + cdouble(n, 0.0), -u);
    cdouble a = y + cdouble(M, 0.0);
    acc += cpow(a, 1.0 - u) / (u - 1.0);
    acc += 0.5 * cpow(a, -u);
    // B_{2k}/(2k)! * (u)(u+1)...(u+2k-2) * a^{-u-2k+1}
    static const double b2k_over_fact[] = {1.0 / 12, -1.0 / 720, 1.0 / 30240, -1.0 / 1209600,
                                           1.0 / 47900160};
    cdouble rising = u;
    for (int k = 1; k <= 5; ++k) {
        acc += b2k_over_fact[k - 1] * rising * cpow(a, -u - cdouble(2 * k - 1, 0.0));
        rising *= (u + cdouble(2 * k - 1, 0.0)) * (u + cdouble(2 * k, 0.0));
    }
    ComplexEval out;
    out.value = acc;
    out.est_error = std::max(tol * 0.01, 1e-15 * (1.0 + std::abs(acc)));
    out.method = EvalMethod::series;
    return out;
}

double riemann_zeta_real(double s) {
    if (!(s > 1.0)) throw std::domain_error("riemann_zeta_real: requires s > 1");
    return hurwitz_zeta(cdouble(s, 0.0), cdouble(1.0, 0.0), 1e-13).value.real();
}

std::string to_string(EvalMethod m) {
    switch (m) {
        case EvalMethod::series: return "series";
        case EvalMethod::integral: return "integral";
        case EvalMethod::hankel: return "hankel";
        case EvalMethod::circle: return "circle";
        case EvalMethod::closed_form: return "closed_form";
    }
    return "?";
}

}  // namespace akzeta
