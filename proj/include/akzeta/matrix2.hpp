#pragma once

#include "akzeta/gaussian.hpp"

#include <complex>
#include <string>

namespace akzeta {

// 2x2 matrix over GaussianRational representing g in GL2(C); the determinant
// must be nonzero.
struct Matrix2 {
    GaussianRational a, b, c, d;

    Matrix2(GaussianRational a_, GaussianRational b_, GaussianRational c_, GaussianRational d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        if (det().is_zero()) throw std::invalid_argument("Matrix2: singular matrix");
    }

    GaussianRational det() const { return a * d - b * c; }

    Matrix2 inverse() const {
        GaussianRational dt = det();
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    friend Matrix2 operator*(const Matrix2& g, const Matrix2& h) {
        return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
                g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
    }

    friend Matrix2 operator*(const GaussianRational& s, const Matrix2& g) {
        return {s * g.a, s * g.b, s * g.c, s * g.d};
    }

    friend bool operator==(const Matrix2& g, const Matrix2& h) {
        return g.a == h.a && g.b == h.b && g.c == h.c && g.d == h.d;
    }

    std::string str() const { return a.str() + "," + b.str() + ";" + c.str() + "," + d.str(); }

    // Accepts "a,b;c,d" with GaussianRational entries.
    static Matrix2 parse(const std::string& s);

    static Matrix2 identity() { return {1, 0, 0, 1}; }
    // gT = 1 - T
    static Matrix2 g_eta() { return {-1, 1, 0, 1}; }
    // gT = 1 - 1/T
    static Matrix2 g_xi() { return {1, -1, 1, 0}; }
    // gT = alpha - T
    static Matrix2 g_alpha(const GaussianRational& alpha) { return {-1, alpha, 0, 1}; }
    // gT = (-T + 1)/d
    static Matrix2 h_d(const GaussianRational& dd) { return {-1, 1, 0, dd}; }
    // gT = (T - 1)/(cT)
    static Matrix2 h_c_prime(const GaussianRational& cc) { return {1, -1, cc, 0}; }
};

// Numeric (complex float) matrix for the analytic layer.
struct Matrix2c {
    std::complex<double> a, b, c, d;

    Matrix2c(std::complex<double> a_, std::complex<double> b_, std::complex<double> c_,
             std::complex<double> d_)
        : a(a_), b(b_), c(c_), d(d_) {}
    explicit Matrix2c(const Matrix2& g)
        : a(g.a.to_complex()), b(g.b.to_complex()), c(g.c.to_complex()), d(g.d.to_complex()) {}

    std::complex<double> det() const { return a * d - b * c; }
    std::complex<double> act(std::complex<double> z) const { return (a * z + b) / (c * z + d); }
    std::complex<double> j_d(std::complex<double> z) const { return c * z + d; }
    std::complex<double> j_n(std::complex<double> z) const { return a * z + b; }
};

// Point of the Riemann sphere in projective coordinates (p : q); infinity is
// (1 : 0).  Equality is cross-ratio equality.
struct RiemannPoint {
    GaussianRational p, q;

    RiemannPoint(GaussianRational p_, GaussianRational q_) : p(std::move(p_)), q(std::move(q_)) {
        if (p.is_zero() && q.is_zero()) throw std::invalid_argument("RiemannPoint: (0:0)");
    }
    static RiemannPoint infinity() { return {1, 0}; }
    static RiemannPoint finite(const GaussianRational& z) { return {z, 1}; }

    bool is_infinity() const { return q.is_zero(); }
    GaussianRational value() const {
        if (is_infinity()) throw std::domain_error("RiemannPoint: value() of infinity");
        return p / q;
    }

    friend bool operator==(const RiemannPoint& u, const RiemannPoint& v) {
        return u.p * v.q == v.p * u.q;
    }
};

inline Matrix2 Matrix2::parse(const std::string& s) {
    auto semi = s.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("Matrix2::parse: expected 'a,b;c,d'");
    std::string top = s.substr(0, semi), bot = s.substr(semi + 1);
    auto c1 = top.find(','), c2 = bot.find(',');
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("Matrix2::parse: expected 'a,b;c,d'");
    return {GaussianRational::parse(top.substr(0, c1)), GaussianRational::parse(top.substr(c1 + 1)),
            GaussianRational::parse(bot.substr(0, c2)), GaussianRational::parse(bot.substr(c2 + 1))};
}

}  // namespace akzeta
