#pragma once

#include "akzeta/gaussian.hpp"

#include <complex>
#include <map>
#include <string>
#include <utility>

namespace akzeta {

enum class YW { y, w };

// Exact polynomial in the two formal variables y and w over GaussianRational.
// Canonical: zero coefficients are never stored, so equality is map equality.
class PolyYW {
public:
    // (deg_y, deg_w) -> coefficient.  Ordered map keeps iteration deterministic.
    using Mono = std::pair<int, int>;
    using Map = std::map<Mono, GaussianRational>;

    PolyYW() = default;
    PolyYW(long v) : PolyYW(GaussianRational(v)) {}  // NOLINT(google-explicit-constructor)
    PolyYW(GaussianRational c) {                     // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) terms_[{0, 0}] = std::move(c);
    }

    static PolyYW var(YW v) {
        PolyYW p;
        p.terms_[{v == YW::y ? 1 : 0, v == YW::y ? 0 : 1}] = GaussianRational(1);
        return p;
    }
    static PolyYW y() { return var(YW::y); }
    static PolyYW w() { return var(YW::w); }
    static PolyYW monomial(int dy, int dw, GaussianRational c) {
        PolyYW p;
        if (!c.is_zero()) p.terms_[{dy, dw}] = std::move(c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0});
    }
    GaussianRational constant_term() const {
        auto it = terms_.find({0, 0});
        return it == terms_.end() ? GaussianRational(0) : it->second;
    }
    const Map& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    int degree(YW v) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, v == YW::y ? m.first : m.second);
        return d;
    }

    PolyYW operator-() const {
        PolyYW r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    PolyYW& operator+=(const PolyYW& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    PolyYW& operator-=(const PolyYW& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend PolyYW operator+(PolyYW a, const PolyYW& b) { return a += b; }
    friend PolyYW operator-(PolyYW a, const PolyYW& b) { return a -= b; }

    friend PolyYW operator*(const PolyYW& a, const PolyYW& b) {
        PolyYW r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term({ma.first + mb.first, ma.second + mb.second}, ca * cb);
        return r;
    }
    PolyYW& operator*=(const PolyYW& o) { return *this = *this * o; }

    PolyYW& operator*=(const GaussianRational& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }
    friend PolyYW operator*(PolyYW a, const GaussianRational& c) { return a *= c; }
    friend PolyYW operator*(const GaussianRational& c, PolyYW a) { return a *= c; }

    PolyYW& operator/=(const GaussianRational& c) {
        if (c.is_zero()) throw std::domain_error("PolyYW: division by zero scalar");
        for (auto& [m, v] : terms_) v /= c;
        return *this;
    }

    friend bool operator==(const PolyYW& a, const PolyYW& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PolyYW& a, const PolyYW& b) { return !(a == b); }

    PolyYW pow(unsigned e) const {
        PolyYW acc(1), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            if (e >>= 1) base *= base;
        }
        return acc;
    }

    // Simultaneous substitution y -> img_y, w -> img_w (images are arbitrary
    // polynomials; shifts, swaps and reflections are all instances of this).
    PolyYW substitute(const PolyYW& img_y, const PolyYW& img_w) const;

    // var -> var + delta.
    PolyYW shift(YW v, const GaussianRational& delta) const {
        PolyYW iy = PolyYW::y(), iw = PolyYW::w();
        if (v == YW::y)
            iy += PolyYW(delta);
        else
            iw += PolyYW(delta);
        return substitute(iy, iw);
    }

    GaussianRational eval(const GaussianRational& yv, const GaussianRational& wv) const {
        GaussianRational acc(0);
        for (const auto& [m, c] : terms_) acc += c * yv.pow(m.first) * wv.pow(m.second);
        return acc;
    }

    std::complex<double> eval(const std::complex<double>& yv, const std::complex<double>& wv) const {
        std::complex<double> acc(0.0, 0.0);
        for (const auto& [m, c] : terms_) {
            std::complex<double> t = c.to_complex();
            for (int k = 0; k < m.first; ++k) t *= yv;
            for (int k = 0; k < m.second; ++k) t *= wv;
            acc += t;
        }
        return acc;
    }

    // Canonical display form, e.g. "w^2-2*y*w+1", "-4/125-22/125*i".
    std::string str() const;

private:
    void add_term(const Mono& m, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Map terms_;
};

inline std::ostream& operator<<(std::ostream& os, const PolyYW& p) { return os << p.str(); }

}  // namespace akzeta
