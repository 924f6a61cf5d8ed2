#pragma once

#include "akzeta/rational.hpp"

#include <complex>
#include <string>

namespace akzeta {

// Exact complex number a + b*i with rational a, b.  This is the coefficient
// field for every exact computation in the library.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)), im_(0) {  // NOLINT
        canonicalize_part(re_);
    }
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        canonicalize_part(re_);
        canonicalize_part(im_);
    }

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }

    // |z|^2, exact.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        Rational n = o.norm();
        Rational r = (re_ * o.re_ + im_ * o.im_) / n;
        Rational i = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational inverse() const {
        GaussianRational one(1);
        return one /= *this;
    }

    GaussianRational pow(long e) const {
        if (e == 0) return GaussianRational(1);
        GaussianRational base = e < 0 ? inverse() : *this;
        unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
        GaussianRational acc(1);
        while (n > 0) {
            if (n & 1) acc *= base;
            base *= base;
            n >>= 1;
        }
        return acc;
    }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    // Canonical form "a", "b*i", "a+b*i" / "a-b*i" with rational parts.
    std::string str() const;

    // Accepts e.g. "3", "-1/2", "i", "-i", "2+3i", "-4/125-22/125*i".
    static GaussianRational parse(const std::string& s);

private:
    // mpq_class(n, d) does not canonicalize on its own.
    static void canonicalize_part(Rational& q) {
        if (q.get_den() == 0) throw std::invalid_argument("GaussianRational: zero denominator");
        q.canonicalize();
    }

    Rational re_, im_;
};

inline std::string GaussianRational::str() const {
    auto rat = [](const Rational& q) { return q.get_str(); };
    if (im_ == 0) return rat(re_);
    std::string im_part;
    if (im_ == 1)
        im_part = "i";
    else if (im_ == -1)
        im_part = "-i";
    else
        im_part = rat(im_) + "*i";
    if (re_ == 0) return im_part;
    if (im_part[0] == '-') return rat(re_) + im_part;
    return rat(re_) + "+" + im_part;
}

inline GaussianRational GaussianRational::parse(const std::string& input) {
    std::string s;
    s.reserve(input.size());
    for (char c : input)
        if (c != ' ' && c != '*') s.push_back(c);
    if (s.empty()) throw std::invalid_argument("GaussianRational::parse: empty input");

    Rational re(0), im(0);
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t start = pos;
        if (s[pos] == '+' || s[pos] == '-') ++pos;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') ++pos;
        std::string term = s.substr(start, pos - start);
        if (term.empty() || term == "+" || term == "-")
            throw std::invalid_argument("GaussianRational::parse: bad input '" + input + "'");
        bool imag = term.back() == 'i' || term.back() == 'I';
        if (imag) {
            term.pop_back();
            if (term.empty() || term == "+")
                term = "1";
            else if (term == "-")
                term = "-1";
        }
        Rational v = parse_rational(term);
        if (imag)
            im += v;
        else
            re += v;
    }
    return {re, im};
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.str(); }

}  // namespace akzeta
