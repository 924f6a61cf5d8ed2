#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace akzeta {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// q^e for any integer e; e < 0 requires q != 0.
inline Rational pow_int(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    Rational base = q;
    if (e < 0) {
        if (base == 0) throw std::domain_error("pow_int: zero base with negative exponent");
        base = Rational(1) / base;
        e = -e;
    }
    Rational acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    acc.canonicalize();
    return acc;
}

// Accepts "p", "-p", "+p", "p/q", and exact decimal strings like "-1.25"
// (arbitrary precision throughout).
inline Rational parse_rational(const std::string& input) {
    std::string s = input;
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac_len = s.size() - dot - 1;
        bool neg = !digits.empty() && digits[0] == '-';
        if (neg) digits.erase(0, 1);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("parse_rational: bad decimal '" + input + "'");
        Integer num(digits, 10);
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        Rational r(num, den);
        r.canonicalize();
        if (neg) r = -r;
        return r;
    }
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("parse_rational: bad input '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace akzeta
