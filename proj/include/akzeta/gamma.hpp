#pragma once

#include <complex>

namespace akzeta {

// Complex gamma function, Lanczos approximation (g = 7, 9 terms) with the
// reflection formula for Re z < 1/2.  Relative accuracy ~1e-13 away from the
// poles at nonpositive integers.
std::complex<double> complex_gamma(std::complex<double> z);

// Principal-branch power a^b = exp(b log a), arg in (-pi, pi].
std::complex<double> cpow(std::complex<double> a, std::complex<double> b);

}  // namespace akzeta
