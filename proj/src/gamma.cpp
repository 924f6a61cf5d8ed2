#include "akzeta/gamma.hpp"

#include <cmath>

namespace akzeta {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

constexpr int kG = 7;
constexpr double kLanczos[kG + 2] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

}  // namespace

std::complex<double> complex_gamma(std::complex<double> z) {
    if (z.real() < 0.5) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return kPi / (std::sin(kPi * z) * complex_gamma(1.0 - z));
    }
    z -= 1.0;
    std::complex<double> x = kLanczos[0];
    for (int i = 1; i < kG + 2; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    std::complex<double> t = z + (kG + 0.5);
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

std::complex<double> cpow(std::complex<double> a, std::complex<double> b) {
    if (a == std::complex<double>(0.0, 0.0)) return {0.0, 0.0};
    return std::exp(b * std::log(a));
}

}  // namespace akzeta
