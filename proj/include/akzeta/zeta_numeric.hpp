#pragma once

#include "akzeta/lerch.hpp"
#include "akzeta/matrix2.hpp"
#include "akzeta/moebius.hpp"

#include <complex>

namespace akzeta {

// Direct Mellin-type integral (valid inside the convergence half-planes):
// xi_D(u,s;y,w;g) = (1/Gamma(s)) int_0^inf t^{s-1} e^{-wt} Phi(g e^t, u, y) / j_D(g, e^t) dt.
ComplexEval xi_d(std::complex<double> u, std::complex<double> s, std::complex<double> y,
                 std::complex<double> w, const Matrix2c& g, const QuadratureConfig& cfg = {});

// Same, but rejects parameters that no admissible mu/nu split certifies.
ComplexEval xi_d_certified(std::complex<double> u, std::complex<double> s, std::complex<double> y,
                           std::complex<double> w, const Matrix2& g,
                           const QuadratureConfig& cfg = {});

// xi_N(u,s;y,w;g) = xi_D(u,s;y+1,w;g).
ComplexEval xi_n(std::complex<double> u, std::complex<double> s, std::complex<double> y,
                 std::complex<double> w, const Matrix2c& g, const QuadratureConfig& cfg = {});

enum class RelationKind { difference, duality0 };

struct RelationResidual {
    double residual = 0.0;
    double combined_error = 0.0;  // sum of constituent error estimates
};

// difference: a xi_N(...,w-1) + b xi_N(...,w) - c xi_D(...,w-1) - d xi_D(...,w)
//             + y^{-u} w^{-s}  == 0
// duality0:   xi_D(u,s;y,w-1;g) + (1/det g) xi_D(s,u;w,y-1;g^{-1}) == 0
RelationResidual xi_relation_check(RelationKind kind, const Matrix2& g, std::complex<double> u,
                                   std::complex<double> s, std::complex<double> y,
                                   std::complex<double> w, const QuadratureConfig& cfg = {});

// Hankel-contour representation (ray in, circle of radius eps, ray out with
// explicit phase continuation); valid for any s off the integers when
// g1 is not in {1, inf}.
ComplexEval xi_d_hankel(std::complex<double> u, std::complex<double> s, std::complex<double> y,
                        std::complex<double> w, const Matrix2& g, const QuadratureConfig& cfg = {});

// s = -m: residue extraction by the spectrally accurate trapezoid rule on the
// circle |t| = eps applied to e^{-wt} Phi(g e^t,u,y)/j_D(g,e^t) t^{-m-1}.
ComplexEval xi_d_at_neg_int(std::complex<double> u, int m, std::complex<double> y,
                            std::complex<double> w, const Matrix2& g,
                            const QuadratureConfig& cfg = {});

}  // namespace akzeta
