#pragma once

#include "akzeta/matrix2.hpp"

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace akzeta {

enum class Extremal { one, infinity };

inline RiemannPoint to_point(Extremal e) {
    return e == Extremal::one ? RiemannPoint::finite(GaussianRational(1)) : RiemannPoint::infinity();
}
inline std::string to_string(Extremal e) { return e == Extremal::one ? "1" : "inf"; }

// Vertex pair (T0, X0): X0 in V(g), T0 = g^{-1} X0, both extremal points.
struct VertexPair {
    Extremal t0, x0;
    friend bool operator==(const VertexPair& a, const VertexPair& b) {
        return a.t0 == b.t0 && a.x0 == b.x0;
    }
};

// Moebius action in projective coordinates; infinity needs no special case.
RiemannPoint act(const Matrix2& g, const RiemannPoint& z);

// (j_D, j_N) = (cz + d, az + b).
std::pair<GaussianRational, GaussianRational> automorphy(const Matrix2& g, const GaussianRational& z);
std::pair<std::complex<double>, std::complex<double>> automorphy(const Matrix2c& g,
                                                                 std::complex<double> z);

std::vector<VertexPair> vertex_set(const Matrix2& g);

// True iff the two arcs g([1,inf]) and [1,inf] meet at the vertex with angle
// zero.  Exact: with h = k_{X0} g k_{T0}^{-1}, the vertex is a cusp iff
// h.a * conj(h.d) is real and positive.
bool is_cusp(const Matrix2& g, const VertexPair& v);

struct DefCondWitness {
    std::string description;  // exact description of the offending T
    double approx;            // floating approximation of T
    std::optional<GaussianRational> exact;  // present when T is rational
};

struct DefCondResult {
    bool ok = false;
    std::optional<DefCondWitness> witness;
};

// Decides g([1,+inf]) cap [1,+inf] subset V(g), exactly, for Gaussian
// rational entries.  Every T in [1,inf] with gT in [1,inf] must be part of an
// extremal pair; otherwise the witness names an offending interior T.
DefCondResult check_def_cond(const Matrix2& g);

// Sampled heuristic for complex-float matrices; NOT certified.  Scans the
// interior of [1, inf] for points whose image lands back in the interval.
bool check_def_cond_sampled(const Matrix2c& g, int samples = 4096, double tol = 1e-9);

// Convergence-domain report: vertex structure, cusp flags, the mu/nu sum
// constraints, a fixed default split, and the resulting half-planes
// Re u > nu_1, Re s > mu_1, Re y > nu_inf, Re w > mu_inf - 1.
struct DomainReport {
    struct PairConstraint {
        Extremal t0, x0;
        int sum;  // 1 for a plain vertex, 2 for a cusp
    };

    std::vector<VertexPair> vertices;
    std::vector<bool> cusps;
    std::vector<PairConstraint> constraints;
    std::vector<std::string> zero_symbols;  // constants fixed to 0 (non-vertices)

    // Default split: full weight on the infinity-side symbol of each pair.
    Rational mu1{0}, muinf{0}, nu1{0}, nuinf{0};

    // True iff some admissible split of the sum constraints places
    // (u, s, y, w) strictly inside all four half-planes.
    bool certifies(std::complex<double> u, std::complex<double> s, std::complex<double> y,
                   std::complex<double> w) const;

    std::string to_json(const Matrix2& g) const;
};

DomainReport domain_report(const Matrix2& g);

}  // namespace akzeta
