#pragma once

#include "akzeta/gl2_bernoulli.hpp"
#include "akzeta/moebius.hpp"

#include <string>
#include <vector>

namespace akzeta {

struct IdentityCase {
    std::string id;        // stable slug, e.g. "dual-stirling-asc"
    std::string mode;      // "exact" or "numeric"
    std::string params;    // rendered parameters, stable formatting
    std::string relation;  // human-readable statement of what was checked
    bool pass = false;
    std::string residual;  // "0" for exact passes, decimal string for numeric
};

// Stirling-weighted duality families (ascending / descending / mixed,
// variant = 1, 2, 3): left and right sums must agree as exact polynomials in
// y and w.
IdentityCase verify_dual_family(const Matrix2& g, int variant, int n, int k, int m);

// Difference relation for the grid entry B_m^{(-l)}:
// a B(y+1,w-1) + b B(y+1,w) - c B(y,w-1) - d B(y,w) + y^l w^m == 0.
IdentityCase verify_difference(const Matrix2& g, int l, int m);

// sum_j [n j] B_m^{(-k-j)}(n) = sum_j [n j] B_k^{(-m-j)}(n).
IdentityCase verify_dual_kst(int n, int k, int m);

// Stirling-weighted duality for g_alpha = (-1 alpha; 0 1), alpha != 2.
IdentityCase verify_dual_alpha(const GaussianRational& alpha, int n, int k, int m);

// C-number dualities at (y,w) = (-l,-l-1): the polynomial-value route for all
// l, plus the expanded binomial-sum forms for l = 0 and l = 1.
IdentityCase verify_c_duals(int l, int k, int m);

// The l = 1 duality-sum formula carries a bare C symbol with no superscript;
// evaluate the candidate readings over a grid and report which (if any) holds.
struct DualCl1Report {
    std::string json;  // per-candidate verdicts plus the bridge check
    std::string best;  // winning interpretation, empty if none holds
    bool bridge_ok = false;
};
DualCl1Report resolve_dual_C_l1(int k_max, int m_max);

struct CatalogConfig {
    int max_order = 4;      // grid bound for the per-tuple exact suites
    double tol = 1e-8;      // numeric pass threshold
    bool numeric = true;    // include the quadrature-backed cases
    std::string only_case;  // restrict to one case id (prefix match) when set
};

struct CatalogReport {
    std::vector<IdentityCase> cases;
    bool all_pass = true;

    std::string to_json(bool with_timestamp = true) const;
    std::string to_csv() const;
};

CatalogReport run_catalog(const CatalogConfig& cfg = {});

}  // namespace akzeta
