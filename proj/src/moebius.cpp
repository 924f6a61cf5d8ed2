#include "akzeta/moebius.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>

namespace akzeta {

RiemannPoint act(const Matrix2& g, const RiemannPoint& z) {
    return {g.a * z.p + g.b * z.q, g.c * z.p + g.d * z.q};
}

std::pair<GaussianRational, GaussianRational> automorphy(const Matrix2& g, const GaussianRational& z) {
    return {g.c * z + g.d, g.a * z + g.b};
}

std::pair<std::complex<double>, std::complex<double>> automorphy(const Matrix2c& g,
                                                                 std::complex<double> z) {
    return {g.j_d(z), g.j_n(z)};
}

std::vector<VertexPair> vertex_set(const Matrix2& g) {
    std::vector<VertexPair> pairs;
    const Matrix2 gi = g.inverse();
    for (Extremal x0 : {Extremal::one, Extremal::infinity}) {
        RiemannPoint t = act(gi, to_point(x0));
        for (Extremal t0 : {Extremal::one, Extremal::infinity}) {
            if (t == to_point(t0)) pairs.push_back({t0, x0});
        }
    }
    return pairs;
}

namespace {

// k_Z maps a neighborhood of Z in [1,+inf] to a neighborhood of 0 in R>=0.
Matrix2 k_of(Extremal z) {
    return z == Extremal::one ? Matrix2{1, -1, 1, 0} : Matrix2{0, -1, -1, 0};
}
Matrix2 k_inv_of(Extremal z) {
    return z == Extremal::one ? Matrix2{0, 1, -1, 1} : Matrix2{0, -1, -1, 0};
}

}  // namespace

bool is_cusp(const Matrix2& g, const VertexPair& v) {
    auto vs = vertex_set(g);
    bool found = false;
    for (const auto& p : vs)
        if (p == v) found = true;
    if (!found) throw std::domain_error("is_cusp: vertex not in V(g)");

    Matrix2 h = k_of(v.x0) * g * k_inv_of(v.t0);
    if (!h.b.is_zero()) throw std::logic_error("is_cusp: conjugated matrix must fix the origin");
    GaussianRational ad = h.a * h.d.conj();
    return ad.is_real() && ad.re() > 0;
}

namespace {

int sgn(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

// ---- extended real line with signed infinities (real-arc branch) ----

struct ExtReal {
    int kind;  // -1: -inf, 0: finite, +1: +inf
    Rational v;

    static ExtReal finite(Rational q) { return {0, std::move(q)}; }
    static ExtReal pos_inf() { return {+1, Rational(0)}; }
    static ExtReal neg_inf() { return {-1, Rational(0)}; }
};

bool ext_less(const ExtReal& a, const ExtReal& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.kind != 0) return false;
    return a.v < b.v;
}

DefCondWitness rational_witness(const Rational& t) {
    DefCondWitness w;
    w.description = "T=" + t.get_str();
    w.approx = t.get_d();
    w.exact = GaussianRational(t);
    return w;
}

// ---- interior analysis when g maps the real line to itself ----

std::optional<DefCondWitness> real_arc_interior(const Rational& a, const Rational& b,
                                                const Rational& c, const Rational& d) {
    // Pole strictly inside (1, inf): g(pole) = infinity with an interior T.
    if (c != 0) {
        Rational p = -d / c;
        if (p > 1) return rational_witness(p);
    }

    // No interior pole: gT is monotone on (1, inf); its image is the open
    // interval between the two boundary limits.
    ExtReal e1 = ExtReal::finite(0), e2 = ExtReal::finite(0);
    if (c + d != 0) {
        e1 = ExtReal::finite((a + b) / (c + d));
    } else {
        // Pole at T = 1; approach from the right.
        int s = sgn((a + b) / c);
        e1 = s > 0 ? ExtReal::pos_inf() : ExtReal::neg_inf();
    }
    if (c != 0) {
        e2 = ExtReal::finite(a / c);
    } else {
        int s = sgn(a / d);
        e2 = s > 0 ? ExtReal::pos_inf() : ExtReal::neg_inf();
    }

    ExtReal lo = ext_less(e1, e2) ? e1 : e2;
    ExtReal hi = ext_less(e1, e2) ? e2 : e1;
    bool overlap = hi.kind == +1 || (hi.kind == 0 && hi.v > 1);
    if (!overlap) return std::nullopt;

    Rational left = (lo.kind == 0 && lo.v > 1) ? lo.v : Rational(1);
    Rational xw = hi.kind == +1 ? Rational(left + 1) : Rational((left + hi.v) / 2);
    // Preimage of the offending image point.
    Rational tw = (d * xw - b) / (-c * xw + a);
    return rational_witness(tw);
}

// ---- interior analysis in the genuinely complex case ----
//
// For real T, gT is real (or infinite) iff Q(T) = Im(j_N(T) conj(j_D(T))) = 0,
// a quadratic with rational coefficients.  Roots in (1, inf) are the only
// interior candidates; at each we must reject gT in [1, inf].

struct Quadratic {
    Rational a2, a1, a0;  // a2 T^2 + a1 T + a0
    Rational eval(const Rational& t) const { return a2 * t * t + a1 * t + a0; }
};

// Sign of (s1 * root + s0) where root is the given irrational root of q
// (q.a2 > 0, positive non-square discriminant).  which = 0 selects the
// smaller root, 1 the larger.
int sign_linear_at_root(const Quadratic& q, int which, const Rational& s1, const Rational& s0) {
    if (s1 == 0) return sgn(s0);
    Rational r = -s0 / s1;
    // Compare root vs r.  Q(r) != 0 because the root is irrational.
    Rational qr = q.eval(r);
    int cmp;  // sign of (root - r)
    if (qr < 0) {
        cmp = which == 0 ? -1 : +1;  // r lies strictly between the roots
    } else {
        Rational vertex = -q.a1 / (2 * q.a2);
        cmp = r < vertex ? +1 : -1;  // r outside: both roots on one side
    }
    return sgn(s1) * cmp;
}

bool rational_square_root(const Rational& q, Rational& out) {
    if (q < 0) return false;
    const Integer num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
        return false;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    out = Rational(rn) / Rational(rd);
    return true;
}

// Check one rational interior candidate root.
std::optional<DefCondWitness> check_rational_root(const Matrix2& g, const Rational& t) {
    if (!(t > 1)) return std::nullopt;
    GaussianRational T(t);
    auto [jd, jn] = automorphy(g, T);
    if (jd.is_zero()) return rational_witness(t);  // gT = infinity at interior T
    GaussianRational x = jn / jd;
    if (x.is_real() && x.re() >= 1) return rational_witness(t);
    return std::nullopt;
}

// Check one irrational root (index `which` of q, q.a2 > 0) exactly.
std::optional<DefCondWitness> check_irrational_root(const Matrix2& g, const Quadratic& q, int which,
                                                    double approx) {
    // Membership in (1, inf).
    if (sign_linear_at_root(q, which, Rational(1), Rational(-1)) <= 0) return std::nullopt;

    auto reduce = [&](const Rational& p2, const Rational& p1,
                      const Rational& p0) -> std::pair<Rational, Rational> {
        // T^2 = -(a1 T + a0)/a2 modulo q.
        return {p1 - p2 * q.a1 / q.a2, p0 - p2 * q.a0 / q.a2};
    };

    const GaussianRational &a = g.a, &b = g.b, &c = g.c, &d = g.d;
    // Re(j_N conj(j_D)) and |j_D|^2 as quadratics in T, reduced mod q.
    auto [p1, p0] = reduce((a * c.conj()).re(), (a * d.conj() + b * c.conj()).re(), (b * d.conj()).re());
    auto [r1, r0] = reduce(c.norm(), Rational(2) * (c * d.conj()).re(), d.norm());

    DefCondWitness w;
    std::ostringstream os;
    os << "T=root of " << q.a2.get_str() << "*T^2" << (q.a1 >= 0 ? "+" : "") << q.a1.get_str()
       << "*T" << (q.a0 >= 0 ? "+" : "") << q.a0.get_str() << " in (1,inf)";
    w.description = os.str();
    w.approx = approx;

    if (r1 == 0 && r0 == 0) return w;  // j_D vanishes at the root: gT = infinity
    int denom_sign = sign_linear_at_root(q, which, r1, r0);
    if (denom_sign <= 0) throw std::logic_error("check_def_cond: |j_D|^2 <= 0 off the pole");
    // gT >= 1  <=>  Re(j_N conj(j_D)) - |j_D|^2 >= 0.
    if (sign_linear_at_root(q, which, p1 - r1, p0 - r0) >= 0) return w;
    return std::nullopt;
}

std::optional<DefCondWitness> complex_interior(const Matrix2& g, const Quadratic& q) {
    if (q.a2 != 0) {
        Quadratic qq = q;
        if (qq.a2 < 0) {
            qq.a2 = -qq.a2;
            qq.a1 = -qq.a1;
            qq.a0 = -qq.a0;
        }
        Rational disc = qq.a1 * qq.a1 - 4 * qq.a2 * qq.a0;
        if (disc < 0) return std::nullopt;
        Rational sq;
        if (rational_square_root(disc, sq)) {
            Rational r0((-qq.a1 - sq) / (2 * qq.a2));
            Rational r1((-qq.a1 + sq) / (2 * qq.a2));
            for (const Rational& root : {r0, r1}) {
                if (auto v = check_rational_root(g, root)) return v;
            }
            return std::nullopt;
        }
        double sd = std::sqrt(disc.get_d());
        double base = -qq.a1.get_d() / (2 * qq.a2.get_d());
        double spread = sd / (2 * qq.a2.get_d());
        for (int which : {0, 1}) {
            double approx = which == 0 ? base - spread : base + spread;
            if (auto v = check_irrational_root(g, qq, which, approx)) return v;
        }
        return std::nullopt;
    }
    if (q.a1 != 0) return check_rational_root(g, -q.a0 / q.a1);
    return std::nullopt;  // Q is a nonzero constant: no real points at all
}

// Endpoint T in {1, inf}: the image must stay outside (1, inf).
std::optional<DefCondWitness> check_endpoint(const Matrix2& g, Extremal t0) {
    RiemannPoint x = act(g, to_point(t0));
    if (x.is_infinity()) return std::nullopt;  // extremal pair (T0, inf)
    GaussianRational xv = x.value();
    if (xv.is_real() && xv.re() > 1) {
        DefCondWitness w;
        w.description = "T=" + to_string(t0);
        w.approx = t0 == Extremal::one ? 1.0 : std::numeric_limits<double>::infinity();
        if (t0 == Extremal::one) w.exact = GaussianRational(1);
        return w;
    }
    return std::nullopt;
}

}  // namespace

DefCondResult check_def_cond(const Matrix2& g) {
    const GaussianRational &a = g.a, &b = g.b, &c = g.c, &d = g.d;
    Quadratic q{(a * c.conj()).im(), (a * d.conj() + b * c.conj()).im(), (b * d.conj()).im()};

    std::optional<DefCondWitness> w;
    if (q.a2 == 0 && q.a1 == 0 && q.a0 == 0) {
        // g maps the extended real line to itself, hence equals a complex
        // scalar times a real matrix; normalize by the first nonzero entry.
        GaussianRational e = !a.is_zero() ? a : (!b.is_zero() ? b : (!c.is_zero() ? c : d));
        GaussianRational na = a / e, nb = b / e, nc = c / e, nd = d / e;
        if (!(na.is_real() && nb.is_real() && nc.is_real() && nd.is_real()))
            throw std::logic_error("check_def_cond: vanishing quadratic but non-real normalization");
        w = real_arc_interior(na.re(), nb.re(), nc.re(), nd.re());
    } else {
        w = complex_interior(g, q);
    }
    if (!w) {
        for (Extremal t0 : {Extremal::one, Extremal::infinity}) {
            if ((w = check_endpoint(g, t0))) break;
        }
    }

    DefCondResult res;
    res.ok = !w.has_value();
    res.witness = std::move(w);
    return res;
}

bool check_def_cond_sampled(const Matrix2c& g, int samples, double tol) {
    // T = 1 + tan(theta) sweeps (1, inf); endpoints are extremal and allowed.
    for (int i = 1; i < samples; ++i) {
        double theta = 1.57079632679489662 * i / samples;
        double t = 1.0 + std::tan(theta);
        if (!std::isfinite(t)) continue;
        std::complex<double> jd = g.j_d(t);
        if (std::abs(jd) < tol) return false;  // pole: image hits infinity
        std::complex<double> x = g.j_n(t) / jd;
        if (std::abs(x.imag()) < tol && x.real() >= 1.0 - tol) return false;
    }
    return true;
}

namespace {

std::string mu_name(Extremal t0) { return t0 == Extremal::one ? "mu_1" : "mu_inf"; }
std::string nu_name(Extremal x0) { return x0 == Extremal::one ? "nu_1" : "nu_inf"; }

}  // namespace

DomainReport domain_report(const Matrix2& g) {
    DefCondResult dc = check_def_cond(g);
    if (!dc.ok)
        throw std::domain_error("domain_report: matrix violates the admissibility condition (" +
                                (dc.witness ? dc.witness->description : std::string("?")) + ")");

    DomainReport rep;
    rep.vertices = vertex_set(g);
    bool mu1_free = true, muinf_free = true, nu1_free = true, nuinf_free = true;
    for (const auto& v : rep.vertices) {
        bool cusp = is_cusp(g, v);
        rep.cusps.push_back(cusp);
        int sum = cusp ? 2 : 1;
        rep.constraints.push_back({v.t0, v.x0, sum});
        (v.t0 == Extremal::one ? mu1_free : muinf_free) = false;
        (v.x0 == Extremal::one ? nu1_free : nuinf_free) = false;

        // Default split: whole weight on the infinity-side symbol; for the
        // (inf, inf) pair it goes to mu_inf.
        if (v.t0 == Extremal::infinity) {
            rep.muinf = sum;
        } else if (v.x0 == Extremal::infinity) {
            rep.nuinf = sum;
        } else {
            rep.mu1 = sum;
        }
    }
    if (mu1_free) rep.zero_symbols.push_back("mu_1");
    if (muinf_free) rep.zero_symbols.push_back("mu_inf");
    if (nu1_free) rep.zero_symbols.push_back("nu_1");
    if (nuinf_free) rep.zero_symbols.push_back("nu_inf");
    return rep;
}

bool DomainReport::certifies(std::complex<double> u, std::complex<double> s, std::complex<double> y,
                             std::complex<double> w) const {
    // Symbols not bound to a vertex are 0; their half-planes are fixed.
    bool mu1_bound = false, muinf_bound = false, nu1_bound = false, nuinf_bound = false;
    for (const auto& pc : constraints) {
        (pc.t0 == Extremal::one ? mu1_bound : muinf_bound) = true;
        (pc.x0 == Extremal::one ? nu1_bound : nuinf_bound) = true;
    }
    if (!mu1_bound && !(s.real() > 0)) return false;
    if (!muinf_bound && !(w.real() > -1)) return false;
    if (!nu1_bound && !(u.real() > 0)) return false;
    if (!nuinf_bound && !(y.real() > 0)) return false;

    for (const auto& pc : constraints) {
        double mu_max = pc.t0 == Extremal::one ? s.real() : w.real() + 1;
        double nu_max = pc.x0 == Extremal::one ? u.real() : y.real();
        double sum = pc.sum;
        bool feasible = (sum - nu_max < mu_max) && nu_max > 0 && mu_max > 0;
        if (!feasible) return false;
    }
    return true;
}

std::string DomainReport::to_json(const Matrix2& g) const {
    nlohmann::json j;
    j["matrix"] = g.str();
    j["vertices"] = nlohmann::json::array();
    j["cusps"] = nlohmann::json::array();
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        j["vertices"].push_back({{"T0", to_string(vertices[k].t0)},
                                 {"X0", to_string(vertices[k].x0)},
                                 {"cusp", static_cast<bool>(cusps[k])}});
        j["cusps"].push_back(static_cast<bool>(cusps[k]));
    }
    j["constraints"] = nlohmann::json::array();
    for (const auto& pc : constraints) {
        j["constraints"].push_back(
            {{"mu", mu_name(pc.t0)}, {"nu", nu_name(pc.x0)}, {"sum", pc.sum}});
    }
    j["zero"] = zero_symbols;
    j["default_split"] = {{"mu_1", mu1.get_str()},
                          {"mu_inf", muinf.get_str()},
                          {"nu_1", nu1.get_str()},
                          {"nu_inf", nuinf.get_str()}};
    j["half_planes"] = {{"u", "Re u > " + nu1.get_str()},
                        {"s", "Re s > " + mu1.get_str()},
                        {"y", "Re y > " + nuinf.get_str()},
                        {"w", "Re w > " + Rational(muinf - 1).get_str()}};
    return j.dump(2);
}

}  // namespace akzeta
