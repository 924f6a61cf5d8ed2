#include "akzeta/classical.hpp"
#include "akzeta/identity.hpp"
#include "akzeta/moebius.hpp"
#include "akzeta/zeta_numeric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdlib>
#include <iostream>

namespace {

using akzeta::GaussianRational;
using akzeta::Matrix2;

// "1.5", "-2", "1.5+2i", "-0.5i", "2.5+0i"
std::complex<double> parse_complex(const std::string& input) {
    std::string s;
    for (char c : input)
        if (c != ' ' && c != '*') s.push_back(c);
    if (s.empty()) throw CLI::ValidationError("empty complex number");
    double re = 0, im = 0;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t start = pos;
        if (s[pos] == '+' || s[pos] == '-') ++pos;
        while (pos < s.size()) {
            char c = s[pos];
            if ((c == '+' || c == '-') && (s[pos - 1] != 'e' && s[pos - 1] != 'E')) break;
            ++pos;
        }
        std::string term = s.substr(start, pos - start);
        bool imag = !term.empty() && (term.back() == 'i' || term.back() == 'I');
        if (imag) {
            term.pop_back();
            if (term.empty() || term == "+") term = "1";
            if (term == "-") term = "-1";
        }
        double v = std::stod(term);
        (imag ? im : re) += v;
    }
    return {re, im};
}

std::string complex_str(std::complex<double> z) {
    std::ostringstream os;
    os.precision(16);
    os << z.real();
    if (z.imag() != 0.0) {
        if (z.imag() > 0) os << "+";
        os << z.imag() << "i";
    }
    return os.str();
}

nlohmann::json poly_json(const akzeta::PolyYW& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mono, coef] : p.terms()) {
        terms.push_back({{"y", mono.first},
                         {"w", mono.second},
                         {"re", {{"num", coef.re().get_num().get_str()},
                                 {"den", coef.re().get_den().get_str()}}},
                         {"im", {{"num", coef.im().get_num().get_str()},
                                 {"den", coef.im().get_den().get_str()}}}});
    }
    return terms;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and numeric toolkit for GL2-type zeta values and their polynomial grids"};
    app.require_subcommand(1);

    // ---- classify ----
    auto* classify = app.add_subcommand("classify", "geometric admissibility and domain report");
    std::string cl_matrix;
    classify->add_option("--matrix", cl_matrix, "matrix entries 'a,b;c,d'")->required();
    classify->callback([&]() {
        Matrix2 g = Matrix2::parse(cl_matrix);
        akzeta::DefCondResult dc = akzeta::check_def_cond(g);
        if (!dc.ok) {
            nlohmann::json j;
            j["matrix"] = g.str();
            j["admissible"] = false;
            if (dc.witness) {
                j["witness"] = dc.witness->description;
                j["witness_approx"] = dc.witness->approx;
            }
            std::cout << j.dump(2) << "\n";
            throw CLI::RuntimeError(2);
        }
        std::cout << akzeta::domain_report(g).to_json(g) << "\n";
    });

    // ---- compute ----
    auto* compute = app.add_subcommand("compute", "exact values");
    compute->require_subcommand(1);

    auto* classical = compute->add_subcommand("classical", "poly-Bernoulli numbers");
    std::string kind = "B";
    int cl_k = 1, cl_n = 0;
    bool cl_json = false;
    classical->add_option("--kind", kind, "B or C")->check(CLI::IsMember({"B", "C"}));
    classical->add_option("--k", cl_k, "order index (any integer)")->required();
    classical->add_option("--n", cl_n, "sequence index n >= 0")->required();
    classical->add_flag("--json", cl_json, "machine output");
    classical->callback([&]() {
        if (cl_n < 0) throw CLI::ValidationError("--n must be >= 0");
        akzeta::RationalSeq seq = kind == "B" ? akzeta::poly_bernoulli_B(cl_n, cl_k)
                                              : akzeta::poly_bernoulli_C(cl_n, cl_k);
        const akzeta::Rational& v = seq[cl_n];
        if (cl_json) {
            nlohmann::json j;
            j["kind"] = kind;
            j["k"] = cl_k;
            j["n"] = cl_n;
            j["value"] = {{"num", v.get_num().get_str()}, {"den", v.get_den().get_str()}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << v.get_str() << "\n";
        }
    });

    auto* gl2 = compute->add_subcommand("gl2", "matrix poly-Bernoulli polynomials");
    std::string gl_matrix, gl_y, gl_w;
    int gl_u = 0, gl_m = 0;
    bool gl_json = false;
    gl2->add_option("--matrix", gl_matrix, "matrix entries 'a,b;c,d'")->required();
    gl2->add_option("--u", gl_u, "integer order")->required();
    gl2->add_option("--m", gl_m, "index m >= 0")->required();
    gl2->add_option("--y", gl_y, "optional exact y value, e.g. '1' or '1/2' or 'i'");
    gl2->add_option("--w", gl_w, "optional exact w value");
    gl2->add_flag("--json", gl_json, "machine output");
    gl2->callback([&]() {
        if (gl_m < 0) throw CLI::ValidationError("--m must be >= 0");
        Matrix2 g = Matrix2::parse(gl_matrix);
        akzeta::PolyYW p;
        if (gl_u <= 0) {
            p = akzeta::bigen_series(g, gl_m, -gl_u).at(gl_m, -gl_u);
        } else {
            if (gl_y.empty())
                throw CLI::ValidationError("--u >= 1 needs a concrete --y (and g1 = 0)");
            p = akzeta::unigen_series(g, gl_u, gl_m, GaussianRational::parse(gl_y))[gl_m];
        }
        akzeta::PolyYW img_y = gl_y.empty() ? akzeta::PolyYW::y()
                                            : akzeta::PolyYW(GaussianRational::parse(gl_y));
        akzeta::PolyYW img_w = gl_w.empty() ? akzeta::PolyYW::w()
                                            : akzeta::PolyYW(GaussianRational::parse(gl_w));
        p = p.substitute(img_y, img_w);
        if (gl_json) {
            nlohmann::json j;
            j["matrix"] = g.str();
            j["u"] = gl_u;
            j["m"] = gl_m;
            j["value"] = p.str();
            j["terms"] = poly_json(p);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << p.str() << "\n";
        }
    });

    // ---- zeta ----
    auto* zeta = app.add_subcommand("zeta", "numeric zeta values");
    std::string z_matrix, z_u, z_s, z_y, z_w, z_method = "auto";
    bool z_json = false;
    zeta->add_option("--matrix", z_matrix, "matrix entries 'a,b;c,d' (exact)")->required();
    zeta->add_option("--u", z_u, "complex, e.g. '1.5+0.5i'")->required();
    zeta->add_option("--s", z_s, "complex")->required();
    zeta->add_option("--y", z_y, "complex")->required();
    zeta->add_option("--w", z_w, "complex")->required();
    zeta->add_option("--method", z_method, "auto|integral|hankel|circle")
        ->check(CLI::IsMember({"auto", "integral", "hankel", "circle"}));
    zeta->add_flag("--json", z_json, "machine output");
    zeta->callback([&]() {
        Matrix2 g = Matrix2::parse(z_matrix);
        std::complex<double> u = parse_complex(z_u), s = parse_complex(z_s), y = parse_complex(z_y),
                             w = parse_complex(z_w);
        akzeta::QuadratureConfig cfg;
        akzeta::ComplexEval v;
        std::string method = z_method;
        if (method == "auto") {
            bool s_int = s.imag() == 0.0 && std::abs(s.real() - std::round(s.real())) < 1e-12;
            if (s_int && s.real() <= 0.0)
                method = "circle";
            else if (!s_int && s.real() <= 0.25)
                method = "hankel";
            else
                method = "integral";
        }
        if (method == "integral") {
            v = akzeta::xi_d_certified(u, s, y, w, g, cfg);
        } else if (method == "hankel") {
            v = akzeta::xi_d_hankel(u, s, y, w, g, cfg);
        } else {
            if (!(s.imag() == 0.0 && std::abs(s.real() - std::round(s.real())) < 1e-12 && s.real() <= 0))
                throw CLI::ValidationError("--method circle needs s a nonpositive integer");
            v = akzeta::xi_d_at_neg_int(u, static_cast<int>(-std::llround(s.real())), y, w, g, cfg);
        }
        if (z_json) {
            nlohmann::json j;
            j["matrix"] = g.str();
            j["value"] = {{"re", v.value.real()}, {"im", v.value.imag()}};
            j["est_error"] = v.est_error;
            j["method"] = akzeta::to_string(v.method);
            std::cout << j.dump(2) << "\n";
        } else {
            std::ostringstream os;
            os.precision(3);
            os << std::scientific << v.est_error;
            std::cout << complex_str(v.value) << " +/- " << os.str() << "\n";
        }
    });

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run the identity catalog");
    std::string v_case, v_matrix, v_format = "json";
    int v_order = 4;
    bool v_no_numeric = false;
    verify->add_option("--case", v_case, "restrict to case ids with this prefix");
    verify->add_option("--matrix", v_matrix, "restrict matrix-bound cases to this matrix");
    verify->add_option("--max-order", v_order, "grid bound for the exact suites");
    verify->add_option("--format", v_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_flag("--no-numeric", v_no_numeric, "skip the quadrature-backed cases");
    verify->callback([&]() {
        akzeta::CatalogConfig cfg;
        cfg.max_order = v_order;
        cfg.only_case = v_case;
        cfg.numeric = !v_no_numeric;
        if (const char* tol = std::getenv("AKZETA_TOL")) cfg.tol = std::stod(tol);
        akzeta::CatalogReport rep = akzeta::run_catalog(cfg);
        if (!v_matrix.empty()) {
            Matrix2 g = Matrix2::parse(v_matrix);
            std::string tag = "g=" + g.str();
            akzeta::CatalogReport filtered;
            for (auto& c : rep.cases) {
                if (c.params.find("g=") != std::string::npos && c.params.find(tag) == std::string::npos)
                    continue;
                filtered.all_pass = filtered.all_pass && c.pass;
                filtered.cases.push_back(std::move(c));
            }
            rep = std::move(filtered);
        }
        std::cout << (v_format == "csv" ? rep.to_csv() : rep.to_json()) << "\n";
        if (!rep.all_pass) throw CLI::RuntimeError(1);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
