#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "akzeta/classical.hpp"
#include "akzeta/identity.hpp"

using namespace akzeta;

namespace {

GaussianRational gq(long n, long d = 1) { return GaussianRational(Rational(n, d)); }

}  // namespace

TEST_CASE("duality family: n = 0 reduces to the seed identity") {
    for (const Matrix2& g : {Matrix2::g_eta(), Matrix2::g_xi(), Matrix2::g_alpha(gq(3))})
        for (int variant = 1; variant <= 3; ++variant) {
            IdentityCase c = verify_dual_family(g, variant, 0, 2, 3);
            CHECK(c.pass);
            CHECK(c.mode == "exact");
        }
}

TEST_CASE("duality family: assorted instances") {
    CHECK(verify_dual_family(Matrix2::g_eta(), 1, 2, 3, 2).pass);
    CHECK(verify_dual_family(Matrix2::g_xi(), 3, 1, 2, 2).pass);
    CHECK(verify_dual_family(Matrix2::g_alpha(GaussianRational::i()), 2, 1, 2, 1).pass);
}

TEST_CASE("difference relation cases") {
    CHECK(verify_difference(Matrix2::g_eta(), 2, 3).pass);
    CHECK(verify_difference(Matrix2::g_alpha(gq(3)), 2, 3).pass);
    CHECK(verify_difference(Matrix2::g_xi().inverse(), 3, 2).pass);
    // two-vertex admissible matrix, g^{-1} = -g
    Matrix2 two{gq(1), gq(-2), gq(1), gq(-1)};
    CHECK(verify_difference(two, 3, 3).pass);
    for (int variant = 1; variant <= 3; ++variant)
        CHECK(verify_dual_family(two, variant, 1, 2, 2).pass);
}

TEST_CASE("one-variable Stirling-weighted duality") {
    CHECK(verify_dual_kst(0, 4, 2).pass);   // reduces to the B index swap
    CHECK(verify_dual_kst(1, 4, 2).pass);   // reduces to the C index swap
    CHECK(verify_dual_kst(3, 4, 2).pass);
    CHECK(verify_dual_kst(4, 8, 8).pass);
}

TEST_CASE("alpha-family duality values") {
    IdentityCase c = verify_dual_alpha(gq(3), 0, 3, 2);
    CHECK(c.pass);
    CHECK(verify_dual_alpha(gq(-2), 1, 2, 2).pass);
    CHECK(verify_dual_alpha(GaussianRational::i(), 0, 3, 2).pass);
    CHECK_THROWS_AS(verify_dual_alpha(gq(2), 0, 1, 1), std::invalid_argument);
}

TEST_CASE("C-number dualities") {
    CHECK(verify_c_duals(0, 3, 4).pass);
    CHECK(verify_c_duals(1, 2, 3).pass);
    CHECK(verify_c_duals(2, 2, 2).pass);
}

TEST_CASE("bare-C interpretation resolver") {
    DualCl1Report rep = resolve_dual_C_l1(8, 8);
    CHECK(rep.bridge_ok);
    CHECK(rep.best == "C^(1)");
    CHECK(rep.json.find("candidates") != std::string::npos);
}

TEST_CASE("catalog determinism and report formats") {
    CatalogConfig cfg;
    cfg.max_order = 2;
    cfg.numeric = false;  // keep this unit test fast and quadrature-free
    CatalogReport a = run_catalog(cfg);
    CatalogReport b = run_catalog(cfg);
    CHECK(a.all_pass);
    CHECK(a.to_json(false) == b.to_json(false));
    CHECK(a.to_csv() == b.to_csv());
    CHECK_FALSE(a.cases.empty());

    CatalogConfig one = cfg;
    one.only_case = "dual-kst";
    CatalogReport c = run_catalog(one);
    CHECK_FALSE(c.cases.empty());
    for (const auto& ic : c.cases) CHECK(ic.id.rfind("dual-kst", 0) == 0);
}
