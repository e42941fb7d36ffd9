#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dihedralk/kring.hpp"
#include "dihedralk/polyzoo.hpp"

using namespace dk;

namespace {

MultiPoly mp_var(long i, long nv) { return MultiPoly::var(i, nv); }

}  // namespace

TEST_CASE("build_presentation odd") {
    RingPresentation p = build_presentation(3);
    CHECK(p.case_tag == "odd");
    CHECK(p.generators == std::vector<std::string>{"v", "phi"});
    REQUIRE(p.relations.size() == 3);
    MultiPoly v = mp_var(0, 2), phi = mp_var(1, 2);
    CHECK(p.relations[0].poly == v * v + v.scaled(2));
    CHECK(p.relations[1].poly == v * phi + v.scaled(2));
    // phi f_3(phi) - f_3(-2) v = phi^2 + 3phi - v
    CHECK(p.relations[2].poly == phi * phi + phi.scaled(3) - v);
    CHECK_THROWS_AS(build_presentation(2), std::invalid_argument);
}

TEST_CASE("build_presentation even cases") {
    MultiPoly v2 = mp_var(0, 3), v3 = mp_var(1, 3), phi = mp_var(2, 3);

    RingPresentation p4 = build_presentation(4);
    CHECK(p4.case_tag == "even-k2");
    REQUIRE(p4.relations.size() == 4);  // relation 3 needs k >= 3
    CHECK(p4.relations[3].label == "relation 5");
    CHECK(p4.relations[3].poly ==
          v2 * v3 - phi.scaled(4) - phi * phi + v2.scaled(2) + v3.scaled(2));

    RingPresentation p6 = build_presentation(6);  // k = 3, odd
    CHECK(p6.case_tag == "even-k-odd");
    REQUIRE(p6.relations.size() == 5);
    MultiPoly rel3 = v2 * phi - MultiPoly::from_univariate(adams_psi(2), phi) + phi + v2.scaled(2) + v3;
    CHECK(p6.relations[2].poly == rel3);

    RingPresentation p8 = build_presentation(8);  // k = 4, even
    CHECK(p8.case_tag == "even-k-even");
    MultiPoly rel5 = v2 * v3 - MultiPoly::from_univariate(adams_psi(4), phi) + v2.scaled(2);
    CHECK(p8.relations[4].poly == rel5);
}

TEST_CASE("MultiPoly rendering") {
    MultiPoly v = mp_var(0, 2), phi = mp_var(1, 2);
    CHECK((v * v + v.scaled(2)).str({"v", "phi"}) == "2v + v^2");
    CHECK((phi.scaled(-1)).str({"v", "phi"}) == "-phi");
    CHECK(MultiPoly(2).str({"v", "phi"}) == "0");
}

TEST_CASE("lift_relation_defect") {
    DihedralRing r3(3);
    RingPresentation p3 = build_presentation(3);
    for (const auto& rel : p3.relations)
        CHECK(lift_relation_defect(r3, rel.poly) == r3.zero());

    DihedralRing r4(4);
    RingPresentation p4 = build_presentation(4);
    for (const auto& rel : p4.relations)
        CHECK(lift_relation_defect(r4, rel.poly) == r4.zero());

    // g_6(phi) lifts to -2v3, not zero
    DihedralRing r6(6);
    RepVec g = r6.eval_poly_at(g_poly(3), r6.phi());
    CHECK(g == r6.scale(r6.v_elt("v3"), -2));
    CHECK(r6.describe(g) == "-2v3");
    // the character oracle agrees with the structure constants
    MultiPoly gmp = MultiPoly::from_univariate(g_poly(3), mp_var(2, 3));
    CHECK(lift_relation_defect_characters(r6, gmp) == r6.character(g));
}

TEST_CASE("verify_presentation") {
    CHECK(verify_presentation(9).pass);
    CHECK(verify_presentation(4).pass);
    CHECK(verify_presentation(8).pass);

    VerifyReport bad = verify_presentation(12);  // k = 6 = 2 mod 4
    CHECK(!bad.pass);
    bool saw = false;
    for (const auto& item : bad.items)
        if (item.label == "relation 5") {
            CHECK(!item.ok);
            CHECK(item.defect_str == "-2v3");
            saw = true;
        }
    CHECK(saw);
    // retried under the swapped labeling, same defect
    REQUIRE(bad.retried.has_value());
    CHECK(!bad.retried_pass);
}

TEST_CASE("truncated quotient towers") {
    auto odd3 = truncated_quotient(build_presentation(3), 2);
    CHECK(odd3[0].gr.str() == "Z_2");
    CHECK(odd3[1].gr.order() == 6);

    auto odd5 = truncated_quotient(build_presentation(5), 2);
    CHECK(odd5[0].gr.order() == 2);
    CHECK(odd5[1].gr.order() == 10);

    auto even4 = truncated_quotient(build_presentation(4), 3);
    CHECK(even4[0].q.order() == 4);
    CHECK(even4[1].q.order() == 64);
    CHECK(even4[2].q.order() == 512);
    CHECK(even4[0].gr.invariant_factors == std::vector<BigInt>{2, 2});
    CHECK(even4[1].gr.invariant_factors == std::vector<BigInt>{2, 2, 4});
    CHECK(even4[2].gr.invariant_factors == std::vector<BigInt>{2, 2, 2});
}

TEST_CASE("tower coherence |Q_m| = prod |gr_j|") {
    for (long n : {3L, 5L, 7L, 4L, 6L}) {
        auto tower = truncated_quotient(build_presentation(n), 4);
        BigInt prod = 1;
        for (const auto& step : tower) {
            prod *= step.gr.order();
            CHECK(step.q.order() == prod);
        }
    }
}

TEST_CASE("defect_in_truncation") {
    RingPresentation p4 = build_presentation(4);
    MultiPoly m2v3 = MultiPoly::var(1, 3).scaled(-2);
    CHECK(!defect_in_truncation(p4, m2v3, 3));
    CHECK(defect_in_truncation(p4, MultiPoly(3), 3));

    RingPresentation p3 = build_presentation(3);
    MultiPoly v = MultiPoly::var(0, 2);
    CHECK(defect_in_truncation(p3, v * v + v.scaled(2), 4));
}

TEST_CASE("cyclic K-ring arithmetic") {
    CHECK(one_plus_mu_pow(-1, 4).c == std::vector<BigInt>{1, 3, 3, 1});
    CHECK(cyclic_reduce(IntPoly{0, 0, 0, 0, 1}, 4).c == std::vector<BigInt>{0, -4, -6, -4});
    // mu^2 (1+mu)^{-1}
    auto mu2 = cyclic_reduce(IntPoly{0, 0, 1}, 4);
    auto img = cyc_mul(mu2, one_plus_mu_pow(-1, 4));
    CHECK(img.c == std::vector<BigInt>{0, 4, 3, 1});
    // unit law
    for (long m = 2; m <= 32; ++m) {
        auto prod = cyc_mul(one_plus_mu_pow(1, m), one_plus_mu_pow(m - 1, m));
        CHECK(prod.c[0] == 1);
        for (long i = 1; i < m; ++i) CHECK(prod.c[static_cast<size_t>(i)] == 0);
    }
}

TEST_CASE("restriction images") {
    CHECK(restriction_image(5, "v").is_zero());
    CHECK(restriction_image(7, "v").is_zero());
    CHECK(restriction_image(4, "v3").is_zero());
    CHECK(restriction_image(4, "phi").c == std::vector<BigInt>{0, 4, 3, 1});
    CHECK(restriction_image(4, "v2").c == std::vector<BigInt>{0, 2, 1, 0});
    CHECK_THROWS_AS(restriction_image(5, "v2"), std::invalid_argument);
    CHECK_THROWS_AS(restriction_image(4, "v"), std::invalid_argument);

    // odd n: since v restricts to zero, phi f_n(phi) must restrict to zero too
    for (long n : {3L, 5L, 9L, 15L}) {
        auto img = restriction_image(n, "phi");
        IntPoly wf = IntPoly::w() * f_min(n);
        CyclicKRingElt acc{n, std::vector<BigInt>(static_cast<size_t>(n))};
        for (long j = wf.degree(); j >= 0; --j) {
            acc = cyc_mul(acc, img);
            acc.c[0] += wf.coeff(j);
        }
        CHECK(acc.is_zero());
    }
}
