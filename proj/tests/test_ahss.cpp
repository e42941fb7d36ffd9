#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dihedralk/ahss.hpp"
#include "dihedralk/kring.hpp"

using namespace dk;

TEST_CASE("cohomology tables") {
    CHECK(cohomology(3, 0).str() == "Z");
    CHECK(cohomology(3, 2).str() == "Z_2");
    CHECK(cohomology(3, 4).order() == 6);
    CHECK(cohomology(3, 5).is_trivial());
    CHECK(cohomology(7, 8).order() == 14);

    CHECK(cohomology(4, 3).str() == "Z_2");  // s = 0: (Z_2)^{2s+1}
    CHECK(cohomology(4, 4).invariant_factors == std::vector<BigInt>{2, 2, 4});
    CHECK(cohomology(4, 6).invariant_factors == std::vector<BigInt>{2, 2, 2, 2});
    CHECK(cohomology(4, 1).is_trivial());  // s = 0: (Z_2)^0
    CHECK(cohomology(6, 4).order() == 24);  // Z_6 + (Z_2)^2
    CHECK_THROWS_AS(cohomology(2, 0), std::invalid_argument);
}

TEST_CASE("odd p vanishes in the odd case, e2 page") {
    for (long p = 1; p <= 21; p += 2) CHECK(e2_page(5, p, -p + 1).is_trivial());
    for (long p = 0; p <= 10; ++p) CHECK(e2_page(5, p, -1).is_trivial());  // odd q row
    CHECK(e2_page(3, 4, -4).order() == 6);
    CHECK(e2_page(4, 6, -6).order() == 16);
}

TEST_CASE("even-case Z_2 rank progressions") {
    for (long p = 1; p <= 40; ++p) {
        auto g = cohomology(8, p);
        long s = p / 4;
        size_t expect;
        switch (p % 4) {
            case 0: expect = static_cast<size_t>(2 * s + 1); break;  // Z_n + (Z_2)^{2s}
            case 1: expect = static_cast<size_t>(2 * s); break;
            case 2: expect = static_cast<size_t>(2 * s + 2); break;
            default: expect = static_cast<size_t>(2 * s + 1); break;
        }
        CHECK(g.invariant_factors.size() == expect);
    }
}

TEST_CASE("filtration report") {
    auto odd = filtration_report(3, 6);
    REQUIRE(odd.size() == 3);
    CHECK(odd[0].einf.has_value());
    CHECK(odd[0].einf->str() == "Z_2");
    CHECK(odd[0].generators == std::vector<std::string>{"v^1"});
    CHECK(odd[1].einf->order() == 6);

    auto even = filtration_report(4, 6);
    CHECK(even[0].einf->order() == 4);
    CHECK(even[0].generators == std::vector<std::string>{"v1", "v2"});
    CHECK(even[1].einf->order() == 16);
    CHECK(even[1].generators ==
          std::vector<std::string>{"phi", "v1*v3^1", "v2*v3^1"});
    CHECK(even[2].e2.order() == 16);
    CHECK(even[2].einf->order() == 8);  // one Z_2 does not survive
    CHECK(even[2].generators ==
          std::vector<std::string>{"v1*v3^2", "v2*v3^2", "v1*v2^1"});

    auto big = filtration_report(6, 4);
    CHECK(!big[0].einf.has_value());  // k >= 3: E_infinity left open
}

TEST_CASE("audit_filtrations") {
    auto a3 = audit_filtrations(3, 3);
    CHECK(a3.pass);
    REQUIRE(a3.rows.size() == 3);
    CHECK(a3.rows[0].gr_order == 2);
    CHECK(a3.rows[1].gr_order == 6);
    CHECK(a3.rows[2].gr_order == 2);

    auto a7 = audit_filtrations(7, 2);
    CHECK(a7.pass);
    CHECK(a7.rows[0].gr_order == 2);
    CHECK(a7.rows[1].gr_order == 14);

    auto a4 = audit_filtrations(4, 3);
    CHECK(a4.pass);
    CHECK(a4.rows[0].gr_order == 4);
    CHECK(a4.rows[1].gr_order == 16);
    CHECK(a4.rows[2].gr_order == 8);

    auto a6 = audit_filtrations(6, 2);  // no stated E_infinity: informational only
    CHECK(a6.pass);
    CHECK(!a6.rows[0].expected_order.has_value());
}
