#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dihedralk/polyzoo.hpp"
#include "dihedralk/reptheory.hpp"

using namespace dk;

namespace {

RepVec random_rep(const DihedralRing& ring, std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-3, 3);
    RepVec v = ring.zero();
    for (auto& x : v) x = c(rng);
    return v;
}

// reference multiplication in the restriction targets
std::vector<BigInt> cyc_conv(const std::vector<BigInt>& a, const std::vector<BigInt>& b, long n) {
    std::vector<BigInt> r(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) r[static_cast<size_t>((i + j) % n)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
    return r;
}

}  // namespace

TEST_CASE("ring construction") {
    CHECK_THROWS_AS(DihedralRing(2), std::invalid_argument);
    DihedralRing odd(7);
    CHECK(odd.dim() == 5);
    CHECK(odd.basis() == std::vector<std::string>{"1", "eta", "rho1", "rho2", "rho3"});
    DihedralRing even(8);
    CHECK(even.dim() == 7);
    CHECK(even.basis()[3] == "eta3");
    CHECK(even.classes() == std::vector<std::string>{"e", "r1", "r2", "r3", "r4", "s", "rs"});
}

TEST_CASE("rho index folding") {
    DihedralRing r5(5);
    CHECK(r5.rho(3) == r5.unit("rho2"));
    CHECK(r5.rho(0) == r5.add(r5.unit("1"), r5.unit("eta")));
    CHECK(r5.rho(7) == r5.rho(2));
    CHECK(r5.rho(-1) == r5.unit("rho1"));
    DihedralRing r4(4);
    CHECK(r4.rho(2) == r4.add(r4.unit("eta1"), r4.unit("eta2")));
    CHECK(r4.rho(0) == r4.add(r4.unit("1"), r4.unit("eta3")));
    CHECK(r4.rho(3) == r4.unit("rho1"));
}

TEST_CASE("basis products") {
    DihedralRing r3(3);
    RepVec rho1 = r3.unit("rho1");
    RepVec expect = r3.add(r3.add(r3.unit("1"), r3.unit("eta")), r3.unit("rho1"));
    CHECK(r3.mul(rho1, rho1) == expect);
    CHECK(r3.mul(r3.unit("eta"), r3.unit("eta")) == r3.unit("1"));
    CHECK(r3.mul(r3.unit("eta"), rho1) == rho1);

    DihedralRing r4(4);
    RepVec sq = r4.mul(r4.unit("rho1"), r4.unit("rho1"));
    RepVec all_ones = r4.add(r4.add(r4.unit("1"), r4.unit("eta1")),
                             r4.add(r4.unit("eta2"), r4.unit("eta3")));
    CHECK(sq == all_ones);
    CHECK(r4.mul(r4.unit("eta1"), r4.unit("eta2")) == r4.unit("eta3"));
    CHECK(r4.mul(r4.unit("eta1"), r4.unit("rho1")) == r4.unit("rho1"));  // rho_{k-1}, k=2
    CHECK(r4.mul(r4.unit("eta3"), r4.unit("rho1")) == r4.unit("rho1"));
}

TEST_CASE("mul is associative and commutative") {
    std::mt19937 rng(3);
    for (long n : {3L, 4L, 5L, 6L, 8L, 9L, 12L}) {
        DihedralRing ring(n);
        for (int t = 0; t < 40; ++t) {
            RepVec a = random_rep(ring, rng), b = random_rep(ring, rng), c = random_rep(ring, rng);
            CHECK(ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c)));
            CHECK(ring.mul(a, b) == ring.mul(b, a));
        }
    }
}

TEST_CASE("dimension homomorphism") {
    std::mt19937 rng(5);
    for (long n : {3L, 4L, 7L, 10L}) {
        DihedralRing ring(n);
        for (int t = 0; t < 30; ++t) {
            RepVec a = random_rep(ring, rng), b = random_rep(ring, rng);
            CHECK(ring.dimension_of(ring.mul(a, b)) == ring.dimension_of(a) * ring.dimension_of(b));
        }
    }
}

TEST_CASE("character values") {
    DihedralRing r5(5);
    ClassFunction cv = r5.character(r5.v_elt("v"));
    for (size_t cl = 0; cl + 1 < cv.values.size(); ++cl)  // all rotation classes
        for (const auto& x : cv.values[cl]) CHECK(x == 0);
    CHECK(cv.values.back()[0] == -2);  // value on s

    DihedralRing r4(4);
    ClassFunction c1 = r4.character(r4.unit("rho1"));
    std::vector<BigInt> at_r = c1.values[1];
    CHECK(at_r == std::vector<BigInt>{0, 1, 0, 1});  // x + x^3

    ClassFunction ones = r4.character(r4.unit("1"));
    for (const auto& v : ones.values) CHECK(v[0] == 1);
}

TEST_CASE("character oracle agrees with structure constants") {
    std::mt19937 rng(9);
    for (long n : {3L, 4L, 5L, 6L, 7L, 8L, 9L, 12L, 16L, 25L}) {
        DihedralRing ring(n);
        for (int t = 0; t < 60; ++t)
            CHECK(ring.verify_mul_by_characters(random_rep(ring, rng), random_rep(ring, rng)));
    }
}

TEST_CASE("odd-case identities v^2 = -2v and phi v = v^2") {
    for (long n = 3; n <= 31; n += 2) {
        DihedralRing ring(n);
        RepVec v = ring.v_elt("v");
        CHECK(ring.mul(v, v) == ring.scale(v, -2));
        CHECK(ring.mul(ring.phi(), v) == ring.mul(v, v));
    }
}

TEST_CASE("restriction maps") {
    DihedralRing r5(5);
    auto zn = r5.restrict_to(r5.v_elt("v"), RestrictTarget::RotationZn);
    for (const auto& x : zn) CHECK(x == 0);
    auto jphi = r5.restrict_to(r5.phi(), RestrictTarget::RotationZn);
    CHECK(jphi == std::vector<BigInt>{-2, 1, 0, 0, 1});  // sigma + sigma^{n-1} - 2
    auto refl = r5.restrict_to(r5.unit("rho1"), RestrictTarget::ReflectionS);
    CHECK(refl == std::vector<BigInt>{1, 1});
    // odd n: both reflection targets coincide
    CHECK(r5.restrict_to(r5.v_elt("v"), RestrictTarget::ReflectionS) ==
          r5.restrict_to(r5.v_elt("v"), RestrictTarget::ReflectionRS));

    DihedralRing r4(4);
    CHECK(r4.restrict_to(r4.v_elt("v3"), RestrictTarget::RotationZn) ==
          std::vector<BigInt>{0, 0, 0, 0});
    CHECK(r4.restrict_to(r4.v_elt("v1"), RestrictTarget::RotationZn) ==
          std::vector<BigInt>{-1, 0, 1, 0});  // sigma^k - 1
}

TEST_CASE("restriction is a ring homomorphism") {
    std::mt19937 rng(13);
    for (long n : {3L, 4L, 6L, 7L, 9L}) {
        DihedralRing ring(n);
        for (int t = 0; t < 50; ++t) {
            RepVec a = random_rep(ring, rng), b = random_rep(ring, rng);
            auto ja = ring.restrict_to(a, RestrictTarget::RotationZn);
            auto jb = ring.restrict_to(b, RestrictTarget::RotationZn);
            CHECK(ring.restrict_to(ring.mul(a, b), RestrictTarget::RotationZn) == cyc_conv(ja, jb, n));
            for (auto target : {RestrictTarget::ReflectionS, RestrictTarget::ReflectionRS}) {
                auto ia = ring.restrict_to(a, target);
                auto ib = ring.restrict_to(b, target);
                CHECK(ring.restrict_to(ring.mul(a, b), target) == cyc_conv(ia, ib, 2));
            }
        }
    }
}

TEST_CASE("eta labeling swap") {
    DihedralRing def(8), swp(8, true);
    // structure constants do not depend on the labeling
    std::mt19937 rng(17);
    for (int t = 0; t < 30; ++t) {
        RepVec a = random_rep(def, rng), b = random_rep(def, rng);
        CHECK(def.mul(a, b) == swp.mul(a, b));
    }
    // the reflection characters swap
    CHECK(swp.character(swp.unit("eta1")) == def.character(def.unit("eta2")));
    CHECK(swp.character(swp.unit("eta2")) == def.character(def.unit("eta1")));
    CHECK(swp.character(swp.unit("eta3")) == def.character(def.unit("eta3")));
    // the swapped oracle is still multiplicative
    for (int t = 0; t < 30; ++t)
        CHECK(swp.verify_mul_by_characters(random_rep(swp, rng), random_rep(swp, rng)));
}

TEST_CASE("eval_poly_at") {
    DihedralRing r3(3);
    RepVec got = r3.eval_poly_at(IntPoly{3, 1}, r3.phi());  // f_3(phi) = phi + 3
    RepVec expect = r3.add(r3.unit("rho1"), r3.unit("1"));
    CHECK(got == expect);
    CHECK(r3.eval_poly_at(IntPoly::w(), r3.phi()) == r3.phi());

    DihedralRing r6(6);  // n = 2k with k odd: psi^k(phi) = v1 + v2
    RepVec psi_k = r6.eval_poly_at(adams_psi(3), r6.phi());
    RepVec v1v2 = r6.add(r6.v_elt("v1"), r6.v_elt("v2"));
    CHECK(psi_k == v1v2);
}

TEST_CASE("describe") {
    DihedralRing r4(4);
    CHECK(r4.describe(r4.zero()) == "0");
    CHECK(r4.describe(r4.scale(r4.v_elt("v3"), -2)) == "-2v3");
    CHECK(r4.describe(r4.phi()) == "phi");
    DihedralRing r7(7);
    CHECK(r7.describe(r7.v_elt("v")) == "v");
    CHECK(r7.describe(r7.add(r7.scale(r7.v_elt("v"), 3), r7.unit("1"))) == "3v + 1");
}
