#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dihedralk/intmatrix.hpp"
#include "dihedralk/intpoly.hpp"
#include "dihedralk/reptheory.hpp"

namespace dk {

/// Multivariate polynomial with integer coefficients over a fixed number of
/// named generators; exponent vectors map to nonzero coefficients.
class MultiPoly {
public:
    using Exp = std::vector<int>;

    explicit MultiPoly(long nvars) : nvars_(nvars) {}

    static MultiPoly var(long i, long nvars);
    static MultiPoly constant(const BigInt& c, long nvars);
    /// p(arg) for a univariate p, by Horner.
    static MultiPoly from_univariate(const IntPoly& p, const MultiPoly& arg);

    long nvars() const { return nvars_; }
    const std::map<Exp, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const BigInt& s) const;

    void add_term(Exp e, BigInt c);

    std::string str(const std::vector<std::string>& names) const;

    bool operator==(const MultiPoly&) const = default;

private:
    long nvars_;
    std::map<Exp, BigInt> terms_;
};

struct Relation {
    std::string label;  // "relation 1", ..., "g_2k"
    MultiPoly poly;
};

struct RingPresentation {
    long n;
    bool odd;
    long k;
    std::string case_tag;  // odd | even-k2 | even-k-odd | even-k-even
    bool swap_eta;
    std::vector<std::string> generators;  // odd: v, phi; even: v2, v3, phi
    std::vector<Relation> relations;
};

/// Theorem-style presentation of K(BD_2n). Odd n: Z[v,phi] modulo
/// v^2+2v, v*phi+2v, phi*f_n(phi)-f_n(-2)*v. Even n=2k: the five-relation
/// family with its k-parity case split. Rejects n <= 2.
RingPresentation build_presentation(long n, bool swap_eta = false);

/// Substitute v -> eta-1, phi -> rho_1-2 (odd) or v2 -> eta2-1,
/// v3 -> eta3-1, phi -> rho_1-2 (even) and expand in R(D_2n). A zero
/// vector certifies the relation.
RepVec lift_relation_defect(const DihedralRing& ring, const MultiPoly& rel);

/// Same lift evaluated purely in character arithmetic (independent oracle).
ClassFunction lift_relation_defect_characters(const DihedralRing& ring, const MultiPoly& rel);

struct RelationAudit {
    std::string label;
    RepVec defect;
    std::string defect_str;  // rendered in v/phi terms, "0" when exact
    bool ok;
};

struct VerifyReport {
    long n;
    bool swap_eta;
    bool pass;
    std::vector<RelationAudit> items;
    // retry with the other eta labeling, populated when the first run fails
    std::optional<std::vector<RelationAudit>> retried;
    bool retried_pass = false;
};

/// Lift every relation (plus the g_2k audit in the even case) and report
/// exact defects; on failure the run is repeated with the eta labeling
/// swapped and both outcomes are reported.
VerifyReport verify_presentation(long n, bool swap_eta = false);

struct TruncationStep {
    long depth;
    AbelianGroup q;   // quotient truncated above weight depth
    AbelianGroup gr;  // associated graded piece at this weight
};

/// Filtration tower of the presented ring. Generators carry weights
/// matching their AHSS filtration degree (v, v2, v3 weight 1; phi enters
/// through the twisted generator phi-v resp. phi-v2, weight 2); Q_j is
/// the quotient by the relation rows truncated above weight j. Guard:
/// at most 10^4 monomials.
std::vector<TruncationStep> truncated_quotient(const RingPresentation& pres, long depth);

/// Whether a defect (in the presentation's generators) maps to zero in Q_m.
bool defect_in_truncation(const RingPresentation& pres, const MultiPoly& defect, long depth);

/// Element of Z[mu]/((1+mu)^m - 1), canonically reduced to degree < m.
struct CyclicKRingElt {
    long m;
    std::vector<BigInt> c;  // length m, ascending powers of mu

    bool is_zero() const;
    std::string str() const;
    bool operator==(const CyclicKRingElt&) const = default;
};

CyclicKRingElt cyclic_reduce(const IntPoly& p_in_mu, long m);
CyclicKRingElt cyc_mul(const CyclicKRingElt& a, const CyclicKRingElt& b);
/// (1+mu)^e, any integer e ((1+mu) is a unit of order dividing m).
CyclicKRingElt one_plus_mu_pow(long e, long m);

/// Image of a presentation generator under restriction to the rotation
/// subgroup Z_n: v, v3 -> 0; v1, v2 -> (1+mu)^k - 1; phi ->
/// (1+mu) + (1+mu)^{n-1} - 2.
CyclicKRingElt restriction_image(long n, const std::string& elem);

}  // namespace dk
