#pragma once
#include <optional>
#include <string>
#include <vector>

#include "dihedralk/intmatrix.hpp"

namespace dk {

/// H^p(BD_2n; Z) from the closed-form tables.
/// Odd n: Z at 0, Z_2 at p=4s+2, Z_n+Z_2 at p=4s (s>=1), 0 at odd p.
/// Even n: Z at 0, Z_n+(Z_2)^{2s} at p=4s (s>=1), (Z_2)^{2s} at p=4s+1,
/// (Z_2)^{2s+2} at p=4s+2, (Z_2)^{2s+1} at p=4s+3.
AbelianGroup cohomology(long n, long p);

/// AHSS second page E_2^{p,q} = H^p(BD_2n; K^q(pt)): H^p for even q,
/// trivial for odd q.
AbelianGroup e2_page(long n, long p, long q);

struct FiltrationEntry {
    long degree;  // cohomological degree 2j, the entry sits at (2j, -2j)
    AbelianGroup e2;
    std::optional<AbelianGroup> einf;       // absent when the paper leaves it open
    std::vector<std::string> generators;    // claimed generator monomials
    std::string note;
};

/// Claimed E_infinity filtration data. Fully stated for odd n and for
/// n = 4; for even n with k >= 3 only the E_2 groups are emitted and
/// E_infinity is left unverified.
std::vector<FiltrationEntry> filtration_report(long n, long max_degree);

struct FiltrationAuditRow {
    long degree;            // 2j
    BigInt gr_order;        // |gr_j| from the truncated quotient tower
    std::optional<BigInt> expected_order;  // |E_inf| when known
    bool match;             // true when expected is known and equal, or unknown
    std::string expected_desc;
};

struct FiltrationAudit {
    long n;
    std::vector<FiltrationAuditRow> rows;
    bool pass;  // all known comparisons match
};

/// Compare |gr_j| from kring::truncated_quotient against the claimed
/// filtration orders, for j = 1..depth.
FiltrationAudit audit_filtrations(long n, long depth);

}  // namespace dk
