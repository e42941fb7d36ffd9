#pragma once
#include "dihedralk/intpoly.hpp"

namespace dk {

/// Adams polynomial psi^i(w): coefficient of w^j is
/// C(i,j)*C(i+j-1,j)/C(2j-1,j), an exact integer. Throws std::logic_error
/// if any division fails to be exact.
IntPoly adams_psi(long i);

/// Chebyshev polynomial T_i(x) via the recurrence T_{i+1} = 2x T_i - T_{i-1}.
IntPoly chebyshev_T(long i);

/// 2*T_i((w+2)/2) - 2 as an integer polynomial in w. Equal to adams_psi(i).
IntPoly shifted_chebyshev(long i);

/// The monic degree-(n-1)/2 polynomial with constant term n and interior
/// coefficient j equal to n*prod_{t=1..j}(n^2-(2t-1)^2) / (2^{2j}(2j+1)!).
/// Requires odd n >= 3.
IntPoly f_min(long n);

/// w*f_n(w) - (psi^{(n+1)/2} - psi^{(n-1)/2}); zero when the identity holds.
IntPoly wf_identity_defect(long n);

/// w*f_n(w)^2 - shifted_chebyshev(n); zero when the identity holds.
IntPoly chebyshev_sqrt_defect(long n);

/// f_n(-2); always +-1, following the 4-periodic pattern 1,1,-1,-1 in
/// k = (n-1)/2. Throws std::logic_error if |value| != 1.
BigInt f_at_minus2(long n);

/// Expected f_n(-2) from the 4-periodic pattern, for cross-checking.
inline long f_at_minus2_pattern(long n) {
    static constexpr long pat[4] = {1, 1, -1, -1};
    return pat[((n - 1) / 2) % 4];
}

/// g_2k = psi^{k+1} - psi^{k-1}, k >= 2.
IntPoly g_poly(long k);

/// Eisenstein criterion at q: q divides every non-leading coefficient and
/// q^2 does not divide the constant term. p must be monic, q prime.
bool eisenstein_check(const IntPoly& p, const BigInt& q);

}  // namespace dk
