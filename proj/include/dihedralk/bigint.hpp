#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace dk {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("binomial: need 0 <= k <= n");
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

inline BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// Quotient with exactness check; the callers use this where a formula
// promises integrality and a nonzero remainder means a real bug.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw std::logic_error("exact_div: division is not exact");
    return q;
}

inline bool is_prime(const BigInt& p) {
    if (p < 2) return false;
    for (BigInt d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace dk
