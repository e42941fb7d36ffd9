#include "dihedralk/polyzoo.hpp"

#include <stdexcept>

namespace dk {

IntPoly adams_psi(long i) {
    if (i < 1) throw std::invalid_argument("adams_psi: need i >= 1");
    std::vector<BigInt> c(static_cast<size_t>(i + 1));
    for (long j = 1; j <= i; ++j)
        c[static_cast<size_t>(j)] =
            exact_div(binomial(i, j) * binomial(i + j - 1, j), binomial(2 * j - 1, j));
    return IntPoly(std::move(c));
}

IntPoly chebyshev_T(long i) {
    if (i < 0) throw std::invalid_argument("chebyshev_T: need i >= 0");
    IntPoly a{1}, b{0, 1};
    const IntPoly twox{0, 2};
    for (long t = 0; t < i; ++t) {
        IntPoly next = twox * b - a;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

IntPoly shifted_chebyshev(long i) {
    if (i < 1) throw std::invalid_argument("shifted_chebyshev: need i >= 1");
    IntPoly T = chebyshev_T(i);
    // 2^i * T_i((w+2)/2) = sum_j c_j (w+2)^j 2^{i-j}, all integral
    IntPoly acc, pw{1};
    const IntPoly wp2{2, 1};
    BigInt two_to_i = BigInt(1) << i;
    BigInt scale = two_to_i;  // 2^{i-j}
    for (long j = 0; j <= T.degree(); ++j) {
        if (T.coeff(j) != 0) acc = acc + pw.scaled(T.coeff(j) * scale);
        pw = pw * wp2;
        scale >>= 1;
    }
    // result = 2*acc/2^i - 2; every coefficient divides exactly
    std::vector<BigInt> out;
    out.reserve(static_cast<size_t>(acc.degree() + 1));
    for (long j = 0; j <= acc.degree(); ++j)
        out.push_back(exact_div(acc.coeff(j) * 2, two_to_i));
    return IntPoly(std::move(out)) - IntPoly{2};
}

IntPoly f_min(long n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("f_min: need odd n >= 3");
    long d = (n - 1) / 2;
    std::vector<BigInt> c(static_cast<size_t>(d + 1));
    c[0] = n;
    c[static_cast<size_t>(d)] = 1;
    BigInt num = n;
    for (long j = 1; j <= (n - 3) / 2; ++j) {
        num *= BigInt(n) * n - (2 * j - 1) * (2 * j - 1);
        c[static_cast<size_t>(j)] = exact_div(num, (BigInt(1) << (2 * j)) * factorial(2 * j + 1));
    }
    return IntPoly(std::move(c));
}

IntPoly wf_identity_defect(long n) {
    return IntPoly::w() * f_min(n) - (adams_psi((n + 1) / 2) - adams_psi((n - 1) / 2));
}

IntPoly chebyshev_sqrt_defect(long n) {
    IntPoly f = f_min(n);
    return IntPoly::w() * f * f - shifted_chebyshev(n);
}

BigInt f_at_minus2(long n) {
    BigInt v = f_min(n).eval(-2);
    if (v != 1 && v != -1)
        throw std::logic_error("f_at_minus2: |f_n(-2)| != 1 for n=" + std::to_string(n));
    return v;
}

IntPoly g_poly(long k) {
    if (k < 2) throw std::invalid_argument("g_poly: need k >= 2");
    return adams_psi(k + 1) - adams_psi(k - 1);
}

bool eisenstein_check(const IntPoly& p, const BigInt& q) {
    if (p.is_zero() || p.coeff(p.degree()) != 1)
        throw std::invalid_argument("eisenstein_check: polynomial must be monic");
    if (!is_prime(q)) throw std::invalid_argument("eisenstein_check: q must be prime");
    for (long j = 0; j < p.degree(); ++j)
        if (p.coeff(j) % q != 0) return false;
    return p.coeff(0) % (q * q) != 0;
}

}  // namespace dk
