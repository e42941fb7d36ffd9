#pragma once
#include <span>
#include <string>
#include <vector>

#include "dihedralk/bigint.hpp"

namespace dk {

/// Dense univariate polynomial with exact integer coefficients, stored in
/// ascending degree order. Canonical form has no trailing zero coefficient;
/// the zero polynomial is the empty sequence.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(BigInt c);
    static IntPoly w();  // the indeterminate

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    const BigInt& coeff(long i) const;
    std::span<const BigInt> coeffs() const { return c_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly scaled(const BigInt& s) const;

    /// (*this) composed with inner, i.e. this(inner(w)), by Horner.
    IntPoly compose(const IntPoly& inner) const;

    BigInt eval(const BigInt& x) const;

    bool operator==(const IntPoly& o) const = default;

    std::string str() const;  // e.g. "3 + 4*w + w^2"

private:
    std::vector<BigInt> c_;
    void canonicalize();
};

}  // namespace dk
