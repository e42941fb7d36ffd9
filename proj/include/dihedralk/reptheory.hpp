#pragma once
#include <string>
#include <vector>

#include "dihedralk/intpoly.hpp"

namespace dk {

/// Values of a virtual character on the conjugacy classes of a dihedral
/// group, each value an element of Z[x]/(x^n-1) stored as a length-n
/// integer vector.
struct ClassFunction {
    long n = 0;
    std::vector<std::vector<BigInt>> values;  // one vector per class

    ClassFunction pointwise_mul(const ClassFunction& o) const;
    bool is_zero() const;
    bool operator==(const ClassFunction&) const = default;
};

using RepVec = std::vector<BigInt>;  // coefficients over the irreducible basis

enum class RestrictTarget { RotationZn, ReflectionS, ReflectionRS };

/// The representation ring R(D_2n) of the dihedral group of order 2n.
/// Odd n = 2k+1: basis [1, eta, rho_1..rho_k].
/// Even n = 2k (k >= 2): basis [1, eta1, eta2, eta3, rho_1..rho_{k-1}].
/// The swap flag exchanges the eta1/eta2 labeling on reflections.
class DihedralRing {
public:
    explicit DihedralRing(long n, bool swap_eta = false);

    long n() const { return n_; }
    long k() const { return k_; }
    bool odd() const { return odd_; }
    bool swapped() const { return swap_; }
    long dim() const { return static_cast<long>(basis_.size()); }
    const std::vector<std::string>& basis() const { return basis_; }
    const std::vector<std::string>& classes() const { return classes_; }

    RepVec zero() const { return RepVec(static_cast<size_t>(dim())); }
    RepVec unit(const std::string& name) const;

    /// rho_i for any integer i, folded into the basis: i mod n, then
    /// i := min(i, n-i); rho_0 = 1+eta (odd) or 1+eta3 (even);
    /// rho_k = eta1+eta2 (even).
    RepVec rho(long i) const;

    RepVec phi() const;                      // rho_1 - 2
    RepVec v_elt(const std::string& name) const;  // "v" (odd), "v1".."v3" (even)

    RepVec add(const RepVec& a, const RepVec& b) const;
    RepVec sub(const RepVec& a, const RepVec& b) const;
    RepVec scale(const RepVec& a, const BigInt& c) const;
    RepVec mul(const RepVec& a, const RepVec& b) const;
    RepVec eval_poly_at(const IntPoly& p, const RepVec& a) const;

    /// Coefficient-weighted dimension (rho_i counts 2, one-dimensionals 1).
    BigInt dimension_of(const RepVec& a) const;

    ClassFunction character(const RepVec& a) const;
    bool verify_mul_by_characters(const RepVec& a, const RepVec& b) const;

    /// Image under the restriction maps. RotationZn: vector over
    /// sigma^0..sigma^{n-1}; reflection targets: vector over {1, tau}.
    /// For odd n both reflection targets coincide.
    std::vector<BigInt> restrict_to(const RepVec& a, RestrictTarget t) const;

    /// Render a virtual rep as a combination of 1, v/v1..v3, phi and the
    /// remaining rho_i, e.g. "-2v3". "0" for the zero element.
    std::string describe(const RepVec& a) const;

private:
    long n_, k_;
    bool odd_, swap_;
    std::vector<std::string> basis_, classes_;
    // structure constants: table_[a*dim+b] = list of (basis index, coeff)
    std::vector<std::vector<std::pair<int, int>>> table_;
    // integer character table: chars_[b][cl] = length-n vector over Z[x]/(x^n-1)
    std::vector<std::vector<std::vector<long>>> chars_;

    std::vector<std::pair<int, int>> basis_product(long a, long b) const;
};

}  // namespace dk
