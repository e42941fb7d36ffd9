#pragma once
#include <string>
#include <utility>
#include <vector>

#include "dihedralk/bigint.hpp"

namespace dk {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(long rows, long cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows * cols)) {}
    explicit IntMatrix(std::vector<std::vector<BigInt>> rows);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    BigInt& at(long i, long j) { return e_[static_cast<size_t>(i * cols_ + j)]; }
    const BigInt& at(long i, long j) const { return e_[static_cast<size_t>(i * cols_ + j)]; }

    BigInt det() const;  // cofactor expansion, square matrices only (test oracle)

private:
    long rows_ = 0, cols_ = 0;
    std::vector<BigInt> e_;
};

/// Finitely generated abelian group given by its invariant factors
/// d_1 | d_2 | ... with leading 1s stripped; 0 denotes an infinite
/// cyclic factor.
struct AbelianGroup {
    std::vector<BigInt> invariant_factors;

    bool is_trivial() const { return invariant_factors.empty(); }
    bool is_finite() const;
    BigInt order() const;  // throws std::logic_error if infinite

    std::string str() const;  // "0", "Z", "Z_2+Z_4", ...

    /// Normalize an arbitrary list of cyclic orders into invariant-factor form.
    static AbelianGroup from_cyclic_orders(std::vector<BigInt> orders);

    bool operator==(const AbelianGroup&) const = default;
};

/// Invariant factors of the cokernel of m acting on Z^cols (rows are
/// relations). Deterministic: pivots are chosen by smallest nonzero
/// absolute value, ties broken by lowest row then lowest column.
AbelianGroup smith_normal_form(const IntMatrix& m);

AbelianGroup abelian_group_from_presentation(long num_gens,
                                             const std::vector<std::vector<BigInt>>& relations);

/// Row-echelon basis of the lattice spanned by integer rows: a list of
/// (pivot column, row) pairs with strictly increasing pivot columns and
/// zeros left of each pivot.
using EchelonBasis = std::vector<std::pair<long, std::vector<BigInt>>>;
EchelonBasis echelon_basis(std::vector<std::vector<BigInt>> rows, long ncols);

/// Whether v lies in the lattice described by an echelon basis.
bool lattice_contains(const EchelonBasis& basis, std::vector<BigInt> v);

}  // namespace dk
