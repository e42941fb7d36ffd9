#include "dihedralk/intmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace dk {

IntMatrix::IntMatrix(std::vector<std::vector<BigInt>> rows) {
    rows_ = static_cast<long>(rows.size());
    cols_ = rows.empty() ? 0 : static_cast<long>(rows[0].size());
    e_.reserve(static_cast<size_t>(rows_ * cols_));
    for (auto& r : rows) {
        if (static_cast<long>(r.size()) != cols_)
            throw std::invalid_argument("IntMatrix: ragged rows");
        for (auto& x : r) e_.push_back(std::move(x));
    }
}

BigInt IntMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det: not square");
    if (rows_ == 0) return 1;
    if (rows_ == 1) return at(0, 0);
    BigInt d = 0;
    for (long j = 0; j < cols_; ++j) {
        if (at(0, j) == 0) continue;
        IntMatrix minor(rows_ - 1, cols_ - 1);
        for (long i = 1; i < rows_; ++i) {
            long jj = 0;
            for (long c = 0; c < cols_; ++c) {
                if (c == j) continue;
                minor.at(i - 1, jj++) = at(i, c);
            }
        }
        BigInt term = at(0, j) * minor.det();
        d += (j % 2 == 0) ? term : -term;
    }
    return d;
}

bool AbelianGroup::is_finite() const {
    for (const auto& d : invariant_factors)
        if (d == 0) return false;
    return true;
}

BigInt AbelianGroup::order() const {
    BigInt o = 1;
    for (const auto& d : invariant_factors) {
        if (d == 0) throw std::logic_error("order: infinite group");
        o *= d;
    }
    return o;
}

std::string AbelianGroup::str() const {
    if (invariant_factors.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& d : invariant_factors) {
        if (!first) os << "+";
        if (d == 0) os << "Z";
        else os << "Z_" << d;
        first = false;
    }
    return os.str();
}

AbelianGroup AbelianGroup::from_cyclic_orders(std::vector<BigInt> orders) {
    using boost::multiprecision::gcd;
    // pairwise gcd/lcm passes yield the divisibility chain
    for (size_t a = 0; a < orders.size(); ++a) {
        for (size_t b = a + 1; b < orders.size(); ++b) {
            if (orders[a] == 0 && orders[b] == 0) continue;
            BigInt g = gcd(orders[a], orders[b]);
            BigInt l = (g == 0) ? BigInt(0) : orders[a] * orders[b] / g;
            if (orders[a] == 0 || orders[b] == 0) l = 0;
            orders[a] = g;
            orders[b] = l;
        }
    }
    AbelianGroup out;
    for (auto& d : orders) {
        if (d < 0) d = -d;
        if (d != 1) out.invariant_factors.push_back(std::move(d));
    }
    return out;
}

AbelianGroup smith_normal_form(const IntMatrix& m) {
    long R = m.rows(), C = m.cols();
    std::vector<std::vector<BigInt>> M(static_cast<size_t>(R), std::vector<BigInt>(static_cast<size_t>(C)));
    for (long i = 0; i < R; ++i)
        for (long j = 0; j < C; ++j) M[i][j] = m.at(i, j);

    std::vector<BigInt> facs;
    long r0 = 0, c0 = 0;
    while (r0 < R && c0 < C) {
        // smallest-|entry| pivot; ties go to the lowest row, then column
        long pi = -1, pj = -1;
        for (long i = r0; i < R; ++i)
            for (long j = c0; j < C; ++j)
                if (M[i][j] != 0 && (pi < 0 || abs(M[i][j]) < abs(M[pi][pj])))
                    { pi = i; pj = j; }
        if (pi < 0) break;
        std::swap(M[r0], M[pi]);
        if (pj != c0)
            for (long i = 0; i < R; ++i) std::swap(M[i][c0], M[i][pj]);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (long i = r0 + 1; i < R; ++i) {
                if (M[i][c0] == 0) continue;
                BigInt q = M[i][c0] / M[r0][c0];
                for (long j = c0; j < C; ++j) M[i][j] -= q * M[r0][j];
                if (M[i][c0] != 0) { std::swap(M[r0], M[i]); dirty = true; }
            }
            for (long j = c0 + 1; j < C; ++j) {
                if (M[r0][j] == 0) continue;
                BigInt q = M[r0][j] / M[r0][c0];
                for (long i = r0; i < R; ++i) M[i][j] -= q * M[i][c0];
                if (M[r0][j] != 0) {
                    for (long i = r0; i < R; ++i) std::swap(M[i][c0], M[i][j]);
                    dirty = true;
                }
            }
        }
        facs.push_back(abs(M[r0][c0]));
        ++r0;
        ++c0;
    }
    long rank = static_cast<long>(facs.size());
    for (long i = rank; i < C; ++i) facs.push_back(0);  // free part
    return AbelianGroup::from_cyclic_orders(std::move(facs));
}

AbelianGroup abelian_group_from_presentation(long num_gens,
                                             const std::vector<std::vector<BigInt>>& relations) {
    IntMatrix m(static_cast<long>(relations.size()), num_gens);
    for (size_t i = 0; i < relations.size(); ++i) {
        if (static_cast<long>(relations[i].size()) != num_gens)
            throw std::invalid_argument("relation row length mismatch");
        for (long j = 0; j < num_gens; ++j) m.at(static_cast<long>(i), j) = relations[i][j];
    }
    return smith_normal_form(m);
}

EchelonBasis echelon_basis(std::vector<std::vector<BigInt>> rows, long ncols) {
    auto nonzero = [](const std::vector<BigInt>& r) {
        for (const auto& x : r)
            if (x != 0) return true;
        return false;
    };
    std::vector<std::vector<BigInt>> M;
    for (auto& r : rows)
        if (nonzero(r)) M.push_back(std::move(r));

    EchelonBasis basis;
    for (long col = 0; col < ncols && !M.empty(); ++col) {
        // gcd-reduce all rows with a nonzero entry in this column down to one
        std::vector<std::vector<BigInt>> cand, rest;
        for (auto& r : M)
            (r[col] != 0 ? cand : rest).push_back(std::move(r));
        if (cand.empty()) { M = std::move(rest); continue; }
        while (true) {
            size_t best = 0;
            for (size_t i = 1; i < cand.size(); ++i)
                if (abs(cand[i][col]) < abs(cand[best][col])) best = i;
            std::swap(cand[0], cand[best]);
            bool done = true;
            for (size_t i = 1; i < cand.size(); ++i) {
                BigInt q = cand[i][col] / cand[0][col];
                for (long j = 0; j < ncols; ++j) cand[i][j] -= q * cand[0][j];
                if (cand[i][col] != 0) done = false;
            }
            std::vector<std::vector<BigInt>> keep;
            keep.push_back(std::move(cand[0]));
            for (size_t i = 1; i < cand.size(); ++i)
                if (cand[i][col] != 0) keep.push_back(std::move(cand[i]));
                else if (nonzero(cand[i])) rest.push_back(std::move(cand[i]));
            cand = std::move(keep);
            if (done) break;
        }
        auto pivot = std::move(cand[0]);
        if (pivot[col] < 0)
            for (auto& x : pivot) x = -x;
        for (auto& r : rest) {
            if (r[col] != 0) {
                BigInt q = r[col] / pivot[col];
                for (long j = 0; j < ncols; ++j) r[j] -= q * pivot[j];
            }
        }
        std::vector<std::vector<BigInt>> next;
        for (auto& r : rest)
            if (nonzero(r)) next.push_back(std::move(r));
        M = std::move(next);
        basis.emplace_back(col, std::move(pivot));
    }
    return basis;
}

bool lattice_contains(const EchelonBasis& basis, std::vector<BigInt> v) {
    for (const auto& [col, row] : basis) {
        if (v[static_cast<size_t>(col)] == 0) continue;
        BigInt q, r;
        boost::multiprecision::divide_qr(v[static_cast<size_t>(col)], row[static_cast<size_t>(col)], q, r);
        if (r != 0) return false;
        for (size_t j = 0; j < v.size(); ++j) v[j] -= q * row[j];
    }
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace dk
