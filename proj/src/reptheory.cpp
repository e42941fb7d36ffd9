#include "dihedralk/reptheory.hpp"

#include <sstream>
#include <stdexcept>

namespace dk {

ClassFunction ClassFunction::pointwise_mul(const ClassFunction& o) const {
    if (n != o.n || values.size() != o.values.size())
        throw std::invalid_argument("ClassFunction: mismatched shapes");
    ClassFunction out;
    out.n = n;
    out.values.resize(values.size(), std::vector<BigInt>(static_cast<size_t>(n)));
    for (size_t c = 0; c < values.size(); ++c) {
        const auto& a = values[c];
        const auto& b = o.values[c];
        auto& r = out.values[c];
        for (long i = 0; i < n; ++i) {
            if (a[static_cast<size_t>(i)] == 0) continue;
            for (long j = 0; j < n; ++j) {
                if (b[static_cast<size_t>(j)] == 0) continue;
                r[static_cast<size_t>((i + j) % n)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
            }
        }
    }
    return out;
}

bool ClassFunction::is_zero() const {
    for (const auto& v : values)
        for (const auto& x : v)
            if (x != 0) return false;
    return true;
}

DihedralRing::DihedralRing(long n, bool swap_eta) : n_(n), swap_(swap_eta) {
    if (n < 3) throw std::invalid_argument("DihedralRing: need n >= 3 (n=2 is out of scope)");
    odd_ = (n % 2 == 1);
    k_ = odd_ ? (n - 1) / 2 : n / 2;
    if (odd_) {
        basis_ = {"1", "eta"};
        for (long i = 1; i <= k_; ++i) basis_.push_back("rho" + std::to_string(i));
    } else {
        basis_ = {"1", "eta1", "eta2", "eta3"};
        for (long i = 1; i < k_; ++i) basis_.push_back("rho" + std::to_string(i));
    }
    classes_ = {"e"};
    for (long j = 1; j <= k_; ++j) classes_.push_back("r" + std::to_string(j));
    classes_.push_back("s");
    if (!odd_) classes_.push_back("rs");

    long d = dim();
    table_.resize(static_cast<size_t>(d * d));
    for (long a = 0; a < d; ++a)
        for (long b = 0; b < d; ++b) table_[static_cast<size_t>(a * d + b)] = basis_product(a, b);

    // character table over Z[x]/(x^n-1); rows indexed by basis, then class
    chars_.assign(static_cast<size_t>(d),
                  std::vector<std::vector<long>>(classes_.size(), std::vector<long>(static_cast<size_t>(n))));
    long e1s = swap_ ? -1 : 1;  // eta1 on s; eta2 gets the opposite sign
    for (long b = 0; b < d; ++b) {
        const std::string& name = basis_[static_cast<size_t>(b)];
        bool is_rho = name.starts_with("rho");
        long rho_i = is_rho ? std::stol(name.substr(3)) : 0;
        for (size_t cl = 0; cl < classes_.size(); ++cl) {
            auto& val = chars_[static_cast<size_t>(b)][cl];
            const std::string& c = classes_[cl];
            if (c == "e") {
                val[0] = is_rho ? 2 : 1;
            } else if (c != "s" && c != "rs") {
                long j = std::stol(c.substr(1));
                if (is_rho) {
                    val[static_cast<size_t>((rho_i * j) % n)] += 1;
                    val[static_cast<size_t>(((n - rho_i) * j) % n)] += 1;
                } else if (name == "eta1" || name == "eta2") {
                    // (-1)^j realized exactly as x^{kj}, n = 2k
                    val[static_cast<size_t>((k_ * j) % n)] = 1;
                } else {
                    val[0] = 1;  // 1, eta (odd), eta3 are trivial on rotations
                }
            } else {
                long sgn;
                if (is_rho) sgn = 0;
                else if (name == "1") sgn = 1;
                else if (name == "eta" || name == "eta3") sgn = -1;
                else sgn = (name == "eta1") ? e1s : -e1s;
                if (c == "rs" && (name == "eta1" || name == "eta2"))
                    sgn = -sgn;  // eta_{1,2}(r) = -1
                val[0] = sgn;
            }
        }
    }
}

std::vector<std::pair<int, int>> DihedralRing::basis_product(long a, long b) const {
    auto rho_pairs = [this](long i) {
        std::vector<std::pair<int, int>> out;
        i %= n_;
        if (i < 0) i += n_;
        if (i > n_ - i) i = n_ - i;
        if (odd_) {
            if (i == 0) out = {{0, 1}, {1, 1}};
            else out = {{static_cast<int>(i + 1), 1}};
        } else {
            if (i == 0) out = {{0, 1}, {3, 1}};
            else if (i == k_) out = {{1, 1}, {2, 1}};
            else out = {{static_cast<int>(i + 3), 1}};
        }
        return out;
    };
    const std::string &A = basis_[static_cast<size_t>(a)], &B = basis_[static_cast<size_t>(b)];
    if (A == "1") return {{static_cast<int>(b), 1}};
    if (B == "1") return {{static_cast<int>(a), 1}};
    bool oa = A.starts_with("eta"), ob = B.starts_with("eta");
    if (oa && ob) {
        if (odd_ || A == B) return {{0, 1}};
        long ia = A[3] - '0', ib = B[3] - '0';
        long ic = 6 - ia - ib;
        return {{static_cast<int>(ic), 1}};  // eta1*eta2=eta3 etc., indices 1..3
    }
    if (oa || ob) {
        const std::string& one = oa ? A : B;
        long i = std::stol((oa ? B : A).substr(3));
        if (odd_ || one == "eta3") return rho_pairs(i);
        return rho_pairs(k_ - i);  // eta1, eta2
    }
    long i = std::stol(A.substr(3)), j = std::stol(B.substr(3));
    auto out = rho_pairs(i + j);
    for (auto [idx, c] : rho_pairs(j - i)) {
        bool merged = false;
        for (auto& [oi, oc] : out)
            if (oi == idx) { oc += c; merged = true; break; }
        if (!merged) out.emplace_back(idx, c);
    }
    return out;
}

RepVec DihedralRing::unit(const std::string& name) const {
    for (long b = 0; b < dim(); ++b)
        if (basis_[static_cast<size_t>(b)] == name) {
            RepVec v = zero();
            v[static_cast<size_t>(b)] = 1;
            return v;
        }
    throw std::invalid_argument("unit: unknown basis element " + name);
}

RepVec DihedralRing::rho(long i) const {
    RepVec v = zero();
    i %= n_;
    if (i < 0) i += n_;
    if (i > n_ - i) i = n_ - i;
    if (odd_) {
        if (i == 0) { v[0] += 1; v[1] += 1; }
        else v[static_cast<size_t>(i + 1)] += 1;
    } else {
        if (i == 0) { v[0] += 1; v[3] += 1; }
        else if (i == k_) { v[1] += 1; v[2] += 1; }
        else v[static_cast<size_t>(i + 3)] += 1;
    }
    return v;
}

RepVec DihedralRing::phi() const {
    RepVec v = rho(1);
    v[0] -= 2;
    return v;
}

RepVec DihedralRing::v_elt(const std::string& name) const {
    RepVec v;
    if (odd_) {
        if (name != "v") throw std::invalid_argument("v_elt: odd case has only v");
        v = unit("eta");
    } else {
        if (name != "v1" && name != "v2" && name != "v3")
            throw std::invalid_argument("v_elt: even case has v1, v2, v3");
        v = unit("eta" + name.substr(1));
    }
    v[0] -= 1;
    return v;
}

RepVec DihedralRing::add(const RepVec& a, const RepVec& b) const {
    RepVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

RepVec DihedralRing::sub(const RepVec& a, const RepVec& b) const {
    RepVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

RepVec DihedralRing::scale(const RepVec& a, const BigInt& c) const {
    RepVec r = a;
    for (auto& x : r) x *= c;
    return r;
}

RepVec DihedralRing::mul(const RepVec& a, const RepVec& b) const {
    long d = dim();
    if (static_cast<long>(a.size()) != d || static_cast<long>(b.size()) != d)
        throw std::invalid_argument("mul: vector length mismatch");
    RepVec r = zero();
    for (long i = 0; i < d; ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        for (long j = 0; j < d; ++j) {
            if (b[static_cast<size_t>(j)] == 0) continue;
            BigInt c = a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
            for (auto [idx, sc] : table_[static_cast<size_t>(i * d + j)])
                r[static_cast<size_t>(idx)] += c * sc;
        }
    }
    return r;
}

RepVec DihedralRing::eval_poly_at(const IntPoly& p, const RepVec& a) const {
    RepVec r = zero();
    for (long j = p.degree(); j >= 0; --j) {
        r = mul(r, a);
        r[0] += p.coeff(j);
    }
    return r;
}

BigInt DihedralRing::dimension_of(const RepVec& a) const {
    BigInt d = 0;
    for (long b = 0; b < dim(); ++b)
        d += a[static_cast<size_t>(b)] * (basis_[static_cast<size_t>(b)].starts_with("rho") ? 2 : 1);
    return d;
}

ClassFunction DihedralRing::character(const RepVec& a) const {
    ClassFunction out;
    out.n = n_;
    out.values.resize(classes_.size(), std::vector<BigInt>(static_cast<size_t>(n_)));
    for (long b = 0; b < dim(); ++b) {
        const BigInt& c = a[static_cast<size_t>(b)];
        if (c == 0) continue;
        for (size_t cl = 0; cl < classes_.size(); ++cl) {
            const auto& row = chars_[static_cast<size_t>(b)][cl];
            for (long t = 0; t < n_; ++t)
                if (row[static_cast<size_t>(t)] != 0)
                    out.values[cl][static_cast<size_t>(t)] += c * row[static_cast<size_t>(t)];
        }
    }
    return out;
}

bool DihedralRing::verify_mul_by_characters(const RepVec& a, const RepVec& b) const {
    return character(mul(a, b)) == character(a).pointwise_mul(character(b));
}

std::vector<BigInt> DihedralRing::restrict_to(const RepVec& a, RestrictTarget t) const {
    if (t == RestrictTarget::RotationZn) {
        std::vector<BigInt> out(static_cast<size_t>(n_));
        for (long b = 0; b < dim(); ++b) {
            const BigInt& c = a[static_cast<size_t>(b)];
            if (c == 0) continue;
            const std::string& name = basis_[static_cast<size_t>(b)];
            if (name.starts_with("rho")) {
                long i = std::stol(name.substr(3));
                out[static_cast<size_t>(i)] += c;
                out[static_cast<size_t>(n_ - i)] += c;
            } else if (name == "eta1" || name == "eta2") {
                out[static_cast<size_t>(k_)] += c;  // sigma^k, the order-2 character
            } else {
                out[0] += c;
            }
        }
        return out;
    }
    // reflection targets: basis {1, tau} of R(Z_2)
    std::vector<BigInt> out(2);
    bool rs = (t == RestrictTarget::ReflectionRS) && !odd_;
    for (long b = 0; b < dim(); ++b) {
        const BigInt& c = a[static_cast<size_t>(b)];
        if (c == 0) continue;
        const std::string& name = basis_[static_cast<size_t>(b)];
        if (name.starts_with("rho")) {
            out[0] += c;
            out[1] += c;
            continue;
        }
        long sgn = 1;
        if (name == "eta" || name == "eta3") sgn = -1;
        else if (name == "eta1") sgn = swap_ ? -1 : 1;
        else if (name == "eta2") sgn = swap_ ? 1 : -1;
        if (rs && (name == "eta1" || name == "eta2")) sgn = -sgn;
        out[sgn == 1 ? 0 : 1] += c;
    }
    return out;
}

std::string DihedralRing::describe(const RepVec& a) const {
    RepVec rem = a;
    std::vector<std::pair<std::string, BigInt>> terms;
    auto take = [&](const std::string& label, const RepVec& elt, const BigInt& coeff) {
        if (coeff == 0) return;
        for (size_t i = 0; i < rem.size(); ++i) rem[i] -= coeff * elt[i];
        terms.emplace_back(label, coeff);
    };
    if (odd_) {
        take("v", v_elt("v"), a[1]);
    } else {
        take("v1", v_elt("v1"), a[1]);
        take("v2", v_elt("v2"), a[2]);
        take("v3", v_elt("v3"), a[3]);
    }
    long rho1_idx = odd_ ? 2 : 4;
    if (rho1_idx < dim()) take("phi", phi(), a[static_cast<size_t>(rho1_idx)]);
    if (rem[0] != 0) terms.emplace_back("", rem[0]);
    for (long b = rho1_idx + 1; b < dim(); ++b)
        if (rem[static_cast<size_t>(b)] != 0)
            terms.emplace_back(basis_[static_cast<size_t>(b)], rem[static_cast<size_t>(b)]);
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [name, coeff] : terms) {
        BigInt c = coeff;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (name.empty() || c != 1) os << c.str();
        os << name;
        first = false;
    }
    return os.str();
}

}  // namespace dk
