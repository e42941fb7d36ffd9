#include "dihedralk/intpoly.hpp"

#include <sstream>

namespace dk {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { canonicalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.assign(coeffs.begin(), coeffs.end());
    canonicalize();
}

void IntPoly::canonicalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(BigInt c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::w() {
    IntPoly p;
    p.c_ = {0, 1};
    return p;
}

const BigInt& IntPoly::coeff(long i) const {
    static const BigInt zero = 0;
    if (i < 0 || i >= static_cast<long>(c_.size())) return zero;
    return c_[static_cast<size_t>(i)];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i < c_.size()) r.c_[i] += c_[i];
        if (i < o.c_.size()) r.c_[i] += o.c_[i];
    }
    r.canonicalize();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPoly IntPoly::scaled(const BigInt& s) const {
    IntPoly r = *this;
    for (auto& c : r.c_) c *= s;
    r.canonicalize();
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    IntPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.canonicalize();
    return r;
}

IntPoly IntPoly::compose(const IntPoly& inner) const {
    IntPoly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * inner + IntPoly::constant(*it);
    return r;
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        BigInt a = c_[i];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (i == 0 || a != 1) os << a.str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << "w";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace dk
