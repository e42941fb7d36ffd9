#include "dihedralk/kring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dihedralk/polyzoo.hpp"

namespace dk {

MultiPoly MultiPoly::var(long i, long nvars) {
    MultiPoly p(nvars);
    Exp e(static_cast<size_t>(nvars));
    e[static_cast<size_t>(i)] = 1;
    p.terms_[e] = 1;
    return p;
}

MultiPoly MultiPoly::constant(const BigInt& c, long nvars) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_[Exp(static_cast<size_t>(nvars))] = c;
    return p;
}

MultiPoly MultiPoly::from_univariate(const IntPoly& p, const MultiPoly& arg) {
    MultiPoly r(arg.nvars());
    for (long j = p.degree(); j >= 0; --j)
        r = r * arg + constant(p.coeff(j), arg.nvars());
    return r;
}

void MultiPoly::add_term(Exp e, BigInt c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(std::move(e), std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exp e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(std::move(e), ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::scaled(const BigInt& s) const {
    MultiPoly r(nvars_);
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_[e] = c * s;
    return r;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool any = false;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) any = true;
        if (!any || a != 1) os << a.str();
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << names[i];
            if (e[i] > 1) os << "^" << e[i];
        }
        first = false;
    }
    return os.str();
}

RingPresentation build_presentation(long n, bool swap_eta) {
    if (n < 3) throw std::invalid_argument("build_presentation: need n >= 3");
    RingPresentation p;
    p.n = n;
    p.odd = (n % 2 == 1);
    p.k = p.odd ? (n - 1) / 2 : n / 2;
    p.swap_eta = swap_eta;
    if (p.odd) {
        p.case_tag = "odd";
        p.generators = {"v", "phi"};
        long nv = 2;
        MultiPoly v = MultiPoly::var(0, nv), phi = MultiPoly::var(1, nv);
        p.relations.push_back({"relation 1", v * v + v.scaled(2)});
        p.relations.push_back({"relation 2", v * phi + v.scaled(2)});
        IntPoly f = f_min(n);
        p.relations.push_back(
            {"relation 3", phi * MultiPoly::from_univariate(f, phi) - v.scaled(f_at_minus2(n))});
        return p;
    }
    long k = p.k;
    p.case_tag = (k == 2) ? "even-k2" : (k % 2 == 1 ? "even-k-odd" : "even-k-even");
    p.generators = {"v2", "v3", "phi"};
    long nv = 3;
    MultiPoly v2 = MultiPoly::var(0, nv), v3 = MultiPoly::var(1, nv), phi = MultiPoly::var(2, nv);
    p.relations.push_back({"relation 1", v2 * v2 + v2.scaled(2)});
    p.relations.push_back({"relation 2", v3 * v3 + v3.scaled(2)});
    if (k >= 3) {
        MultiPoly rhs = MultiPoly::from_univariate(adams_psi(k - 1), phi) - phi - v2.scaled(2);
        if (k % 2 == 1) rhs = rhs - v3;
        p.relations.push_back({"relation 3", v2 * phi - rhs});
    }
    p.relations.push_back({"relation 4", v3 * phi + v3.scaled(2)});
    MultiPoly rhs5(nv);
    if (k == 2) {
        rhs5 = phi.scaled(4) + phi * phi - v2.scaled(2) - v3.scaled(2);
    } else {
        rhs5 = MultiPoly::from_univariate(adams_psi(k), phi) - v2.scaled(2);
        if (k % 2 == 1) rhs5 = rhs5 - v3;
    }
    p.relations.push_back({"relation 5", v2 * v3 - rhs5});
    return p;
}

namespace {

std::vector<RepVec> generator_elements(const DihedralRing& ring) {
    if (ring.odd()) return {ring.v_elt("v"), ring.phi()};
    return {ring.v_elt("v2"), ring.v_elt("v3"), ring.phi()};
}

}  // namespace

RepVec lift_relation_defect(const DihedralRing& ring, const MultiPoly& rel) {
    auto gens = generator_elements(ring);
    if (static_cast<long>(gens.size()) != rel.nvars())
        throw std::invalid_argument("lift_relation_defect: generator count mismatch");
    // cache powers of each generator
    std::vector<std::vector<RepVec>> pows(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) pows[i].push_back(ring.unit("1"));
    auto power = [&](size_t i, int e) -> const RepVec& {
        while (static_cast<int>(pows[i].size()) <= e)
            pows[i].push_back(ring.mul(pows[i].back(), gens[i]));
        return pows[i][static_cast<size_t>(e)];
    };
    RepVec out = ring.zero();
    for (const auto& [e, c] : rel.terms()) {
        RepVec t = ring.unit("1");
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = ring.mul(t, power(i, e[i]));
        out = ring.add(out, ring.scale(t, c));
    }
    return out;
}

namespace {

ClassFunction cf_zero(const DihedralRing& ring) {
    return ring.character(ring.zero());
}

void cf_add_scaled(ClassFunction& acc, const ClassFunction& x, const BigInt& c) {
    for (size_t cl = 0; cl < acc.values.size(); ++cl)
        for (size_t t = 0; t < acc.values[cl].size(); ++t)
            acc.values[cl][t] += c * x.values[cl][t];
}

}  // namespace

ClassFunction lift_relation_defect_characters(const DihedralRing& ring, const MultiPoly& rel) {
    auto gens = generator_elements(ring);
    std::vector<std::vector<ClassFunction>> pows(gens.size());
    ClassFunction one = ring.character(ring.unit("1"));
    for (size_t i = 0; i < gens.size(); ++i) pows[i].push_back(one);
    std::vector<ClassFunction> gchar;
    for (const auto& g : gens) gchar.push_back(ring.character(g));
    auto power = [&](size_t i, int e) -> const ClassFunction& {
        while (static_cast<int>(pows[i].size()) <= e)
            pows[i].push_back(pows[i].back().pointwise_mul(gchar[i]));
        return pows[i][static_cast<size_t>(e)];
    };
    ClassFunction out = cf_zero(ring);
    for (const auto& [e, c] : rel.terms()) {
        ClassFunction t = one;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = t.pointwise_mul(power(i, e[i]));
        cf_add_scaled(out, t, c);
    }
    return out;
}

namespace {

std::vector<RelationAudit> audit_relations(const DihedralRing& ring, const RingPresentation& pres) {
    std::vector<RelationAudit> out;
    for (const auto& rel : pres.relations) {
        RelationAudit a;
        a.label = rel.label;
        a.defect = lift_relation_defect(ring, rel.poly);
        a.defect_str = ring.describe(a.defect);
        a.ok = (a.defect == ring.zero());
        out.push_back(std::move(a));
    }
    if (!pres.odd) {
        // the paper's side claim g_2k(phi) = 0, audited alongside the relations
        RelationAudit a;
        a.label = "g_2k";
        a.defect = ring.eval_poly_at(g_poly(pres.k), ring.phi());
        a.defect_str = ring.describe(a.defect);
        a.ok = (a.defect == ring.zero());
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace

VerifyReport verify_presentation(long n, bool swap_eta) {
    VerifyReport rep;
    rep.n = n;
    rep.swap_eta = swap_eta;
    RingPresentation pres = build_presentation(n, swap_eta);
    DihedralRing ring(n, swap_eta);
    rep.items = audit_relations(ring, pres);
    rep.pass = true;
    for (const auto& a : rep.items)
        if (!a.ok) rep.pass = false;
    if (!rep.pass) {
        DihedralRing other(n, !swap_eta);
        rep.retried = audit_relations(other, build_presentation(n, !swap_eta));
        rep.retried_pass = true;
        for (const auto& a : *rep.retried)
            if (!a.ok) rep.retried_pass = false;
    }
    return rep;
}

// ---- filtration tower -------------------------------------------------

namespace {

struct TwistedScheme {
    std::vector<std::string> names;
    std::vector<long> weights;
    std::vector<MultiPoly> rels;
};

// Generators re-expressed so each carries its filtration weight: the
// degree-1 part of phi is v (resp. v2), so u = phi - v is pure weight 2.
TwistedScheme twisted_scheme(long n) {
    TwistedScheme s;
    if (n % 2 == 1) {
        long nv = 2;
        s.names = {"v", "u"};
        s.weights = {1, 2};
        MultiPoly v = MultiPoly::var(0, nv), u = MultiPoly::var(1, nv);
        MultiPoly phi = u + v;
        s.rels.push_back(v * v + v.scaled(2));
        s.rels.push_back(v * phi + v.scaled(2));
        IntPoly f = f_min(n);
        s.rels.push_back(phi * MultiPoly::from_univariate(f, phi) - v.scaled(f_at_minus2(n)));
        return s;
    }
    long k = n / 2;
    long nv = 3;
    s.names = {"v2", "v3", "u"};
    s.weights = {1, 1, 2};
    MultiPoly v2 = MultiPoly::var(0, nv), v3 = MultiPoly::var(1, nv), u = MultiPoly::var(2, nv);
    MultiPoly phi = u + v2;
    s.rels.push_back(v2 * v2 + v2.scaled(2));
    s.rels.push_back(v3 * v3 + v3.scaled(2));
    if (k >= 3) {
        MultiPoly rhs = MultiPoly::from_univariate(adams_psi(k - 1), phi) - phi - v2.scaled(2);
        if (k % 2 == 1) rhs = rhs - v3;
        s.rels.push_back(v2 * phi - rhs);
    } else {
        // exact in R(D_8) and needed to present the k=2 tower; relation 5
        // below implies it only up to higher filtration
        s.rels.push_back(v2 * phi + v2.scaled(2));
    }
    s.rels.push_back(v3 * phi + v3.scaled(2));
    MultiPoly rhs5(nv);
    if (k == 2) {
        rhs5 = phi.scaled(4) + phi * phi - v2.scaled(2) - v3.scaled(2);
    } else {
        rhs5 = MultiPoly::from_univariate(adams_psi(k), phi) - v2.scaled(2);
        if (k % 2 == 1) rhs5 = rhs5 - v3;
    }
    s.rels.push_back(v2 * v3 - rhs5);
    return s;
}

long weight_of(const MultiPoly::Exp& e, const std::vector<long>& weights) {
    long w = 0;
    for (size_t i = 0; i < e.size(); ++i) w += e[i] * weights[i];
    return w;
}

std::vector<MultiPoly::Exp> monomials_up_to(const std::vector<long>& weights, long m) {
    std::vector<MultiPoly::Exp> out;
    MultiPoly::Exp e(weights.size());
    auto rec = [&](auto&& self, size_t i, long w) -> void {
        if (i == weights.size()) {
            if (w >= 1) out.push_back(e);
            return;
        }
        for (long t = 0; w + t * weights[i] <= m; ++t) {
            e[i] = static_cast<int>(t);
            self(self, i + 1, w + t * weights[i]);
        }
        e[i] = 0;
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        long wa = weight_of(a, weights), wb = weight_of(b, weights);
        return wa != wb ? wa < wb : a < b;
    });
    if (out.size() > 10000)
        throw std::length_error("truncated_quotient: monomial guard (10^4) exceeded");
    return out;
}

std::vector<std::vector<BigInt>> truncation_rows(const TwistedScheme& s, long j,
                                                 const std::vector<MultiPoly::Exp>& mons) {
    std::map<MultiPoly::Exp, size_t> idx;
    for (size_t i = 0; i < mons.size(); ++i) idx[mons[i]] = i;
    std::vector<std::vector<BigInt>> rows;
    std::vector<MultiPoly::Exp> all;
    all.push_back(MultiPoly::Exp(s.weights.size()));  // the monomial 1
    for (const auto& m : mons) all.push_back(m);
    for (const auto& rel : s.rels) {
        for (const auto& m : all) {
            MultiPoly mono(static_cast<long>(s.weights.size()));
            mono.add_term(m, 1);
            MultiPoly prod = rel * mono;
            std::vector<BigInt> row(mons.size());
            bool nz = false;
            for (const auto& [e, c] : prod.terms()) {
                if (weight_of(e, s.weights) > j) continue;
                row[idx.at(e)] = c;  // relations have no constant term
                nz = true;
            }
            if (nz) rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace

std::vector<TruncationStep> truncated_quotient(const RingPresentation& pres, long depth) {
    if (depth < 1) throw std::invalid_argument("truncated_quotient: need depth >= 1");
    TwistedScheme s = twisted_scheme(pres.n);
    std::vector<TruncationStep> out;
    for (long j = 1; j <= depth; ++j) {
        auto mons = monomials_up_to(s.weights, j);
        auto rows = truncation_rows(s, j, mons);
        TruncationStep step;
        step.depth = j;
        step.q = abelian_group_from_presentation(static_cast<long>(mons.size()), rows);
        long lo = 0;
        while (lo < static_cast<long>(mons.size()) &&
               weight_of(mons[static_cast<size_t>(lo)], s.weights) < j)
            ++lo;
        auto ech = echelon_basis(rows, static_cast<long>(mons.size()));
        std::vector<std::vector<BigInt>> sub;
        for (auto& [col, row] : ech)
            if (col >= lo)
                sub.emplace_back(row.begin() + lo, row.end());
        step.gr = abelian_group_from_presentation(static_cast<long>(mons.size()) - lo, sub);
        out.push_back(std::move(step));
    }
    return out;
}

bool defect_in_truncation(const RingPresentation& pres, const MultiPoly& defect, long depth) {
    TwistedScheme s = twisted_scheme(pres.n);
    long nv = static_cast<long>(s.weights.size());
    // substitute the original generators by their twisted expressions
    std::vector<MultiPoly> subs;
    if (pres.odd) {
        subs = {MultiPoly::var(0, nv), MultiPoly::var(1, nv) + MultiPoly::var(0, nv)};
    } else {
        subs = {MultiPoly::var(0, nv), MultiPoly::var(1, nv),
                MultiPoly::var(2, nv) + MultiPoly::var(0, nv)};
    }
    if (defect.nvars() != static_cast<long>(subs.size()))
        throw std::invalid_argument("defect_in_truncation: generator count mismatch");
    MultiPoly d(nv);
    for (const auto& [e, c] : defect.terms()) {
        MultiPoly t = MultiPoly::constant(c, nv);
        for (size_t i = 0; i < e.size(); ++i)
            for (int p = 0; p < e[i]; ++p) t = t * subs[i];
        d = d + t;
    }
    auto mons = monomials_up_to(s.weights, depth);
    std::map<MultiPoly::Exp, size_t> idx;
    for (size_t i = 0; i < mons.size(); ++i) idx[mons[i]] = i;
    std::vector<BigInt> vec(mons.size());
    for (const auto& [e, c] : d.terms()) {
        long w = weight_of(e, s.weights);
        if (w == 0) return false;  // nonzero augmentation component
        if (w <= depth) vec[idx.at(e)] = c;
    }
    auto rows = truncation_rows(s, depth, mons);
    return lattice_contains(echelon_basis(rows, static_cast<long>(mons.size())), vec);
}

// ---- cyclic K-ring ----------------------------------------------------

bool CyclicKRingElt::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

std::string CyclicKRingElt::str() const {
    std::ostringstream os;
    for (long i = 0; i < m; ++i) {
        if (i) os << " ";
        os << c[static_cast<size_t>(i)].str();
    }
    return os.str();
}

CyclicKRingElt cyclic_reduce(const IntPoly& p_in_mu, long m) {
    if (m < 2) throw std::invalid_argument("cyclic_reduce: need m >= 2");
    std::vector<BigInt> p(p_in_mu.coeffs().begin(), p_in_mu.coeffs().end());
    while (static_cast<long>(p.size()) > m) {
        BigInt c = std::move(p.back());
        p.pop_back();
        if (c == 0) continue;
        long d = static_cast<long>(p.size());  // degree of the removed term
        // mu^d = mu^{d-m} (1 - sum_{i<m} C(m,i) mu^i)
        p[static_cast<size_t>(d - m)] += c;
        for (long i = 0; i < m; ++i)
            p[static_cast<size_t>(d - m + i)] -= c * binomial(m, i);
    }
    p.resize(static_cast<size_t>(m));
    return {m, std::move(p)};
}

CyclicKRingElt cyc_mul(const CyclicKRingElt& a, const CyclicKRingElt& b) {
    if (a.m != b.m) throw std::invalid_argument("cyc_mul: modulus mismatch");
    std::vector<BigInt> prod(static_cast<size_t>(2 * a.m - 1));
    for (long i = 0; i < a.m; ++i) {
        if (a.c[static_cast<size_t>(i)] == 0) continue;
        for (long j = 0; j < b.m; ++j)
            prod[static_cast<size_t>(i + j)] += a.c[static_cast<size_t>(i)] * b.c[static_cast<size_t>(j)];
    }
    return cyclic_reduce(IntPoly(std::move(prod)), a.m);
}

CyclicKRingElt one_plus_mu_pow(long e, long m) {
    e %= m;
    if (e < 0) e += m;  // (1+mu)^m = 1
    std::vector<BigInt> p(static_cast<size_t>(e + 1));
    for (long i = 0; i <= e; ++i) p[static_cast<size_t>(i)] = binomial(e, i);
    return cyclic_reduce(IntPoly(std::move(p)), m);
}

CyclicKRingElt restriction_image(long n, const std::string& elem) {
    bool odd = (n % 2 == 1);
    auto zero = [&] { return CyclicKRingElt{n, std::vector<BigInt>(static_cast<size_t>(n))}; };
    if (elem == "phi") {
        CyclicKRingElt a = one_plus_mu_pow(1, n), b = one_plus_mu_pow(n - 1, n);
        CyclicKRingElt r = zero();
        for (long i = 0; i < n; ++i)
            r.c[static_cast<size_t>(i)] = a.c[static_cast<size_t>(i)] + b.c[static_cast<size_t>(i)];
        r.c[0] -= 2;
        return r;
    }
    if (odd) {
        if (elem == "v") return zero();
    } else {
        if (elem == "v3") return zero();
        if (elem == "v1" || elem == "v2") {
            CyclicKRingElt r = one_plus_mu_pow(n / 2, n);
            r.c[0] -= 1;
            return r;
        }
    }
    throw std::invalid_argument("restriction_image: unknown element " + elem +
                                " for n=" + std::to_string(n));
}

}  // namespace dk
