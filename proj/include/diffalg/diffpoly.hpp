#pragma once

#include "diffalg/error.hpp"
#include "diffalg/ground.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace diffalg {

// y_i^(k), as a plain algebraic variable of the prolonged polynomial ring
struct Derivative {
    int indet = 0;
    int order = 0;

    bool operator==(const Derivative& o) const { return indet == o.indet && order == o.order; }
    bool operator!=(const Derivative& o) const { return !(*this == o); }
    // storage order, independent of any ranking
    bool operator<(const Derivative& o) const {
        if (indet != o.indet) return indet < o.indet;
        return order < o.order;
    }
    Derivative raised(int by = 1) const { return {indet, order + by}; }
};

enum class Cmp { LT, EQ, GT };

inline Cmp cmp_int(long a, long b) { return a < b ? Cmp::LT : a > b ? Cmp::GT : Cmp::EQ; }

// Total order on derivatives.  Orderly compares derivation order first;
// elimination compares the indeterminate position first.  Positions come from
// a permutation of the indeterminates (higher position = higher rank).
struct Ranking {
    enum class Kind { Orderly, Elimination };

    Kind kind = Kind::Orderly;
    std::vector<int> position; // position[indet] in 0..n-1

    static Ranking orderly(int nindets) { return with_default(Kind::Orderly, nindets); }
    static Ranking elimination(int nindets) { return with_default(Kind::Elimination, nindets); }
    // low_to_high[k] = indet index ranked k-th from the bottom
    static Ranking make(Kind kind, const std::vector<int>& low_to_high) {
        Ranking r;
        r.kind = kind;
        r.position.assign(low_to_high.size(), -1);
        for (size_t k = 0; k < low_to_high.size(); ++k) {
            int i = low_to_high[k];
            if (i < 0 || i >= int(low_to_high.size()) || r.position[i] != -1)
                throw RankingMismatch("indeterminate order is not a permutation");
            r.position[i] = int(k);
        }
        return r;
    }

    Cmp compare(const Derivative& u, const Derivative& v) const {
        if (kind == Kind::Orderly) {
            if (u.order != v.order) return cmp_int(u.order, v.order);
            return cmp_int(position.at(u.indet), position.at(v.indet));
        }
        if (u.indet != v.indet) return cmp_int(position.at(u.indet), position.at(v.indet));
        return cmp_int(u.order, v.order);
    }
    bool less(const Derivative& u, const Derivative& v) const { return compare(u, v) == Cmp::LT; }

    bool operator==(const Ranking& o) const { return kind == o.kind && position == o.position; }

private:
    static Ranking with_default(Kind kind, int n) {
        std::vector<int> ids(n);
        for (int i = 0; i < n; ++i) ids[i] = i;
        return make(kind, ids);
    }
};

inline Cmp compare_derivatives(const Ranking& r, const Derivative& u, const Derivative& v) {
    return r.compare(u, v);
}

// Power product of derivatives; factors sorted by the storage order.
struct DPMonomial {
    std::vector<std::pair<Derivative, unsigned>> factors;

    static DPMonomial one() { return {}; }
    static DPMonomial var(Derivative v, unsigned e = 1) {
        DPMonomial m;
        if (e) m.factors.push_back({v, e});
        return m;
    }

    bool is_one() const { return factors.empty(); }
    unsigned total_degree() const {
        unsigned d = 0;
        for (auto& [v, e] : factors) d += e;
        return d;
    }
    unsigned degree_of(const Derivative& v) const {
        for (auto& [w, e] : factors)
            if (w == v) return e;
        return 0;
    }
    int max_order() const {
        int r = -1;
        for (auto& [v, e] : factors) r = std::max(r, v.order);
        return r;
    }

    DPMonomial mul(const DPMonomial& o) const {
        DPMonomial r;
        size_t i = 0, j = 0;
        while (i < factors.size() || j < o.factors.size()) {
            if (j == o.factors.size() || (i < factors.size() && factors[i].first < o.factors[j].first))
                r.factors.push_back(factors[i++]);
            else if (i == factors.size() || o.factors[j].first < factors[i].first)
                r.factors.push_back(o.factors[j++]);
            else {
                r.factors.push_back({factors[i].first, factors[i].second + o.factors[j].second});
                ++i, ++j;
            }
        }
        return r;
    }
    // multiply by v^e (e may be negative to divide; requires enough degree)
    DPMonomial shift(const Derivative& v, int e) const {
        DPMonomial r;
        bool placed = false;
        for (auto& [w, k] : factors) {
            if (w == v) {
                long ne = long(k) + e;
                if (ne < 0) throw Error("MonomialUnderflow", "negative exponent in monomial");
                if (ne > 0) r.factors.push_back({w, unsigned(ne)});
                placed = true;
            } else {
                r.factors.push_back({w, k});
            }
        }
        if (!placed) {
            if (e < 0) throw Error("MonomialUnderflow", "negative exponent in monomial");
            if (e > 0) {
                r.factors.push_back({v, unsigned(e)});
                std::sort(r.factors.begin(), r.factors.end(),
                          [](auto& a, auto& b) { return a.first < b.first; });
            }
        }
        return r;
    }
    // componentwise divisibility (for algebraic monomial division)
    bool divisible_by(const DPMonomial& o) const {
        for (auto& [v, e] : o.factors)
            if (degree_of(v) < e) return false;
        return true;
    }
    DPMonomial div(const DPMonomial& o) const {
        DPMonomial r = *this;
        for (auto& [v, e] : o.factors) r = r.shift(v, -int(e));
        return r;
    }

    bool operator==(const DPMonomial& o) const { return factors == o.factors; }
    bool operator<(const DPMonomial& o) const { // storage order only
        return std::lexicographical_compare(
            factors.begin(), factors.end(), o.factors.begin(), o.factors.end(),
            [](auto& a, auto& b) {
                if (!(a.first == b.first)) return a.first < b.first;
                return a.second < b.second;
            });
    }
};

class DiffRing;
using RingPtr = std::shared_ptr<const DiffRing>;

class DiffRing : public std::enable_shared_from_this<DiffRing> {
public:
    static RingPtr make(FieldPtr field, std::vector<std::string> indets) {
        if (indets.empty()) throw InvalidDescriptor("differential ring needs at least one indeterminate");
        for (size_t i = 0; i < indets.size(); ++i)
            for (size_t j = i + 1; j < indets.size(); ++j)
                if (indets[i] == indets[j])
                    throw InvalidDescriptor("duplicate indeterminate '" + indets[i] + "'");
        return RingPtr(new DiffRing(std::move(field), std::move(indets)));
    }

    const FieldPtr& field() const { return field_; }
    const std::vector<std::string>& indets() const { return indets_; }
    int nindets() const { return int(indets_.size()); }

    bool same_as(const DiffRing& o) const {
        if (this == &o) return true;
        return indets_ == o.indets_ && field_->same_as(*o.field_);
    }

    std::string derivative_name(const Derivative& v) const {
        std::string s = indets_.at(v.indet);
        if (v.order <= 3) {
            for (int i = 0; i < v.order; ++i) s += "'";
        } else {
            s += "^(" + std::to_string(v.order) + ")";
        }
        return s;
    }

private:
    DiffRing(FieldPtr field, std::vector<std::string> indets)
        : field_(std::move(field)), indets_(std::move(indets)) {}

    FieldPtr field_;
    std::vector<std::string> indets_;
};

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return;
    if (!a || !b || !a->same_as(*b)) throw RingMismatch("operands belong to different rings");
}

constexpr int ORDER_NEG_INF = std::numeric_limits<int>::min();

class DiffPoly {
public:
    using Terms = std::map<DPMonomial, FieldElem>;

    DiffPoly() = default;
    explicit DiffPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static DiffPoly zero(RingPtr ring) { return DiffPoly(std::move(ring)); }
    static DiffPoly constant(RingPtr ring, const FieldElem& c) {
        DiffPoly p(ring);
        require_same_field(ring->field(), c.field());
        if (!c.is_zero()) p.terms_[DPMonomial::one()] = c;
        return p;
    }
    static DiffPoly one(RingPtr ring) {
        FieldElem c = FieldElem::one(ring->field());
        return constant(std::move(ring), c);
    }
    static DiffPoly from_rat(RingPtr ring, const Rat& r) {
        FieldElem c = FieldElem::from_rat(ring->field(), r);
        return constant(std::move(ring), c);
    }
    static DiffPoly var(RingPtr ring, Derivative v) {
        if (v.indet < 0 || v.indet >= ring->nindets() || v.order < 0)
            throw RingMismatch("derivative outside the ring");
        DiffPoly p(ring);
        p.terms_[DPMonomial::var(v)] = FieldElem::one(ring->field());
        return p;
    }
    static DiffPoly monomial(RingPtr ring, const DPMonomial& m, const FieldElem& c) {
        DiffPoly p(ring);
        if (!c.is_zero()) p.terms_[m] = c;
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    size_t nterms() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    // lies in the ground field K (no derivative occurs)
    bool in_K() const {
        for (auto& [m, c] : terms_)
            if (!m.is_one()) return false;
        return true;
    }
    FieldElem constant_part() const {
        auto it = terms_.find(DPMonomial::one());
        return it == terms_.end() ? FieldElem::zero(ring_->field()) : it->second;
    }

    int order() const {
        if (terms_.empty()) return ORDER_NEG_INF;
        int r = -1;
        for (auto& [m, c] : terms_) r = std::max(r, m.max_order());
        return r;
    }
    unsigned total_degree() const {
        unsigned d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    std::set<Derivative> derivatives() const {
        std::set<Derivative> s;
        for (auto& [m, c] : terms_)
            for (auto& [v, e] : m.factors) s.insert(v);
        return s;
    }
    std::set<int> indets_occurring() const {
        std::set<int> s;
        for (auto& [m, c] : terms_)
            for (auto& [v, e] : m.factors) s.insert(v.indet);
        return s;
    }

    bool operator==(const DiffPoly& o) const {
        require_same_ring(ring_, o.ring_);
        return terms_ == o.terms_;
    }
    bool operator!=(const DiffPoly& o) const { return !(*this == o); }

    DiffPoly operator-() const {
        DiffPoly r(ring_);
        for (auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    DiffPoly operator+(const DiffPoly& o) const {
        require_same_ring(ring_, o.ring_);
        DiffPoly r = *this;
        for (auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    DiffPoly operator-(const DiffPoly& o) const { return *this + (-o); }
    DiffPoly operator*(const DiffPoly& o) const {
        require_same_ring(ring_, o.ring_);
        DiffPoly r(ring_);
        for (auto& [ma, ca] : terms_)
            for (auto& [mb, cb] : o.terms_) r.add_term(ma.mul(mb), ca * cb);
        return r;
    }
    DiffPoly operator*(const FieldElem& c) const {
        DiffPoly r(ring_);
        if (c.is_zero()) return r;
        for (auto& [m, k] : terms_) r.terms_[m] = k * c;
        return r;
    }
    DiffPoly pow(unsigned n) const {
        DiffPoly r = one(ring_), b = *this;
        while (n) {
            if (n & 1) r = r * b;
            b = n > 1 ? b * b : b;
            n >>= 1;
        }
        return r;
    }

    unsigned degree_in(const Derivative& v) const {
        unsigned d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.degree_of(v));
        return d;
    }
    // coefficient of v^k, with v struck out
    DiffPoly coeff_of_power(const Derivative& v, unsigned k) const {
        DiffPoly r(ring_);
        for (auto& [m, c] : terms_) {
            if (m.degree_of(v) != k) continue;
            r.terms_[m.shift(v, -int(k))] = c;
        }
        return r;
    }
    DiffPoly partial(const Derivative& v) const {
        DiffPoly r(ring_);
        for (auto& [m, c] : terms_) {
            unsigned e = m.degree_of(v);
            if (!e) continue;
            r.add_term(m.shift(v, -1), c * FieldElem::from_rat(ring_->field(), Rat(e)));
        }
        return r;
    }

    DiffPoly total_derive() const {
        DiffPoly r(ring_);
        for (auto& [m, c] : terms_) {
            FieldElem dc = c.derive();
            if (!dc.is_zero()) r.add_term(m, dc);
            for (auto& [v, e] : m.factors) {
                DPMonomial raised = m.shift(v, -1).shift(v.raised(), 1);
                r.add_term(raised, c * FieldElem::from_rat(ring_->field(), Rat(e)));
            }
        }
        return r;
    }
    DiffPoly total_derive(unsigned k) const {
        DiffPoly r = *this;
        while (k--) r = r.total_derive();
        return r;
    }

    std::string to_string(const Ranking& r) const;
    std::string to_string() const { return to_string(Ranking::orderly(ring_->nindets())); }

    void add_term(const DPMonomial& m, const FieldElem& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            FieldElem s = it->second + c;
            if (s.is_zero())
                terms_.erase(it);
            else
                it->second = s;
        }
    }

private:
    RingPtr ring_;
    Terms terms_;
};

struct Decomposition {
    Derivative leader;
    unsigned rank_degree = 0;
    DiffPoly initial;
    DiffPoly separant;
};

inline Derivative leader_of(const DiffPoly& f, const Ranking& r) {
    auto ds = f.derivatives();
    if (ds.empty()) throw ConstantPolynomial("polynomial lies in the ground field");
    Derivative best = *ds.begin();
    for (const Derivative& v : ds)
        if (r.less(best, v)) best = v;
    return best;
}

inline Decomposition decompose(const DiffPoly& f, const Ranking& r) {
    Decomposition d;
    d.leader = leader_of(f, r);
    d.rank_degree = f.degree_in(d.leader);
    d.initial = f.coeff_of_power(d.leader, d.rank_degree);
    d.separant = f.partial(d.leader);
    return d;
}

// h_p = I_p * s_p
inline DiffPoly h_poly(const DiffPoly& p, const Ranking& r) {
    Decomposition d = decompose(p, r);
    return d.initial * d.separant;
}

// rank comparison: leader under the ranking, then leader degree; ground-field
// elements rank below everything else (zero lowest of all)
inline Cmp compare_poly_rank(const DiffPoly& f, const DiffPoly& g, const Ranking& r) {
    bool fk = f.in_K(), gk = g.in_K();
    if (fk && gk) {
        bool fz = f.is_zero(), gz = g.is_zero();
        if (fz && gz) return Cmp::EQ;
        if (fz) return Cmp::LT;
        if (gz) return Cmp::GT;
        return Cmp::EQ;
    }
    if (fk) return Cmp::LT;
    if (gk) return Cmp::GT;
    Derivative uf = leader_of(f, r), ug = leader_of(g, r);
    Cmp c = r.compare(uf, ug);
    if (c != Cmp::EQ) return c;
    return cmp_int(f.degree_in(uf), g.degree_in(ug));
}

enum class ReducedMode { Partially, Algebraically, Fully };

inline bool is_reduced(const DiffPoly& f, const DiffPoly& g, const Ranking& r, ReducedMode mode) {
    if (g.in_K()) throw ConstantPolynomial("cannot reduce with respect to a ground-field element");
    Derivative ug = leader_of(g, r);
    bool partially = true;
    for (const Derivative& v : f.derivatives())
        if (v.indet == ug.indet && v.order > ug.order) partially = false;
    bool algebraically = f.degree_in(ug) < g.degree_in(ug);
    switch (mode) {
    case ReducedMode::Partially: return partially;
    case ReducedMode::Algebraically: return algebraically;
    case ReducedMode::Fully: return partially && algebraically;
    }
    return false;
}

// print order: leading derivative under the ranking first, then exponents
// lexicographically along descending derivatives
inline bool print_less(const Ranking& r, const DPMonomial& a, const DPMonomial& b) {
    std::vector<Derivative> vars;
    for (auto& [v, e] : a.factors) vars.push_back(v);
    for (auto& [v, e] : b.factors) vars.push_back(v);
    std::sort(vars.begin(), vars.end(), [&](const Derivative& u, const Derivative& v) {
        return r.less(v, u); // descending
    });
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    for (const Derivative& v : vars) {
        unsigned ea = a.degree_of(v), eb = b.degree_of(v);
        if (ea != eb) return ea < eb;
    }
    return false;
}

inline std::string DiffPoly::to_string(const Ranking& rk) const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const DPMonomial, FieldElem>*> ts;
    for (auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [&](auto* x, auto* y) {
        return print_less(rk, y->first, x->first); // descending
    });
    std::string out;
    bool first = true;
    for (auto* t : ts) {
        const DPMonomial& m = t->first;
        FieldElem c = t->second;
        bool neg = c.sign() < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        if (neg) c = -c;
        auto factors = m.factors;
        std::sort(factors.begin(), factors.end(),
                  [&](auto& x, auto& y) { return rk.less(x.first, y.first); });
        std::string mono;
        for (auto& [v, e] : factors) {
            if (!mono.empty()) mono += "*";
            mono += ring_->derivative_name(v);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += c.to_string_factor();
        } else if (c.is_one()) {
            out += mono;
        } else {
            out += c.to_string_factor() + "*" + mono;
        }
    }
    return out;
}

} // namespace diffalg
