#pragma once

#include "diffalg/error.hpp"
#include "diffalg/numeric.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace diffalg {

// Sparse multivariate polynomials over Z, used as numerators/denominators of
// ground-field elements.  The variable count is fixed per polynomial; terms
// are kept in graded-lex order with the leading term first.

using Expvec = std::vector<unsigned>;

struct GrlexGreater {
    bool operator()(const Expvec& a, const Expvec& b) const {
        unsigned da = 0, db = 0;
        for (unsigned e : a) da += e;
        for (unsigned e : b) db += e;
        if (da != db) return da > db;
        return a > b; // lex with earlier variables more significant
    }
};

class ZMPoly {
public:
    using Terms = std::map<Expvec, Int, GrlexGreater>;

    ZMPoly() : nvars_(0) {}
    explicit ZMPoly(int nvars) : nvars_(nvars) {}

    static ZMPoly constant(int nvars, Int c) {
        ZMPoly p(nvars);
        if (c != 0) p.terms_[Expvec(nvars, 0)] = std::move(c);
        return p;
    }
    static ZMPoly variable(int nvars, int idx, unsigned exp = 1) {
        ZMPoly p(nvars);
        Expvec e(nvars, 0);
        e.at(idx) = exp;
        p.terms_[e] = 1;
        return p;
    }

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        for (unsigned e : terms_.begin()->first)
            if (e) return false;
        return true;
    }
    // constant value; only meaningful when is_constant()
    Int constant_value() const { return terms_.empty() ? Int(0) : terms_.begin()->second; }

    bool operator==(const ZMPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const ZMPoly& o) const { return !(*this == o); }
    bool operator<(const ZMPoly& o) const {
        if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
        return std::lexicographical_compare(
            terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
            [](const auto& x, const auto& y) {
                if (x.first != y.first) return GrlexGreater{}(x.first, y.first);
                return x.second < y.second;
            });
    }

    int degree(int var) const {
        int d = -1;
        for (auto& [e, c] : terms_) d = std::max(d, int(e[var]));
        return d;
    }
    int total_degree() const {
        int d = -1;
        for (auto& [e, c] : terms_) {
            int s = 0;
            for (unsigned x : e) s += int(x);
            d = std::max(d, s);
        }
        return d;
    }
    bool uses(int var) const { return degree(var) > 0; }
    int max_used_var() const {
        int m = -1;
        for (auto& [e, c] : terms_)
            for (int i = 0; i < nvars_; ++i)
                if (e[i]) m = std::max(m, i);
        return m;
    }

    const Int& leading_coeff() const {
        static const Int zero{0};
        return terms_.empty() ? zero : terms_.begin()->second;
    }

    ZMPoly operator-() const {
        ZMPoly r(nvars_);
        for (auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    ZMPoly operator+(const ZMPoly& o) const {
        check(o);
        ZMPoly r = *this;
        for (auto& [e, c] : o.terms_) {
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_[e] = c;
            } else {
                it->second += c;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
        return r;
    }
    ZMPoly operator-(const ZMPoly& o) const { return *this + (-o); }
    ZMPoly operator*(const ZMPoly& o) const {
        check(o);
        ZMPoly r(nvars_);
        for (auto& [ea, ca] : terms_) {
            for (auto& [eb, cb] : o.terms_) {
                Expvec e(nvars_);
                for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
                auto it = r.terms_.find(e);
                if (it == r.terms_.end()) {
                    Int v = ca * cb;
                    if (v != 0) r.terms_[e] = std::move(v);
                } else {
                    it->second += ca * cb;
                    if (it->second == 0) r.terms_.erase(it);
                }
            }
        }
        return r;
    }
    ZMPoly operator*(const Int& c) const {
        ZMPoly r(nvars_);
        if (c == 0) return r;
        for (auto& [e, k] : terms_) r.terms_[e] = k * c;
        return r;
    }
    ZMPoly pow(unsigned n) const {
        ZMPoly r = constant(nvars_, 1), b = *this;
        while (n) {
            if (n & 1) r = r * b;
            b = n > 1 ? b * b : b;
            n >>= 1;
        }
        return r;
    }

    ZMPoly partial(int var) const {
        ZMPoly r(nvars_);
        for (auto& [e, c] : terms_) {
            if (!e[var]) continue;
            Expvec d = e;
            d[var]--;
            r.terms_[d] = c * Int(e[var]);
        }
        return r;
    }

    Int int_content() const {
        Int g = 0;
        for (auto& [e, c] : terms_) g = int_gcd(g, c);
        return g;
    }

    // exact division; nullopt when not divisible
    std::optional<ZMPoly> try_divide(const ZMPoly& d) const {
        check(d);
        if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
        ZMPoly q(nvars_), r = *this;
        const auto& [de, dc] = *d.terms_.begin();
        while (!r.is_zero()) {
            const auto& [re, rc] = *r.terms_.begin();
            Expvec e(nvars_);
            for (int i = 0; i < nvars_; ++i) {
                if (re[i] < de[i]) return std::nullopt;
                e[i] = re[i] - de[i];
            }
            if (rc % dc != 0) return std::nullopt;
            ZMPoly t(nvars_);
            t.terms_[e] = rc / dc;
            q = q + t;
            r = r - t * d;
        }
        return q;
    }
    ZMPoly divexact(const ZMPoly& d) const {
        auto q = try_divide(d);
        if (!q) throw DivisionByZero("inexact polynomial division");
        return *q;
    }

    std::string to_string(const std::vector<std::string>& names) const;

private:
    void check(const ZMPoly& o) const {
        if (nvars_ != o.nvars_) throw RingMismatch("ZMPoly variable count mismatch");
    }

    int nvars_;
    Terms terms_;

    friend class ZMPolyOps;
};

// Univariate-in-one-variable helpers and multivariate gcd.
class ZMPolyOps {
public:
    static ZMPoly coeff_of(const ZMPoly& p, int var, unsigned k) {
        ZMPoly r(p.nvars_);
        for (auto& [e, c] : p.terms_) {
            if (e[var] != k) continue;
            Expvec d = e;
            d[var] = 0;
            r.terms_[d] = c;
        }
        return r;
    }

    static ZMPoly lead_coeff_in(const ZMPoly& p, int var) {
        return coeff_of(p, var, unsigned(std::max(0, p.degree(var))));
    }

    // pseudo-remainder of f by g in the variable var (deg_var(g) >= 1)
    static ZMPoly prem(ZMPoly f, const ZMPoly& g, int var) {
        int dg = g.degree(var);
        ZMPoly lg = lead_coeff_in(g, var);
        while (!f.is_zero() && f.degree(var) >= dg) {
            int df = f.degree(var);
            ZMPoly lf = lead_coeff_in(f, var);
            ZMPoly shift = ZMPoly::variable(f.nvars(), var, unsigned(df - dg));
            f = lg * f - lf * shift * g;
        }
        return f;
    }

    static ZMPoly content_in(const ZMPoly& p, int var) {
        ZMPoly g(p.nvars());
        for (int k = 0; k <= std::max(0, p.degree(var)); ++k) {
            ZMPoly c = coeff_of(p, var, unsigned(k));
            if (!c.is_zero()) g = gcd(g, c);
        }
        return g;
    }

    // gcd with positive leading coefficient; includes integer content
    static ZMPoly gcd(const ZMPoly& a, const ZMPoly& b) {
        if (a.is_zero()) return normalize(b);
        if (b.is_zero()) return normalize(a);
        int va = a.max_used_var(), vb = b.max_used_var();
        if (va < 0 && vb < 0)
            return ZMPoly::constant(a.nvars(), int_gcd(a.constant_value(), b.constant_value()));
        int v = std::max(va, vb);
        if (a.degree(v) == 0) return gcd(a, content_in(b, v));
        if (b.degree(v) == 0) return gcd(content_in(a, v), b);

        ZMPoly ca = content_in(a, v), cb = content_in(b, v);
        ZMPoly c = gcd(ca, cb);
        ZMPoly f = a.divexact(ca), g = b.divexact(cb);
        if (f.degree(v) < g.degree(v)) std::swap(f, g);
        while (true) {
            ZMPoly r = prem(f, g, v);
            if (r.is_zero()) return normalize(c * g.divexact(content_in(g, v)));
            if (r.degree(v) == 0) return normalize(c);
            f = g;
            g = r.divexact(content_in(r, v));
        }
    }

    static ZMPoly normalize(ZMPoly p) {
        if (!p.is_zero() && p.leading_coeff() < 0) return -p;
        return p;
    }
};

inline std::string ZMPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [e, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += names.at(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += a.str();
        } else {
            if (a != 1) out += a.str() + "*";
            out += mono;
        }
    }
    return out;
}

} // namespace diffalg
