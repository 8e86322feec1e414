#pragma once

#include "diffalg/error.hpp"
#include "diffalg/numeric.hpp"
#include "diffalg/zmpoly.hpp"

#include <cctype>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace diffalg {

class FieldElem;
class FieldDescriptor;
using FieldPtr = std::shared_ptr<const FieldDescriptor>;

// A computable differential ground field: either Q with the zero derivation,
// or Q(g1,...,gn) with a derivation given on the generators and extended by
// the quotient rule.  Elements are canonical fractions of Z-polynomials.
class FieldDescriptor : public std::enable_shared_from_this<FieldDescriptor> {
public:
    enum class Kind { ConstantRationals, RationalFunctions };

    static FieldPtr rationals() {
        return FieldPtr(new FieldDescriptor(Kind::ConstantRationals, {}, {}));
    }

    // derivation[i] = (num, den) of delta(generators[i])
    static FieldPtr rational_functions(std::vector<std::string> generators,
                                       std::vector<std::pair<ZMPoly, ZMPoly>> derivation,
                                       unsigned num_derivations = 1) {
        if (num_derivations != 1)
            throw InvalidDescriptor("only ordinary differential fields (one derivation) are supported");
        if (generators.empty())
            throw InvalidDescriptor("RationalFunctions requires at least one generator");
        for (size_t i = 0; i < generators.size(); ++i) {
            const std::string& g = generators[i];
            if (g.empty() || !(std::isalpha((unsigned char)g[0]) || g[0] == '_'))
                throw InvalidDescriptor("generator name must be an identifier: '" + g + "'");
            for (char c : g)
                if (!(std::isalnum((unsigned char)c) || c == '_'))
                    throw InvalidDescriptor("generator name must be an identifier: '" + g + "'");
            for (size_t j = i + 1; j < generators.size(); ++j)
                if (generators[i] == generators[j])
                    throw InvalidDescriptor("duplicate generator name '" + g + "'");
        }
        if (derivation.size() != generators.size())
            throw InvalidDescriptor("derivation table must have exactly one entry per generator");
        for (auto& [n, d] : derivation) {
            if (int(generators.size()) != n.nvars() || int(generators.size()) != d.nvars())
                throw InvalidDescriptor("derivation entry has wrong variable count");
            if (d.is_zero()) throw DivisionByZero("derivation entry has zero denominator");
        }
        return FieldPtr(new FieldDescriptor(Kind::RationalFunctions, std::move(generators),
                                            std::move(derivation)));
    }

    Kind kind() const { return kind_; }
    const std::vector<std::string>& generators() const { return generators_; }
    int ngens() const { return int(generators_.size()); }
    bool is_constant_field() const {
        if (kind_ == Kind::ConstantRationals) return true;
        for (auto& [n, d] : derivation_)
            if (!n.is_zero()) return false;
        return true;
    }
    const std::pair<ZMPoly, ZMPoly>& derivation_entry(int i) const { return derivation_.at(i); }

    bool same_as(const FieldDescriptor& o) const {
        if (this == &o) return true;
        return kind_ == o.kind_ && generators_ == o.generators_ && derivation_ == o.derivation_;
    }

    std::string to_string() const {
        if (kind_ == Kind::ConstantRationals) return "Q";
        std::string s = "Q(";
        for (size_t i = 0; i < generators_.size(); ++i) {
            if (i) s += ",";
            s += generators_[i];
        }
        s += ")";
        return s;
    }

private:
    FieldDescriptor(Kind kind, std::vector<std::string> gens,
                    std::vector<std::pair<ZMPoly, ZMPoly>> deriv)
        : kind_(kind), generators_(std::move(gens)), derivation_(std::move(deriv)) {}

    Kind kind_;
    std::vector<std::string> generators_;
    std::vector<std::pair<ZMPoly, ZMPoly>> derivation_;
};

inline void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return;
    if (!a || !b || !a->same_as(*b))
        throw DescriptorMismatch("operands belong to different ground fields");
}

class FieldElem {
public:
    FieldElem() = default;

    static FieldElem zero(FieldPtr f) { return from_rat(std::move(f), Rat(0)); }
    static FieldElem one(FieldPtr f) { return from_rat(std::move(f), Rat(1)); }
    static FieldElem from_rat(FieldPtr f, const Rat& r) {
        int n = f->ngens();
        return FieldElem(std::move(f), ZMPoly::constant(n, numerator(r)),
                         ZMPoly::constant(n, denominator(r)));
    }
    static FieldElem generator(FieldPtr f, int i) {
        int n = f->ngens();
        return FieldElem(std::move(f), ZMPoly::variable(n, i), ZMPoly::constant(n, 1));
    }
    static FieldElem from_fraction(FieldPtr f, ZMPoly num, ZMPoly den) {
        return FieldElem(std::move(f), std::move(num), std::move(den));
    }

    const FieldPtr& field() const { return field_; }
    const ZMPoly& num() const { return num_; }
    const ZMPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    Rat as_rat() const {
        if (!is_rational()) throw Error("NotRational", "field element is not rational");
        return Rat(num_.constant_value(), den_.constant_value());
    }
    // sign of the canonical numerator's leading coefficient
    int sign() const { return num_.is_zero() ? 0 : (num_.leading_coeff() < 0 ? -1 : 1); }

    FieldElem operator-() const { return FieldElem(field_, -num_, den_, false); }
    FieldElem operator+(const FieldElem& o) const {
        require_same_field(field_, o.field_);
        return FieldElem(field_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    FieldElem operator-(const FieldElem& o) const { return *this + (-o); }
    FieldElem operator*(const FieldElem& o) const {
        require_same_field(field_, o.field_);
        return FieldElem(field_, num_ * o.num_, den_ * o.den_);
    }
    FieldElem inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero field element");
        return FieldElem(field_, den_, num_);
    }
    FieldElem operator/(const FieldElem& o) const { return *this * o.inv(); }
    FieldElem pow(unsigned n) const {
        FieldElem r = one(field_), b = *this;
        while (n) {
            if (n & 1) r = r * b;
            b = n > 1 ? b * b : b;
            n >>= 1;
        }
        return r;
    }

    bool operator==(const FieldElem& o) const {
        require_same_field(field_, o.field_);
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }
    bool operator<(const FieldElem& o) const {
        if (num_ != o.num_) return num_ < o.num_;
        return den_ < o.den_;
    }

    FieldElem derive() const {
        if (field_->kind() == FieldDescriptor::Kind::ConstantRationals)
            return zero(field_);
        FieldElem n = poly_elem(num_), d = poly_elem(den_);
        FieldElem dn = derive_poly(num_), dd = derive_poly(den_);
        return (dn * d - n * dd) / (d * d);
    }

    // numerators bounded: max |integer coefficient| across num and den
    Int height() const {
        Int h = 0;
        for (auto& [e, c] : num_.terms()) h = std::max(h, Int(abs(c)));
        for (auto& [e, c] : den_.terms()) h = std::max(h, Int(abs(c)));
        return h;
    }

    std::string to_string() const {
        const auto& names = field_->generators();
        if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string(names);
        return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
    }
    // rendering used inside polynomial terms; parenthesized when composite
    std::string to_string_factor() const {
        const auto& names = field_->generators();
        if (den_.is_constant() && den_.constant_value() == 1) {
            if (num_.terms().size() <= 1) return num_.to_string(names);
            return "(" + num_.to_string(names) + ")";
        }
        if (num_.terms().size() <= 1 && den_.terms().size() <= 1 && den_.is_constant())
            return num_.to_string(names) + "/" + den_.to_string(names);
        return "((" + num_.to_string(names) + ")/(" + den_.to_string(names) + "))";
    }

private:
    FieldElem(FieldPtr f, ZMPoly num, ZMPoly den, bool canonize = true)
        : field_(std::move(f)), num_(std::move(num)), den_(std::move(den)) {
        if (canonize) canonicalize();
    }

    FieldElem poly_elem(const ZMPoly& p) const {
        return FieldElem(field_, p, ZMPoly::constant(field_->ngens(), 1), false);
    }

    FieldElem derive_poly(const ZMPoly& p) const {
        FieldElem acc = zero(field_);
        for (int i = 0; i < field_->ngens(); ++i) {
            ZMPoly dp = p.partial(i);
            if (dp.is_zero()) continue;
            auto& [gn, gd] = field_->derivation_entry(i);
            acc = acc + poly_elem(dp) * FieldElem(field_, gn, gd);
        }
        return acc;
    }

    void canonicalize() {
        if (den_.is_zero()) throw DivisionByZero("zero denominator");
        if (num_.is_zero()) {
            den_ = ZMPoly::constant(field_->ngens(), 1);
            return;
        }
        ZMPoly g = ZMPolyOps::gcd(num_, den_);
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
        if (den_.leading_coeff() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    FieldPtr field_;
    ZMPoly num_, den_;
};

} // namespace diffalg
