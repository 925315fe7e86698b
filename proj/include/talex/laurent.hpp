#pragma once

// Multivariate Laurent polynomials over an exact coefficient domain: the
// value ring of every twisted invariant computed here. Variables split into
// epsilon-graded t-variables and invertible parameter variables; both may
// carry negative exponents.

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "talex/coeff.hpp"
#include "talex/errors.hpp"

namespace talex {

/// Fixed, ordered variable universe of one computation: t-variables first,
/// then parameter variables. All names distinct.
struct VariableSet {
    std::vector<std::string> t_names;
    std::vector<std::string> param_names;

    size_t size() const { return t_names.size() + param_names.size(); }
    size_t t_count() const { return t_names.size(); }
    const std::string& name(size_t i) const {
        return i < t_names.size() ? t_names[i] : param_names[i - t_names.size()];
    }
    bool operator==(const VariableSet&) const = default;

    static std::shared_ptr<const VariableSet> make(std::vector<std::string> t,
                                                   std::vector<std::string> params = {});
};

inline std::shared_ptr<const VariableSet> VariableSet::make(std::vector<std::string> t,
                                                            std::vector<std::string> params) {
    auto vs = std::make_shared<VariableSet>();
    vs->t_names = std::move(t);
    vs->param_names = std::move(params);
    std::vector<std::string> all = vs->t_names;
    all.insert(all.end(), vs->param_names.begin(), vs->param_names.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw ValidationError("variable names must be distinct");
    return vs;
}

using VarsPtr = std::shared_ptr<const VariableSet>;
using Exponents = std::vector<int>;

/// Sparse Laurent polynomial. Terms are kept in a map ordered
/// lexicographically on the exponent vector; no zero coefficients stored.
template <CoefficientDomain C>
class LaurentPoly {
public:
    using Ring = typename C::Ring;
    using TermMap = std::map<Exponents, C>;

    LaurentPoly(VarsPtr vars, Ring ring) : vars_(std::move(vars)), ring_(std::move(ring)) {}

    static LaurentPoly constant(VarsPtr vars, Ring ring, C value) {
        LaurentPoly p(std::move(vars), std::move(ring));
        p.add_term(Exponents(p.vars_->size(), 0), std::move(value));
        return p;
    }

    static LaurentPoly monomial(VarsPtr vars, Ring ring, Exponents e, C value) {
        LaurentPoly p(std::move(vars), std::move(ring));
        if (e.size() != p.vars_->size()) throw MismatchError("exponent vector arity mismatch");
        p.add_term(std::move(e), std::move(value));
        return p;
    }

    /// The variable with index `var` (t-variables first).
    static LaurentPoly variable(VarsPtr vars, Ring ring, size_t var, int exp = 1) {
        Exponents e(vars->size(), 0);
        e.at(var) = exp;
        C one = ring.one();
        return monomial(std::move(vars), std::move(ring), std::move(e), std::move(one));
    }

    const VarsPtr& vars() const { return vars_; }
    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    C coeff_at(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? ring_.zero() : it->second;
    }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Exponents(vars_->size(), 0));
    }

    /// Constant coefficient (the all-zero exponent term).
    C constant_coeff() const { return coeff_at(Exponents(vars_->size(), 0)); }

    bool is_single_term() const { return terms_.size() == 1; }

    /// Ring-theoretic unit of Lambda: one term whose coefficient is a unit
    /// of the domain (any monomial part is invertible by construction).
    bool is_ring_unit() const {
        return terms_.size() == 1 && terms_.begin()->second.is_unit();
    }

    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == Exponents(vars_->size(), 0) &&
               terms_.begin()->second == ring_.one();
    }

    LaurentPoly& add_term(const Exponents& e, const C& value) {
        accumulate(e, value);
        return *this;
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        require_compatible(o);
        LaurentPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.accumulate(e, c);
        return r;
    }

    LaurentPoly operator-(const LaurentPoly& o) const {
        require_compatible(o);
        LaurentPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.accumulate(e, -c);
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r(vars_, ring_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    LaurentPoly operator*(const LaurentPoly& o) const {
        require_compatible(o);
        LaurentPoly r(vars_, ring_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                Exponents e = e1;
                for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
                r.accumulate(e, c1 * c2);
            }
        return r;
    }

    LaurentPoly scaled(const C& s) const {
        LaurentPoly r(vars_, ring_);
        for (const auto& [e, c] : terms_) r.accumulate(e, c * s);
        return r;
    }

    /// Multiply by the monomial with exponent vector `shift`.
    LaurentPoly shifted(const Exponents& shift) const {
        LaurentPoly r(vars_, ring_);
        for (const auto& [e, c] : terms_) {
            Exponents ne = e;
            for (size_t i = 0; i < ne.size(); ++i) ne[i] += shift[i];
            r.terms_.emplace(std::move(ne), c);
        }
        return r;
    }

    bool operator==(const LaurentPoly& o) const {
        return *vars_ == *o.vars_ && ring_ == o.ring_ && terms_ == o.terms_;
    }

    int min_exponent(size_t var) const { return extreme_exponent(var, true); }
    int max_exponent(size_t var) const { return extreme_exponent(var, false); }

    /// max exponent minus min exponent of `var` over all terms.
    int span_degree(size_t var) const {
        if (is_zero()) throw ValidationError("span_degree of the zero polynomial");
        return max_exponent(var) - min_exponent(var);
    }

    void accumulate(const Exponents& e, const C& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    VarsPtr vars_;
    Ring ring_;
    TermMap terms_;

    void require_compatible(const LaurentPoly& o) const {
        if (!(*vars_ == *o.vars_)) throw MismatchError("variable set mismatch");
        if (!(ring_ == o.ring_)) throw MismatchError("coefficient ring mismatch");
    }

    int extreme_exponent(size_t var, bool want_min) const {
        if (is_zero()) throw ValidationError("exponent of the zero polynomial");
        bool first = true;
        int best = 0;
        for (const auto& [e, c] : terms_) {
            int v = e[var];
            if (first || (want_min ? v < best : v > best)) best = v;
            first = false;
        }
        return best;
    }
};

template <CoefficientDomain C>
struct UnitNormalForm {
    LaurentPoly<C> canonical; // min exponent 0 in every variable, sign-normal lowest term
    LaurentPoly<C> unit;      // +/- monomial with p = unit * canonical
};

/// Canonical representative of p modulo multiplication by units
/// +/-(monomial): shift every variable's minimal exponent to 0, then flip
/// the sign so the lexicographically smallest term's coefficient is in the
/// domain's unit normal form.
template <CoefficientDomain C>
UnitNormalForm<C> unit_normalize(const LaurentPoly<C>& p) {
    if (p.is_zero()) throw ValidationError("unit_normalize of the zero polynomial");
    size_t nv = p.vars()->size();
    Exponents mins(nv, 0);
    for (size_t v = 0; v < nv; ++v) mins[v] = p.min_exponent(v);
    Exponents neg = mins;
    for (int& e : neg) e = -e;
    LaurentPoly<C> canonical = p.shifted(neg);
    bool flip = canonical.terms().begin()->second.needs_sign_flip();
    if (flip) canonical = -canonical;
    C u = flip ? -p.ring().one() : p.ring().one();
    LaurentPoly<C> unit = LaurentPoly<C>::monomial(p.vars(), p.ring(), mins, u);
    return {std::move(canonical), std::move(unit)};
}

/// Shift so every variable has minimal exponent 0 (a unit multiple).
template <CoefficientDomain C>
LaurentPoly<C> laurent_to_poly(const LaurentPoly<C>& p) {
    if (p.is_zero()) return p;
    Exponents shift(p.vars()->size(), 0);
    for (size_t v = 0; v < shift.size(); ++v) shift[v] = -p.min_exponent(v);
    return p.shifted(shift);
}

/// Exact division in Lambda: returns r with p = q * r, or nullopt when no
/// such Laurent polynomial exists. Throws on zero divisor.
///
/// Works on the monomial-shifted polynomials with all exponents >= 0. Per
/// variable, minimal exponents are additive over products (no zero
/// divisors), so an exact quotient of the shifted polynomials has
/// componentwise nonnegative exponents and its leading term is forced at
/// every step of the elimination.
template <CoefficientDomain C>
std::optional<LaurentPoly<C>> exact_div(const LaurentPoly<C>& p, const LaurentPoly<C>& q) {
    if (q.is_zero()) throw ValidationError("division by the zero polynomial");
    if (p.is_zero()) return p;
    size_t nv = p.vars()->size();
    Exponents back_shift(nv, 0);
    for (size_t v = 0; v < nv; ++v) back_shift[v] = p.min_exponent(v) - q.min_exponent(v);
    LaurentPoly<C> rem = laurent_to_poly(p);
    LaurentPoly<C> den = laurent_to_poly(q);
    LaurentPoly<C> quo(p.vars(), p.ring());
    const auto& qlead = *den.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        Exponents e = rlead.first;
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] -= qlead.first[i];
            if (e[i] < 0) return std::nullopt;
        }
        auto c = rlead.second.try_divide(qlead.second);
        if (!c) return std::nullopt;
        LaurentPoly<C> t = LaurentPoly<C>::monomial(p.vars(), p.ring(), e, *c);
        quo = quo + t;
        rem = rem - t * den;
    }
    return quo.shifted(back_shift);
}

namespace detail {

/// Largest variable index occurring with a nonzero exponent, or -1.
template <CoefficientDomain C>
int top_variable(const LaurentPoly<C>& p) {
    int top = -1;
    for (const auto& [e, c] : p.terms())
        for (size_t v = 0; v < e.size(); ++v)
            if (e[v] != 0) top = std::max(top, static_cast<int>(v));
    return top;
}

template <CoefficientDomain C>
int degree_in(const LaurentPoly<C>& p, size_t var) {
    return p.max_exponent(var);
}

/// Coefficient of var^k, as a polynomial with var-exponent zeroed.
template <CoefficientDomain C>
LaurentPoly<C> coeff_of_power(const LaurentPoly<C>& p, size_t var, int k) {
    LaurentPoly<C> r(p.vars(), p.ring());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] != k) continue;
        Exponents ne = e;
        ne[var] = 0;
        r.accumulate(ne, c);
    }
    return r;
}

template <CoefficientDomain C>
LaurentPoly<C> times_power(const LaurentPoly<C>& p, size_t var, int k) {
    Exponents shift(p.vars()->size(), 0);
    shift[var] = k;
    return p.shifted(shift);
}

template <CoefficientDomain C>
LaurentPoly<C> gcd_nonneg(const LaurentPoly<C>& a, const LaurentPoly<C>& b);

/// Content w.r.t. `var`: gcd of the coefficient polynomials.
template <CoefficientDomain C>
LaurentPoly<C> content_in(const LaurentPoly<C>& p, size_t var) {
    LaurentPoly<C> cont(p.vars(), p.ring());
    for (int k = 0; k <= degree_in(p, var); ++k) {
        LaurentPoly<C> slice = coeff_of_power(p, var, k);
        if (slice.is_zero()) continue;
        cont = cont.is_zero() ? slice : gcd_nonneg(cont, slice);
        if (cont.is_ring_unit()) break;
    }
    return cont;
}

template <CoefficientDomain C>
LaurentPoly<C> primitive_part(const LaurentPoly<C>& p, size_t var) {
    LaurentPoly<C> cont = content_in(p, var);
    auto pp = exact_div(p, cont);
    assert(pp && "content must divide");
    return *pp;
}

/// Pseudo-remainder of a by b in `var` (up to extra leading-coefficient
/// factors, which the primitive PRS strips again).
template <CoefficientDomain C>
LaurentPoly<C> pseudo_rem(const LaurentPoly<C>& a, const LaurentPoly<C>& b, size_t var) {
    int db = degree_in(b, var);
    LaurentPoly<C> lb = coeff_of_power(b, var, db);
    LaurentPoly<C> r = a;
    while (!r.is_zero()) {
        int dr = degree_in(r, var);
        if (dr < db) break;
        LaurentPoly<C> lr = coeff_of_power(r, var, dr);
        r = lb * r - times_power(lr * b, var, dr - db);
    }
    return r;
}

/// Recursive GCD of polynomials with nonnegative exponents: extract content
/// (recursively a GCD), then run a primitive polynomial-remainder sequence
/// on the primitive parts, univariate in the highest occurring variable.
template <CoefficientDomain C>
LaurentPoly<C> gcd_nonneg(const LaurentPoly<C>& a, const LaurentPoly<C>& b) {
    int top = std::max(top_variable(a), top_variable(b));
    if (top < 0) {
        C g = C::gcd(a.constant_coeff(), b.constant_coeff());
        return LaurentPoly<C>::constant(a.vars(), a.ring(), g);
    }
    size_t var = static_cast<size_t>(top);
    LaurentPoly<C> ca = content_in(a, var);
    LaurentPoly<C> cb = content_in(b, var);
    LaurentPoly<C> cont = gcd_nonneg(ca, cb);
    LaurentPoly<C> pa = *exact_div(a, ca);
    LaurentPoly<C> pb = *exact_div(b, cb);
    if (degree_in(pa, var) < degree_in(pb, var)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        LaurentPoly<C> rem = pseudo_rem(pa, pb, var);
        pa = std::move(pb);
        pb = rem.is_zero() ? rem : primitive_part(rem, var);
    }
    return cont * pa;
}

} // namespace detail

/// GCD in Lambda, unit-normalized. gcd(p, 0) = unit_normalize(p); gcd(0, 0) = 0.
template <CoefficientDomain C>
LaurentPoly<C> gcd(const LaurentPoly<C>& a, const LaurentPoly<C>& b) {
    if (a.is_zero() && b.is_zero()) return a;
    if (a.is_zero()) return unit_normalize(b).canonical;
    if (b.is_zero()) return unit_normalize(a).canonical;
    LaurentPoly<C> g = detail::gcd_nonneg(laurent_to_poly(a), laurent_to_poly(b));
    return unit_normalize(g).canonical;
}

/// Canonical rendering: terms in descending term order, `coeff*var^k`
/// factors, unit exponents and coefficients omitted.
template <CoefficientDomain C>
std::string render(const LaurentPoly<C>& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.to_string();
        bool composite = cs.find(' ') != std::string::npos;
        bool negative = !composite && !cs.empty() && cs[0] == '-';
        std::string mag = negative ? cs.substr(1) : cs;
        if (composite) mag = "(" + cs + ")";

        std::string mono;
        for (size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += p.vars()->name(v);
            if (e[v] != 1) mono += '^' + std::to_string(e[v]);
        }

        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;

        if (mono.empty())
            out << mag;
        else if (mag == "1")
            out << mono;
        else
            out << mag << '*' << mono;
    }
    return out.str();
}

} // namespace talex
