#include "talex/cyclotomic.hpp"

#include <sstream>

namespace talex {

namespace {

// Dense ascending-coefficient polynomials over Int / Rat, local helpers.

std::vector<Int> x_pow_minus_one(unsigned n) {
    std::vector<Int> p(n + 1, Int(0));
    p[0] = -1;
    p[n] = 1;
    return p;
}

// Exact division by a monic divisor.
std::vector<Int> divide_monic(std::vector<Int> num, const std::vector<Int>& den) {
    std::vector<Int> quo(num.size() - den.size() + 1, Int(0));
    for (size_t k = quo.size(); k-- > 0;) {
        Int c = num[k + den.size() - 1];
        quo[k] = c;
        if (c.is_zero()) continue;
        for (size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    return quo;
}

std::vector<Int> cyclotomic_poly(unsigned m) {
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d.
    std::vector<Int> p = x_pow_minus_one(m);
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0) p = divide_monic(std::move(p), cyclotomic_poly(d));
    return p;
}

// Remainder of a rational polynomial modulo the monic Phi (ascending coeffs).
void reduce_mod(std::vector<Rat>& a, const std::vector<Int>& phi) {
    size_t deg = phi.size() - 1;
    for (size_t k = a.size(); k-- > deg;) {
        Rat c = a[k];
        if (c.is_zero()) continue;
        a[k] = 0;
        for (size_t j = 0; j < deg; ++j) a[k - deg + j] -= c * Rat(phi[j]);
    }
    a.resize(deg);
}

size_t rat_degree(const std::vector<Rat>& a) {
    size_t d = a.size();
    while (d > 0 && a[d - 1].is_zero()) --d;
    return d; // number of coefficients up to the leading one; 0 for the zero poly
}

} // namespace

CycloRing::CycloRing(unsigned m) : m_(m) {
    if (m == 0) throw ValidationError("cyclotomic order must be positive");
    phi_ = cyclotomic_poly(m);
}

bool Cyclo::Ring::operator==(const Ring& o) const { return field->order() == o.field->order(); }

Cyclo Cyclo::Ring::zero() const { return {field, std::vector<Rat>(field->degree(), Rat(0))}; }

Cyclo Cyclo::Ring::one() const { return from_int(1); }

Cyclo Cyclo::Ring::from_int(long long n) const {
    Cyclo z = zero();
    std::vector<Rat> a(1, Rat(n));
    a.resize(std::max<size_t>(field->degree(), 1), Rat(0));
    reduce_mod(a, field->minimal_poly());
    z.c = std::move(a);
    return z;
}

Cyclo Cyclo::Ring::generator() const {
    std::vector<Rat> a(field->degree() + 1, Rat(0));
    a[1] = 1;
    reduce_mod(a, field->minimal_poly());
    return {field, std::move(a)};
}

bool Cyclo::is_zero() const {
    for (const Rat& x : c)
        if (!x.is_zero()) return false;
    return true;
}

bool Cyclo::needs_sign_flip() const {
    for (const Rat& x : c) {
        if (x.is_zero()) continue;
        return x < 0;
    }
    return false;
}

namespace {
void check_same(const Cyclo& a, const Cyclo& b) {
    if (!a.field || !b.field || a.field->order() != b.field->order())
        throw MismatchError("cyclotomic order mismatch");
}
} // namespace

Cyclo Cyclo::operator+(const Cyclo& o) const {
    check_same(*this, o);
    Cyclo r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
    check_same(*this, o);
    Cyclo r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (Rat& x : r.c) x = -x;
    return r;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
    check_same(*this, o);
    std::vector<Rat> conv(2 * c.size(), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        for (size_t j = 0; j < o.c.size(); ++j) conv[i + j] += c[i] * o.c[j];
    }
    reduce_mod(conv, field->minimal_poly());
    return {field, std::move(conv)};
}

bool Cyclo::operator==(const Cyclo& o) const {
    return field->order() == o.field->order() && c == o.c;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw ValidationError("cyclotomic inverse of zero");
    // Extended Euclid in Q[x] against the (irreducible) minimal polynomial:
    // maintain r = s * this (mod Phi); when deg r = 0, inverse = s / r.
    const auto& phi = field->minimal_poly();
    std::vector<Rat> r0(phi.begin(), phi.end());
    std::vector<Rat> r1 = c;
    r1.resize(std::max(rat_degree(r1), size_t{1}));
    std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};
    while (true) {
        size_t d1 = rat_degree(r1);
        if (d1 == 0) throw ValidationError("cyclotomic inverse: unexpected zero remainder");
        if (d1 == 1) break; // r1 is a nonzero constant
        size_t d0 = rat_degree(r0);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(s0, s1);
            continue;
        }
        // r0 -= (lead r0 / lead r1) x^(d0-d1) * r1, same on s
        Rat q = r0[d0 - 1] / r1[d1 - 1];
        size_t shift = d0 - d1;
        if (s0.size() < s1.size() + shift) s0.resize(s1.size() + shift, Rat(0));
        for (size_t j = 0; j < d1; ++j) r0[j + shift] -= q * r1[j];
        for (size_t j = 0; j < s1.size(); ++j) s0[j + shift] -= q * s1[j];
    }
    Rat lead = r1[0];
    std::vector<Rat> inv = s1;
    for (Rat& x : inv) x /= lead;
    inv.resize(std::max<size_t>(2 * field->degree(), inv.size()), Rat(0));
    reduce_mod(inv, phi);
    return {field, std::move(inv)};
}

std::optional<Cyclo> Cyclo::try_divide(const Cyclo& q) const {
    check_same(*this, q);
    if (q.is_zero()) return std::nullopt;
    return *this * q.inverse();
}

Cyclo Cyclo::gcd(const Cyclo& a, const Cyclo& b) {
    Ring r{a.field};
    return (a.is_zero() && b.is_zero()) ? r.zero() : r.one();
}

std::string Cyclo::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t k = c.size(); k-- > 0;) {
        const Rat& x = c[k];
        if (x.is_zero()) continue;
        Rat mag = x < 0 ? Rat(-x) : x;
        if (first) {
            if (x < 0) out << '-';
        } else {
            out << (x < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            out << mag.str();
        } else {
            if (mag != 1) out << mag.str() << '*';
            out << 'w';
            if (k > 1) out << '^' << k;
        }
    }
    return out.str();
}

} // namespace talex
