#pragma once

// The cyclotomic field Q(zeta_m): elements are rational vectors in the
// basis 1, z, ..., z^(phi(m)-1), reduced by the m-th cyclotomic polynomial.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "talex/coeff.hpp"
#include "talex/errors.hpp"

namespace talex {

class CycloRing {
public:
    explicit CycloRing(unsigned m);

    unsigned order() const { return m_; }
    unsigned degree() const { return static_cast<unsigned>(phi_.size() - 1); }
    /// Coefficients of the minimal polynomial Phi_m, ascending, monic.
    const std::vector<Int>& minimal_poly() const { return phi_; }

private:
    unsigned m_;
    std::vector<Int> phi_;
};

using CycloRingPtr = std::shared_ptr<const CycloRing>;

struct Cyclo {
    CycloRingPtr field;
    std::vector<Rat> c; // size == field->degree()

    struct Ring {
        using Element = Cyclo;
        CycloRingPtr field;
        Cyclo zero() const;
        Cyclo one() const;
        Cyclo from_int(long long n) const;
        /// The generator zeta_m.
        Cyclo generator() const;
        bool operator==(const Ring& o) const;
        std::string name() const { return "cyclotomic " + std::to_string(field->order()); }
    };

    bool is_zero() const;
    bool is_unit() const { return !is_zero(); } // field
    bool needs_sign_flip() const;               // first nonzero coordinate negative

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator-() const;
    bool operator==(const Cyclo& o) const;

    Cyclo inverse() const; // throws on zero
    std::optional<Cyclo> try_divide(const Cyclo& q) const;

    static Cyclo gcd(const Cyclo& a, const Cyclo& b);

    /// Polynomial in w, descending powers, e.g. "w^2 + 1", "-w - 1", "2".
    std::string to_string() const;
};

} // namespace talex
