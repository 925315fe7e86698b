#pragma once

// The prime field Z/p, used by the finite-field representation search.

#include <cstdint>
#include <optional>
#include <string>

#include "talex/errors.hpp"

namespace talex {

bool is_prime(std::uint32_t n);

/// Element of Z/p for a prime p carried in the value. In a field every
/// nonzero element is a unit; the canonical +/- representative is the one
/// whose residue lies in 0..(p-1)/2.
struct Zp {
    std::uint32_t v = 0;
    std::uint32_t p = 0;

    struct Ring {
        using Element = Zp;
        std::uint32_t p = 0;
        Zp zero() const { return {0, p}; }
        Zp one() const { return {p > 1 ? 1u : 0u, p}; }
        Zp from_int(long long n) const {
            long long m = n % static_cast<long long>(p);
            if (m < 0) m += p;
            return {static_cast<std::uint32_t>(m), p};
        }
        bool operator==(const Ring&) const = default;
        std::string name() const { return "zmod " + std::to_string(p); }
    };

    bool is_zero() const { return v == 0; }
    bool is_unit() const { return v != 0; }
    bool needs_sign_flip() const { return v > (p - 1) / 2; }

    Zp operator+(const Zp& o) const {
        check(o);
        return {(v + o.v) % p, p};
    }
    Zp operator-(const Zp& o) const {
        check(o);
        return {(v + p - o.v) % p, p};
    }
    Zp operator*(const Zp& o) const {
        check(o);
        return {static_cast<std::uint32_t>((std::uint64_t(v) * o.v) % p), p};
    }
    Zp operator-() const { return {v == 0 ? 0 : p - v, p}; }
    bool operator==(const Zp&) const = default;

    Zp inverse() const {
        if (v == 0) throw ValidationError("Zp: inverse of zero");
        // Fermat: p prime.
        std::uint64_t r = 1, b = v, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return {static_cast<std::uint32_t>(r), p};
    }

    std::optional<Zp> try_divide(const Zp& q) const {
        check(q);
        if (q.v == 0) return std::nullopt;
        return *this * q.inverse();
    }

    static Zp gcd(const Zp& a, const Zp& b) {
        return (a.is_zero() && b.is_zero()) ? Zp{0, a.p} : Zp{a.p > 1 ? 1u : 0u, a.p};
    }

    std::string to_string() const { return std::to_string(v); }

private:
    void check(const Zp& o) const {
        if (p == 0 || o.p != p) throw MismatchError("Zp: modulus mismatch");
    }
};

} // namespace talex
