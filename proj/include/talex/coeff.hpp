#pragma once

// Exact coefficient domains for the Laurent polynomial ring.
//
// A coefficient domain C is a value type modelling a commutative ring with 1
// and no zero divisors. Each domain declares a nested `Ring` descriptor that
// carries whatever runtime context the domain needs (a modulus, a cyclotomic
// order) and can mint constants. The contract, spelled out as a concept below:
//
//   +, -, * (binary), unary -, ==            ring operations
//   is_zero(), is_unit()                      unit = divides 1 in the domain
//   needs_sign_flip()                         canonical choice between a and -a
//   try_divide(b)                             exact division, nullopt if not divisible
//   C::gcd(a, b)                              in unit normal form (UFDs; 0/1 for fields)
//   to_string()                               canonical rendering

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <optional>
#include <string>

namespace talex {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

template <typename C>
concept CoefficientDomain = requires(const C a, const C b, const typename C::Ring r, long long n) {
    { a + b } -> std::same_as<C>;
    { a - b } -> std::same_as<C>;
    { a* b } -> std::same_as<C>;
    { -a } -> std::same_as<C>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_unit() } -> std::convertible_to<bool>;
    { a.needs_sign_flip() } -> std::convertible_to<bool>;
    { a.try_divide(b) } -> std::same_as<std::optional<C>>;
    { C::gcd(a, b) } -> std::same_as<C>;
    { a.to_string() } -> std::same_as<std::string>;
    { r.zero() } -> std::same_as<C>;
    { r.one() } -> std::same_as<C>;
    { r.from_int(n) } -> std::same_as<C>;
    { r == r } -> std::convertible_to<bool>;
};

/// Arbitrary-precision integers.
struct ZZ {
    Int v{};

    struct Ring {
        using Element = ZZ;
        ZZ zero() const { return {}; }
        ZZ one() const { return ZZ{1}; }
        ZZ from_int(long long n) const { return ZZ{Int(n)}; }
        bool operator==(const Ring&) const = default;
        std::string name() const { return "integers"; }
    };

    bool is_zero() const { return v.is_zero(); }
    bool is_unit() const { return v == 1 || v == -1; }
    bool needs_sign_flip() const { return v < 0; }

    ZZ operator+(const ZZ& o) const { return ZZ{v + o.v}; }
    ZZ operator-(const ZZ& o) const { return ZZ{v - o.v}; }
    ZZ operator*(const ZZ& o) const { return ZZ{v * o.v}; }
    ZZ operator-() const { return ZZ{-v}; }
    bool operator==(const ZZ&) const = default;

    std::optional<ZZ> try_divide(const ZZ& q) const {
        if (q.v.is_zero()) return std::nullopt;
        Int quo = v / q.v;
        if (quo * q.v != v) return std::nullopt;
        return ZZ{quo};
    }

    static ZZ gcd(const ZZ& a, const ZZ& b) { return ZZ{boost::multiprecision::gcd(a.v, b.v)}; }

    std::string to_string() const { return v.str(); }
};

/// Rationals. A field: gcd degenerates to the 0/1 convention.
struct QQ {
    Rat v{};

    struct Ring {
        using Element = QQ;
        QQ zero() const { return {}; }
        QQ one() const { return QQ{1}; }
        QQ from_int(long long n) const { return QQ{Rat(n)}; }
        bool operator==(const Ring&) const = default;
        std::string name() const { return "rationals"; }
    };

    bool is_zero() const { return v.is_zero(); }
    bool is_unit() const { return !v.is_zero(); }
    bool needs_sign_flip() const { return v < 0; }

    QQ operator+(const QQ& o) const { return QQ{v + o.v}; }
    QQ operator-(const QQ& o) const { return QQ{v - o.v}; }
    QQ operator*(const QQ& o) const { return QQ{v * o.v}; }
    QQ operator-() const { return QQ{-v}; }
    bool operator==(const QQ&) const = default;

    std::optional<QQ> try_divide(const QQ& q) const {
        if (q.v.is_zero()) return std::nullopt;
        return QQ{v / q.v};
    }

    static QQ gcd(const QQ& a, const QQ& b) {
        return (a.is_zero() && b.is_zero()) ? QQ{} : QQ{1};
    }

    std::string to_string() const { return v.str(); }
};

} // namespace talex
