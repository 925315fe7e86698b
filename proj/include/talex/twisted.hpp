#pragma once

// The invariant pipeline: assemble the Fox-Jacobian image matrix, take the
// GCD of its maximal minors (the Alexander-Lin polynomial), form Wada's
// quotient, and evaluate the fibering obstruction on the result.

#include <optional>
#include <string>
#include <vector>

#include "talex/fox.hpp"
#include "talex/rep.hpp"

namespace talex {

/// Block (i, j) = Phi(d r_i / d x_j) over relators r_1..r_m (rows) and the
/// non-distinguished generators (columns), flattened to mN x nN.
template <CoefficientDomain C>
LambdaMatrix<C> build_matrix(const AugmentedSystem& sys, const Representation<C>& rep) {
    const auto& alphabet = sys.presentation.alphabet;
    std::vector<int> cols = sys.working_generators();
    size_t N = static_cast<size_t>(rep.dimension);
    LambdaMatrix<C> m(static_cast<size_t>(sys.m()) * N, cols.size() * N, rep.vars(), rep.ring());
    PhiMap<C> phi(sys, rep);
    for (size_t i = 0; i < sys.presentation.relators.size(); ++i) {
        for (size_t j = 0; j < cols.size(); ++j) {
            GroupRingElement d = fox_derivative(sys.presentation.relators[i], cols[j], alphabet);
            LambdaMatrix<C> block = phi.of_element(d);
            for (size_t bi = 0; bi < N; ++bi)
                for (size_t bj = 0; bj < N; ++bj)
                    m.at(i * N + bi, j * N + bj) = block.at(bi, bj);
        }
    }
    return m;
}

inline constexpr const char* kUnitAmbiguityNote =
    "canonical representative; defined up to units +/- t^k (and parameter monomials)";

template <CoefficientDomain C>
struct TwistedResult {
    LaurentPoly<C> D; // canonical (unit-normalized); 0 when all minors vanish
    std::string unit_note = kUnitAmbiguityNote;
    int n = 0, m = 0, N = 0;
    LambdaMatrix<C> matrix; // retained for reporting
};

/// D_gamma: the GCD of all nN x nN minors of the Fox-Jacobian image.
template <CoefficientDomain C>
TwistedResult<C> alexander_lin(const AugmentedSystem& sys, const Representation<C>& rep) {
    if (sys.n() < 1)
        throw ValidationError("no working generators: the distinguished generator is alone");
    if (sys.m() < sys.n()) throw ValidationError("fewer relators than working generators");
    LambdaMatrix<C> m = build_matrix(sys, rep);
    size_t k = m.cols();
    LaurentPoly<C> d = minors_gcd(m, k);
    return TwistedResult<C>{std::move(d), kUnitAmbiguityNote, sys.n(), sys.m(), rep.dimension,
                            std::move(m)};
}

template <CoefficientDomain C>
struct WadaResult {
    LaurentPoly<C> numerator;
    LaurentPoly<C> denominator;
    bool denominator_zero = false;
    bool is_polynomial = false; // reduced denominator is a unit of Lambda
    std::optional<std::string> value_if_unit;
};

/// Wada's invariant W = D / det(I - Phi(x)), returned as a reduced fraction
/// with numerator and denominator coprime and unit-normalized.
template <CoefficientDomain C>
WadaResult<C> wada(const AugmentedSystem& sys, const Representation<C>& rep,
                   const TwistedResult<C>& res) {
    PhiMap<C> phi(sys, rep);
    size_t N = static_cast<size_t>(rep.dimension);
    auto ident = LambdaMatrix<C>::identity(N, rep.vars(), rep.ring());
    auto den = determinant(ident - phi.of_word(Word::generator(sys.distinguished)));

    WadaResult<C> w;
    auto one = LaurentPoly<C>::constant(rep.vars(), rep.ring(), rep.ring().one());
    if (den.is_zero()) {
        w.denominator_zero = true;
        w.numerator = res.D;
        w.denominator = den;
        return w;
    }
    if (res.D.is_zero()) {
        w.numerator = res.D;
        w.denominator = one;
        w.is_polynomial = true;
        return w;
    }
    auto g = gcd(res.D, den);
    auto num = exact_div(res.D, g);
    auto dnm = exact_div(den, g);
    w.numerator = unit_normalize(*num).canonical;
    w.denominator = unit_normalize(*dnm).canonical;
    w.is_polynomial = w.denominator.is_ring_unit();
    if (w.numerator.is_ring_unit() && w.denominator.is_ring_unit()) {
        auto q = exact_div(w.numerator, w.denominator);
        w.value_if_unit = render(*q);
    }
    return w;
}

template <CoefficientDomain C>
WadaResult<C> wada(const AugmentedSystem& sys, const Representation<C>& rep) {
    return wada(sys, rep, alexander_lin(sys, rep));
}

struct ObstructionReport {
    int expected_degree = 0; // nN for the supplied kernel rank n
    int actual_span = 0;
    std::string leading_coeff;
    std::string trailing_coeff;
    bool degree_ok = false;
    bool leading_unit = false;
    bool trailing_unit = false;
    bool pass = false;
    std::vector<std::string> reasons; // empty when pass
};

namespace detail {

/// The coefficient of the extreme power of t: a parameter polynomial.
template <CoefficientDomain C>
LaurentPoly<C> t_slice(const LaurentPoly<C>& p, bool leading) {
    int e = leading ? p.max_exponent(0) : p.min_exponent(0);
    LaurentPoly<C> s(p.vars(), p.ring());
    for (const auto& [exps, c] : p.terms()) {
        if (exps[0] != e) continue;
        Exponents ne = exps;
        ne[0] = 0;
        s.accumulate(ne, c);
    }
    return s;
}

} // namespace detail

/// Necessary conditions for ker(eps) to be a finitely generated free group
/// of rank n (d = 1): span of D equals nN and both extreme t-coefficients
/// are units. Failure certifies that the kernel is not free of that rank.
template <CoefficientDomain C>
ObstructionReport fiber_check(const TwistedResult<C>& res, int kernel_rank) {
    const LaurentPoly<C>& D = res.D;
    if (D.is_zero()) throw ValidationError("fiber check on the zero polynomial");
    if (D.vars()->t_count() != 1)
        throw ValidationError("fiber check requires a rank-1 epsilon (d = 1)");

    ObstructionReport rep;
    rep.expected_degree = kernel_rank * res.N;
    rep.actual_span = D.span_degree(0);
    rep.degree_ok = rep.actual_span == rep.expected_degree;

    auto lead = detail::t_slice(D, true);
    auto trail = detail::t_slice(D, false);
    rep.leading_coeff = render(lead);
    rep.trailing_coeff = render(trail);
    rep.leading_unit = lead.is_ring_unit();
    rep.trailing_unit = trail.is_ring_unit();

    if (!rep.degree_ok)
        rep.reasons.push_back("degree span " + std::to_string(rep.actual_span) +
                              " differs from expected " + std::to_string(rep.expected_degree));
    if (!rep.leading_unit)
        rep.reasons.push_back("leading coefficient " + rep.leading_coeff + " is not a unit");
    if (!rep.trailing_unit)
        rep.reasons.push_back("trailing coefficient " + rep.trailing_coeff + " is not a unit");
    rep.pass = rep.reasons.empty();
    return rep;
}

template <CoefficientDomain C>
struct DivisionVerdict {
    bool divides = false;
    std::optional<LaurentPoly<C>> quotient;
};

/// Exact divisibility in Lambda (units absorb monomial shifts).
template <CoefficientDomain C>
DivisionVerdict<C> divides(const LaurentPoly<C>& divisor, const LaurentPoly<C>& target) {
    if (divisor.is_zero()) throw ValidationError("divisibility by the zero polynomial");
    auto q = exact_div(target, divisor);
    return {q.has_value(), std::move(q)};
}

} // namespace talex
