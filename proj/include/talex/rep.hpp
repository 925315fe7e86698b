#pragma once

// Linear representations gamma of the group and the induced ring
// homomorphism Phi = gamma (x) epsilon from Z[F] to N x N matrices over
// Lambda. Image matrices may carry parameter monomials in their entries but
// never t-variables; the t-grading enters only through Phi.

#include <string>
#include <vector>

#include "talex/matrices.hpp"
#include "talex/presentation.hpp"

namespace talex {

template <CoefficientDomain C>
struct Representation {
    int dimension = 0;
    std::vector<LambdaMatrix<C>> images;   // per generator index
    std::vector<LambdaMatrix<C>> inverses; // cached, same order

    const VarsPtr& vars() const { return images.front().vars(); }
    const typename C::Ring& ring() const { return images.front().ring(); }
};

namespace detail {

/// Adjugate via cofactors; fine at representation dimensions.
template <CoefficientDomain C>
LambdaMatrix<C> adjugate(const LambdaMatrix<C>& m) {
    size_t n = m.rows();
    LambdaMatrix<C> adj(n, n, m.vars(), m.ring());
    if (n == 1) {
        adj.at(0, 0) = LaurentPoly<C>::constant(m.vars(), m.ring(), m.ring().one());
        return adj;
    }
    std::vector<size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<size_t> rs, cs;
            for (size_t k = 0; k < n; ++k) {
                if (k != i) rs.push_back(k);
                if (k != j) cs.push_back(k);
            }
            auto cof = determinant_cofactor(m.submatrix(rs, cs));
            adj.at(j, i) = ((i + j) % 2 == 0) ? cof : -cof; // transpose of cofactors
        }
    return adj;
}

/// A matrix over Lambda is invertible iff its determinant is a unit:
/// one term, unit domain coefficient, monomial only in parameter variables.
template <CoefficientDomain C>
bool det_is_unit(const LaurentPoly<C>& det) {
    if (!det.is_ring_unit()) return false;
    const Exponents& e = det.terms().begin()->first;
    for (size_t v = 0; v < det.vars()->t_count(); ++v)
        if (e[v] != 0) return false;
    return true;
}

} // namespace detail

/// Builds a representation from per-generator image matrices, checking the
/// invariants: square of one dimension, entries free of t-variables, every
/// determinant a unit. Inverses are computed once by adjugate/determinant.
template <CoefficientDomain C>
Representation<C> make_representation(const Alphabet& alphabet, int dimension,
                                      std::vector<LambdaMatrix<C>> images) {
    if (dimension < 1) throw ValidationError("representation dimension must be positive");
    if (static_cast<int>(images.size()) != alphabet.size())
        throw ValidationError("representation must cover every generator");
    size_t n = static_cast<size_t>(dimension);
    Representation<C> rep;
    rep.dimension = dimension;
    for (int g = 0; g < alphabet.size(); ++g) {
        const auto& img = images[static_cast<size_t>(g)];
        if (img.rows() != n || img.cols() != n)
            throw ValidationError("image of " + alphabet.name(g) + " is not " +
                                  std::to_string(dimension) + "x" + std::to_string(dimension));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                const auto& e = img.at(i, j);
                for (const auto& [exps, c] : e.terms())
                    for (size_t v = 0; v < e.vars()->t_count(); ++v)
                        if (exps[v] != 0)
                            throw ValidationError("image of " + alphabet.name(g) +
                                                  " contains a t-variable entry");
            }
        auto det = determinant(img);
        if (det.is_zero() || !detail::det_is_unit(det))
            throw ValidationError("image of " + alphabet.name(g) +
                                  " is not invertible over the coefficient ring (det = " +
                                  render(det) + ")");
        auto adj = detail::adjugate(img);
        LambdaMatrix<C> inv(n, n, img.vars(), img.ring());
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                auto q = exact_div(adj.at(i, j), det);
                if (!q) throw ValidationError("inverse entry division failed");
                inv.at(i, j) = std::move(*q);
            }
        rep.images.push_back(img);
        rep.inverses.push_back(std::move(inv));
    }
    return rep;
}

/// gamma(w): product of image matrices along the word (no t-grading).
template <CoefficientDomain C>
LambdaMatrix<C> rep_of_word(const Representation<C>& rep, const Word& w) {
    size_t n = static_cast<size_t>(rep.dimension);
    LambdaMatrix<C> acc = LambdaMatrix<C>::identity(n, rep.vars(), rep.ring());
    for (const Letter& l : w.letters()) {
        const auto& base = l.exp > 0 ? rep.images[static_cast<size_t>(l.gen)]
                                     : rep.inverses[static_cast<size_t>(l.gen)];
        for (int i = 0, c = std::abs(l.exp); i < c; ++i) acc = acc * base;
    }
    return acc;
}

struct RepReport {
    bool ok = true;
    std::vector<std::string> failures;
};

/// Well-definedness of gamma on G: every relator's image product must be
/// the identity matrix.
template <CoefficientDomain C>
RepReport validate_representation(const AugmentedSystem& sys, const Representation<C>& rep) {
    RepReport report;
    const auto& rels = sys.presentation.relators;
    for (size_t i = 0; i < rels.size(); ++i) {
        LambdaMatrix<C> prod = rep_of_word(rep, rels[i]);
        if (!prod.is_identity()) {
            report.ok = false;
            report.failures.push_back(
                "relator " + std::to_string(i + 1) + " (" +
                talex::to_string(rels[i], *sys.presentation.alphabet) +
                ") does not map to the identity");
        }
    }
    return report;
}

/// The homomorphism Phi: Z[F] -> M_N(Lambda), sending a word w to
/// t^eps(w) * gamma(w) and extending linearly.
template <CoefficientDomain C>
class PhiMap {
public:
    PhiMap(const AugmentedSystem& sys, Representation<C> rep)
        : sys_(&sys), rep_(std::move(rep)) {}

    const AugmentedSystem& system() const { return *sys_; }
    const Representation<C>& rep() const { return rep_; }

    LambdaMatrix<C> of_word(const Word& w) const {
        LambdaMatrix<C> g = rep_of_word(rep_, w);
        auto eps = sys_->epsilon.image_of(w);
        Exponents e(rep_.vars()->size(), 0);
        for (size_t i = 0; i < eps.size(); ++i) e[i] = static_cast<int>(eps[i]);
        auto mono = LaurentPoly<C>::monomial(rep_.vars(), rep_.ring(), e, rep_.ring().one());
        return g.scaled(mono);
    }

    LambdaMatrix<C> of_element(const GroupRingElement& elem) const {
        size_t n = static_cast<size_t>(rep_.dimension);
        LambdaMatrix<C> acc(n, n, rep_.vars(), rep_.ring());
        for (const auto& [w, c] : elem.terms()) {
            auto coeff = LaurentPoly<C>::constant(rep_.vars(), rep_.ring(), rep_.ring().from_int(c));
            acc = acc + of_word(w).scaled(coeff);
        }
        return acc;
    }

private:
    const AugmentedSystem* sys_;
    Representation<C> rep_;
};

} // namespace talex
