#pragma once

// Exact linear algebra over Lambda: block assembly, fraction-free
// determinants, and the GCD over all k x k minors. Minor determinants are
// independent, so the minors kernel ships in two forms: an OpenMP-parallel
// one and the serial reference it is tested against. Results are
// schedule-independent (gcd is associative and commutative up to units and
// the outcome is unit-normalized).

#include <cstddef>
#include <numeric>
#include <vector>

#include "talex/laurent.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace talex {

template <CoefficientDomain C>
class LambdaMatrix {
public:
    using Poly = LaurentPoly<C>;
    using Ring = typename C::Ring;

    LambdaMatrix(size_t rows, size_t cols, VarsPtr vars, Ring ring)
        : rows_(rows), cols_(cols), vars_(std::move(vars)), ring_(std::move(ring)),
          entries_(rows * cols, Poly(vars_, ring_)) {}

    static LambdaMatrix identity(size_t n, VarsPtr vars, Ring ring) {
        LambdaMatrix m(n, n, std::move(vars), std::move(ring));
        for (size_t i = 0; i < n; ++i)
            m.at(i, i) = Poly::constant(m.vars_, m.ring_, m.ring_.one());
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const VarsPtr& vars() const { return vars_; }
    const Ring& ring() const { return ring_; }

    Poly& at(size_t i, size_t j) { return entries_.at(i * cols_ + j); }
    const Poly& at(size_t i, size_t j) const { return entries_.at(i * cols_ + j); }

    LambdaMatrix operator*(const LambdaMatrix& o) const {
        if (cols_ != o.rows_) throw MismatchError("matrix extent mismatch in product");
        LambdaMatrix r(rows_, o.cols_, vars_, ring_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < o.cols_; ++j) {
                Poly s(vars_, ring_);
                for (size_t k = 0; k < cols_; ++k) s = s + at(i, k) * o.at(k, j);
                r.at(i, j) = std::move(s);
            }
        return r;
    }

    LambdaMatrix operator+(const LambdaMatrix& o) const { return combined(o, +1); }
    LambdaMatrix operator-(const LambdaMatrix& o) const { return combined(o, -1); }

    LambdaMatrix scaled(const Poly& p) const {
        LambdaMatrix r(rows_, cols_, vars_, ring_);
        for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] * p;
        return r;
    }

    LambdaMatrix submatrix(const std::vector<size_t>& rows,
                           const std::vector<size_t>& cols) const {
        LambdaMatrix r(rows.size(), cols.size(), vars_, ring_);
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) r.at(i, j) = at(rows[i], cols[j]);
        return r;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) {
                const Poly& e = at(i, j);
                if (i == j ? !e.is_one() : !e.is_zero()) return false;
            }
        return true;
    }

    bool operator==(const LambdaMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

private:
    size_t rows_, cols_;
    VarsPtr vars_;
    Ring ring_;
    std::vector<Poly> entries_;

    LambdaMatrix combined(const LambdaMatrix& o, int sign) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw MismatchError("matrix extent mismatch in sum");
        LambdaMatrix r(rows_, cols_, vars_, ring_);
        for (size_t i = 0; i < entries_.size(); ++i)
            r.entries_[i] = sign > 0 ? entries_[i] + o.entries_[i] : entries_[i] - o.entries_[i];
        return r;
    }
};

/// Cofactor expansion along the first row. Exponential; the oracle route
/// and the small-extent fast path.
template <CoefficientDomain C>
LaurentPoly<C> determinant_cofactor(const LambdaMatrix<C>& m) {
    if (m.rows() != m.cols()) throw MismatchError("determinant of a non-square matrix");
    size_t n = m.rows();
    if (n == 0) return LaurentPoly<C>::constant(m.vars(), m.ring(), m.ring().one());
    if (n == 1) return m.at(0, 0);
    LaurentPoly<C> det(m.vars(), m.ring());
    std::vector<size_t> all_rows(n - 1);
    std::iota(all_rows.begin(), all_rows.end(), 1);
    for (size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        std::vector<size_t> cols;
        for (size_t k = 0; k < n; ++k)
            if (k != j) cols.push_back(k);
        LaurentPoly<C> term = m.at(0, j) * determinant_cofactor(m.submatrix(all_rows, cols));
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

/// Fraction-free Gaussian elimination (Bareiss). Every division is exact by
/// the Bareiss pivot identity; zero pivots are handled by row swaps with
/// sign tracking, and the determinant is 0 when no nonzero pivot exists.
template <CoefficientDomain C>
LaurentPoly<C> determinant_bareiss(const LambdaMatrix<C>& m) {
    if (m.rows() != m.cols()) throw MismatchError("determinant of a non-square matrix");
    size_t n = m.rows();
    if (n == 0) return LaurentPoly<C>::constant(m.vars(), m.ring(), m.ring().one());
    LambdaMatrix<C> w = m;
    LaurentPoly<C> prev = LaurentPoly<C>::constant(m.vars(), m.ring(), m.ring().one());
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k).is_zero()) {
            size_t r = k + 1;
            while (r < n && w.at(r, k).is_zero()) ++r;
            if (r == n) return LaurentPoly<C>(m.vars(), m.ring());
            for (size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(r, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                auto num = w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j);
                auto q = exact_div(num, prev);
                if (!q) throw ValidationError("Bareiss pivot division failed");
                w.at(i, j) = std::move(*q);
            }
        prev = w.at(k, k);
    }
    LaurentPoly<C> det = w.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

template <CoefficientDomain C>
LaurentPoly<C> determinant(const LambdaMatrix<C>& m) {
    return m.rows() <= 4 ? determinant_cofactor(m) : determinant_bareiss(m);
}

namespace detail {

inline std::vector<std::vector<size_t>> subsets_of_size(size_t n, size_t k) {
    std::vector<std::vector<size_t>> out;
    std::vector<size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    if (k > n) return out;
    while (true) {
        out.push_back(pick);
        size_t i = k;
        bool advanced = false;
        while (i > 0) {
            --i;
            if (pick[i] + (k - i) < n) {
                ++pick[i];
                for (size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return out;
}

} // namespace detail

/// Unit-normalized GCD over all k x k minors, row subsets (and column
/// subsets when k < cols) in lexicographic order. Zero minors follow
/// gcd(p, 0) = p; all-zero minors give 0. Short-circuits once the running
/// GCD is a unit.
template <CoefficientDomain C>
LaurentPoly<C> minors_gcd_serial(const LambdaMatrix<C>& m, size_t k) {
    if (k == 0 || k > std::min(m.rows(), m.cols()))
        throw ValidationError("minor extent out of range");
    auto row_sets = detail::subsets_of_size(m.rows(), k);
    auto col_sets = detail::subsets_of_size(m.cols(), k);
    LaurentPoly<C> g(m.vars(), m.ring());
    for (const auto& rs : row_sets) {
        for (const auto& cs : col_sets) {
            g = gcd(g, determinant(m.submatrix(rs, cs)));
            if (g.is_one()) return g;
        }
    }
    return g.is_zero() ? g : unit_normalize(g).canonical;
}

/// OpenMP version of minors_gcd_serial; identical results on any schedule.
template <CoefficientDomain C>
LaurentPoly<C> minors_gcd(const LambdaMatrix<C>& m, size_t k) {
    if (k == 0 || k > std::min(m.rows(), m.cols()))
        throw ValidationError("minor extent out of range");
    auto row_sets = detail::subsets_of_size(m.rows(), k);
    auto col_sets = detail::subsets_of_size(m.cols(), k);
    const long long total = static_cast<long long>(row_sets.size() * col_sets.size());

    std::vector<LaurentPoly<C>> partial;
    bool unit_found = false;
#ifdef _OPENMP
#pragma omp parallel
    {
#pragma omp single
        partial.assign(static_cast<size_t>(omp_get_num_threads()),
                       LaurentPoly<C>(m.vars(), m.ring()));
        LaurentPoly<C> local(m.vars(), m.ring());
#pragma omp for schedule(dynamic)
        for (long long idx = 0; idx < total; ++idx) {
            bool skip;
#pragma omp atomic read
            skip = unit_found;
            if (skip) continue;
            const auto& rs = row_sets[static_cast<size_t>(idx) / col_sets.size()];
            const auto& cs = col_sets[static_cast<size_t>(idx) % col_sets.size()];
            local = gcd(local, determinant(m.submatrix(rs, cs)));
            if (local.is_one()) {
#pragma omp atomic write
                unit_found = true;
            }
        }
        partial[static_cast<size_t>(omp_get_thread_num())] = std::move(local);
    }
#else
    partial.assign(1, LaurentPoly<C>(m.vars(), m.ring()));
    for (long long idx = 0; idx < total && !unit_found; ++idx) {
        const auto& rs = row_sets[static_cast<size_t>(idx) / col_sets.size()];
        const auto& cs = col_sets[static_cast<size_t>(idx) % col_sets.size()];
        partial[0] = gcd(partial[0], determinant(m.submatrix(rs, cs)));
        if (partial[0].is_one()) unit_found = true;
    }
#endif
    LaurentPoly<C> g(m.vars(), m.ring());
    for (const auto& p : partial) g = gcd(g, p);
    return g.is_zero() ? g : unit_normalize(g).canonical;
}

} // namespace talex
