#pragma once

// Brute-force discovery of representations over Z/p that kill every
// relator. Candidates are raw tuples of matrices enumerated by row-major
// entry digits in 0..p-1 (first generator most significant); non-invertible
// candidates are skipped by a determinant test. The scan proceeds in
// fixed-size index blocks, so the OpenMP scan and the serial reference
// produce identical hit lists and candidate counts on any schedule.

#include <cstdint>
#include <optional>
#include <vector>

#include "talex/twisted.hpp"
#include "talex/zmod.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace talex {

struct SearchSpec {
    const AugmentedSystem* system = nullptr;
    int dimension = 1;          // N
    std::uint32_t modulus = 2;  // prime p
    std::uint64_t max_solutions = 16;
    std::uint64_t max_candidates = 1'000'000;
    bool require_nonabelian = false;
};

/// Dense little matrix over Z/p.
struct ModMatrix {
    int n = 0;
    std::vector<std::uint32_t> e;

    static ModMatrix identity(int n) {
        ModMatrix m{n, std::vector<std::uint32_t>(static_cast<size_t>(n) * n, 0)};
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::uint32_t& at(int i, int j) { return e[static_cast<size_t>(i) * n + j]; }
    std::uint32_t at(int i, int j) const { return e[static_cast<size_t>(i) * n + j]; }

    bool is_identity() const {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (at(i, j) != (i == j ? 1u : 0u)) return false;
        return true;
    }

    bool operator==(const ModMatrix&) const = default;
};

ModMatrix mod_mul(const ModMatrix& a, const ModMatrix& b, std::uint32_t p);
std::uint32_t mod_det(ModMatrix m, std::uint32_t p);              // Gaussian elimination
std::optional<ModMatrix> mod_inverse(ModMatrix m, std::uint32_t p); // Gauss-Jordan

struct SearchHit {
    std::uint64_t index = 0;       // position in the raw enumeration
    std::vector<ModMatrix> images; // per generator
    bool abelian_image = true;
    std::optional<TwistedResult<Zp>> D;
};

enum class SearchStop { exhausted, candidate_cap, solution_limit };

struct SearchOutcome {
    std::vector<SearchHit> hits;
    std::uint64_t candidates_examined = 0; // whole scanned blocks
    bool exhausted = false;
    SearchStop stop = SearchStop::exhausted;
};

SearchOutcome search(const SearchSpec& spec);        // OpenMP scan
SearchOutcome search_serial(const SearchSpec& spec); // serial reference

/// Independent re-check of a hit: letter-by-letter relator products,
/// cofactor-expansion determinants. Separate code path from the scan.
bool revalidate(const AugmentedSystem& sys, std::uint32_t p, const SearchHit& hit);

/// The hit's representation lifted to matrices over Lambda with Z/p
/// coefficients (for D computation and corpus export).
Representation<Zp> hit_representation(const AugmentedSystem& sys, std::uint32_t p,
                                      const SearchHit& hit);

} // namespace talex
