#pragma once

// Finitely presented groups and augmented group systems: a presentation,
// an epimorphism to Z^d, and a distinguished generator with nontrivial image.

#include <string>
#include <vector>

#include "talex/words.hpp"

namespace talex {

struct Presentation {
    AlphabetPtr alphabet;
    std::vector<Word> relators; // stored freely reduced

    int generator_count() const { return alphabet->size(); }
    int relator_count() const { return static_cast<int>(relators.size()); }
};

/// Homomorphism eps: F -> Z^d given on generators; extends to the group
/// exactly when every relator's exponent-weighted image sums to zero.
struct EpsilonMap {
    int d = 1;
    std::vector<std::vector<long long>> images; // per generator, each of length d

    std::vector<long long> image_of(const Word& w) const;
};

struct EpsilonReport {
    std::vector<std::vector<long long>> relator_images;
    bool homomorphism = false; // all relator images zero
    bool surjective = false;   // generator images span Z^d with index 1
    std::vector<std::string> notes;

    bool ok() const { return homomorphism; }
};

/// Per-relator exponent-sum vectors plus a surjectivity check on the image
/// lattice (gcd of the d x d minors of the image matrix).
EpsilonReport validate_epsilon(const Presentation& p, const EpsilonMap& e);

struct AugmentedSystem {
    Presentation presentation;
    EpsilonMap epsilon;
    int distinguished = 0; // generator index of x

    int n() const { return presentation.generator_count() - 1; }
    int m() const { return presentation.relator_count(); }
    /// All generators except the distinguished one, declaration order.
    std::vector<int> working_generators() const;
};

/// Builds the system, enforcing its invariants:
/// x declared, eps(x) nonzero, eps a homomorphism, m >= n.
AugmentedSystem make_system(Presentation p, EpsilonMap e, int distinguished);

} // namespace talex
