#pragma once

// Fox free differential calculus on the free group.

#include "talex/words.hpp"

namespace talex {

/// Fox partial derivative d(w)/d(gen) as an element of Z[F].
///
/// Defining rules, with the left product convention:
///   d(g)/d(g) = 1,  d(h)/d(g) = 0 for h != g,
///   d(g^-1)/d(g) = -g^-1,  d(uv)/d(g) = d(u)/d(g) + u * d(v)/d(g).
GroupRingElement fox_derivative(const Word& w, int gen, const AlphabetPtr& alphabet);

} // namespace talex
