#pragma once

#include <map>
#include <set>

#include "flagkey/composition.hpp"
#include "flagkey/permutation.hpp"
#include "flagkey/polynomial.hpp"

namespace flagkey {

/// Coefficients in the Schubert basis; no zero values are stored.
using SchubertExpansion = std::map<Permutation, Integer>;

/// Every w reached from u by a saturated k-Bruhat chain of length m whose
/// transpositions t_{i,j} use pairwise distinct j. Each w appears once.
std::set<Permutation> horizontal_strip_targets(const Permutation& u, int k, int m);

/// e times the Schubert polynomial of v((m), k).
SchubertExpansion pieri_multiply(const SchubertExpansion& e, int m, int k);

/// ĥ_b in the Schubert basis, one Pieri step per part.
SchubertExpansion h_schubert_expansion(const Composition& b);

/// ĥ_a ĥ_b in the Schubert basis by continuing the Pieri chain of a with b.
SchubertExpansion h_product_expansion(const Composition& a, const Composition& b);

/// ∂_i f = (f - s_i f) / (x_i - x_{i+1}).
Polynomial divided_difference(const Polynomial& f, int i);

/// Schubert polynomial of w from the staircase monomial by divided differences.
Polynomial schubert_polynomial(const Permutation& w);

Polynomial to_polynomial(const SchubertExpansion& e);

}  // namespace flagkey
