#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "flagkey/composition.hpp"

namespace flagkey {

/// A permutation of the positive integers fixing all but finitely many points,
/// stored as its one-line word over the smallest window [m] that contains every
/// non-fixed point.
class Permutation {
 public:
  Permutation() = default;
  /// One-line word, 1-based values. Throws unless it is a bijection of [m].
  explicit Permutation(std::vector<int> word);

  static Permutation identity() { return Permutation(); }

  /// w(i), 1-based; fixed outside the stored window.
  int operator()(int i) const;
  /// Window size m (0 for the identity).
  int window() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }
  /// Word padded with fixed points to length m.
  std::vector<int> word(int m) const;

  /// Number of inversions.
  int length() const;

  /// w * t_{i,j}: swaps the values at positions i and j.
  Permutation times_transposition(int i, int j) const;

  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<int> word_;
};

/// All w = u t_{i,j} with i <= k < j and l(w) = l(u) + 1. A positive
/// `universe` restricts j to [universe]; 0 means S_infinity.
std::set<Permutation> k_bruhat_covers(const Permutation& u, int k, int universe = 0);

/// The k-grassmannian permutation v(lam, k) with lam_{k+1-i} = v(i) - i.
Permutation grassmannian_perm(const Composition& lam, int k);

}  // namespace flagkey
