#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace flagkey {

/// A weak composition with a declared length n.
///
/// Trailing zeros are insignificant for equality and ordering, so (1,0) == (1).
/// The declared length still matters for reversal and for the number of rows
/// a key diagram spans.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  /// Declared length n.
  std::size_t length() const { return parts_.size(); }
  /// Sum of the parts.
  int total() const;
  /// Index of the last nonzero part plus one.
  std::size_t support_length() const;
  bool is_zero() const { return support_length() == 0; }

  /// 0-based access; indices past the declared length read as zero.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  /// 1-based access, matching the mathematical a_i.
  int part(std::size_t i) const { return (*this)[i - 1]; }

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }

  /// Same parts with declared length n. Throws if a nonzero part would be cut.
  Composition padded(std::size_t n) const;
  /// Declared length equal to the support length.
  Composition stripped() const;

  /// Parts in weakly decreasing order, same declared length.
  Composition sorted() const;
  /// (a_n, ..., a_1) over the declared length.
  Composition reversed() const;
  /// 0^k x a.
  Composition prepend_zeros(std::size_t k) const;

  bool is_partition() const;

  std::string str() const;

  friend bool operator==(const Composition& a, const Composition& b);
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b);

 private:
  std::vector<int> parts_;
};

using Partition = Composition;

/// Result of sort_and_reverse.
struct SortedReversed {
  Composition sorted;
  Composition reversed;
};

SortedReversed sort_and_reverse(const Composition& a);

/// Prefix-sum comparison a ⊴ b.
bool dominance_leq(const Composition& a, const Composition& b);

/// Key poset: a_i <= b_i for all i, and a_i > a_j (i<j) forces b_i > b_j.
bool key_poset_leq(const Composition& a, const Composition& b);

/// Young lattice on partitions: parts compared pointwise.
bool young_leq(const Composition& lam, const Composition& mu);

/// Linear extension of dominance order: compares prefix-sum vectors
/// lexicographically (ties are impossible for distinct compositions).
bool dominance_extension_less(const Composition& a, const Composition& b);

/// All weak compositions of `total` with exactly n parts, in lexicographic order.
std::vector<Composition> compositions(int total, std::size_t n);

/// All partitions of `total` with at most `max_parts` nonzero parts, each padded
/// to length `max_parts`, in reverse lexicographic order.
std::vector<Composition> partitions(int total, std::size_t max_parts);

/// a^J: moves the part at i_m to j_m. Index sets are 1-based and sorted.
Composition relabel(const Composition& a, std::span<const int> from, std::span<const int> to,
                    std::size_t n);

/// 1-based indices of the nonzero parts.
std::vector<int> support(const Composition& a);

/// Parses "1,0,3" (spaces allowed). Empty string gives the empty composition.
Composition parse_composition(const std::string& text);

}  // namespace flagkey
