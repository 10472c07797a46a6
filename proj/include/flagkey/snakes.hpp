#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "flagkey/bases.hpp"
#include "flagkey/composition.hpp"
#include "flagkey/fillings.hpp"

namespace flagkey {

/// Same column, or adjacent columns with the left cell weakly higher.
bool weakly_connected(Cell u, Cell v);

/// Number of weakly connected components.
int weak_components(const Diagram& d);

/// Snake conditions: weakly connected, complement a key diagram D(a) with a
/// below b in the key poset, and no triple (c,s),(c+1,s),(c+1,r) with r < s.
/// The empty set counts as a snake.
bool is_snake(const Diagram& s, const Composition& b);

/// A snake that is empty or contains the lowest cell of column 1 of D(b).
bool is_special_snake(const Diagram& s, const Composition& b);

/// Rim hook of mu inside the English diagram D(rev(mu)), rev taken over
/// length n (default mu.length()): connected, complement D(rev(lam)) for a
/// partition lam below mu, and no 2x2 block.
bool rim_hook_check(const Diagram& s, const Composition& mu, std::size_t n = 0);

/// Shape of D(b) \ s, or nullopt when the complement is not left-justified.
std::optional<Composition> residual_shape(const Diagram& s, const Composition& b);

/// All special snakes of D(b): the empty snake first, then the rest ordered
/// by residual shape.
std::vector<Diagram> special_snakes(const Composition& b);

/// Brute-force subset filter, kept for cross-checking.
std::vector<Diagram> special_snakes_by_subsets(const Composition& b);

int height(const Diagram& s);
int sign(const Diagram& s);

struct SnakeTabloid {
  Composition shape;
  std::vector<Diagram> snakes;
  Composition weight;
  int sign = 1;
};

std::vector<SnakeTabloid> enumerate_special_snake_tabloids(const Composition& b);

/// Signed count of tabloids of shape b and weight a.
Integer inverse_ktilde(const Composition& a, const Composition& b);

/// key_b in the basis of ĥ_a.
BasisExpansion expand_key_into_h(const Composition& b);

/// Fillings of D(b) equal to 1 on s and an SSKT (entries in [n]) elsewhere.
std::vector<Filling> gset_enumerate(const Diagram& s, const Composition& b, int n = 0);

/// Ordered pairs (x, y) of cells forming an S-attack in t.
std::vector<std::pair<Cell, Cell>> s_attacks(const Diagram& s, const Filling& t);

/// The sign-reversing involution on pairs (S, T) with T in G(S) not an SSKT.
/// Throws std::invalid_argument outside that set or when b_1 = 0.
std::pair<Diagram, Filling> iota(const Diagram& s, const Filling& t, int n = 0);

/// All (S, T) with S a nonempty special snake of b, T in G(S) and T not an SSKT.
std::vector<std::pair<Diagram, Filling>> enumerate_F(const Composition& b, int n = 0);

}  // namespace flagkey
