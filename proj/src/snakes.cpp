#include "flagkey/snakes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace flagkey {

namespace {

int components(const Diagram& d, bool (*joined)(Cell, Cell)) {
  const auto& cells = d.cells();
  std::vector<std::size_t> parent(cells.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  int count = static_cast<int>(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j)
      if (joined(cells[i], cells[j])) {
        auto a = find(i), b = find(j);
        if (a != b) {
          parent[a] = b;
          --count;
        }
      }
  return count;
}

bool adjacent(Cell u, Cell v) {
  return std::abs(u.col - v.col) + std::abs(u.row - v.row) == 1;
}

bool has_forbidden_triple(const Diagram& s) {
  for (Cell u : s) {
    if (!s.contains({u.col + 1, u.row})) continue;
    for (int r = 1; r < u.row; ++r)
      if (s.contains({u.col + 1, r})) return true;
  }
  return false;
}

int lowest_nonzero_row(const Composition& b) {
  for (std::size_t i = 0; i < b.length(); ++i)
    if (b[i] > 0) return static_cast<int>(i) + 1;
  return 0;
}

Diagram difference(const Composition& b, const Composition& a) {
  Diagram s;
  for (std::size_t i = 0; i < b.length(); ++i)
    for (int c = a[i] + 1; c <= b[i]; ++c) s.insert({c, static_cast<int>(i) + 1});
  return s;
}

// Visits every a <= b entrywise with a_anchor = 0, in lexicographic order.
template <class F>
void for_each_residual(const Composition& b, int anchor, F&& f) {
  std::vector<int> a(b.length(), 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == a.size()) {
      f(Composition(a));
      return;
    }
    int hi = static_cast<int>(i) + 1 == anchor ? 0 : b[i];
    for (int v = 0; v <= hi; ++v) {
      a[i] = v;
      self(self, i + 1);
    }
    a[i] = 0;
  };
  rec(rec, 0);
}

bool snake_with_residual(const Diagram& s, const Composition& a, const Composition& b) {
  return key_poset_leq(a, b) && !has_forbidden_triple(s) &&
         (s.empty() || weak_components(s) == 1);
}

void tabloids_from(std::size_t i, const Composition& residual, SnakeTabloid& partial,
                   std::vector<SnakeTabloid>& out) {
  if (i == residual.length()) {
    out.push_back(partial);
    return;
  }
  if (residual[i] == 0) {
    partial.snakes.emplace_back();
    tabloids_from(i + 1, residual, partial, out);
    partial.snakes.pop_back();
    return;
  }
  for (const Diagram& s : special_snakes(residual)) {
    if (s.empty()) continue;
    auto next = residual_shape(s, residual);
    partial.snakes.push_back(s);
    tabloids_from(i + 1, *next, partial, out);
    partial.snakes.pop_back();
  }
}

}  // namespace

bool weakly_connected(Cell u, Cell v) {
  if (u.col == v.col) return true;
  if (u.col + 1 == v.col) return u.row >= v.row;
  if (v.col + 1 == u.col) return v.row >= u.row;
  return false;
}

int weak_components(const Diagram& d) { return components(d, weakly_connected); }

std::optional<Composition> residual_shape(const Diagram& s, const Composition& b) {
  std::vector<int> a = b.vec();
  for (Cell u : s) {
    if (u.row < 1 || u.row > static_cast<int>(b.length()) || u.col < 1 || u.col > b[u.row - 1])
      return std::nullopt;
    --a[u.row - 1];
  }
  for (Cell u : s)
    if (u.col <= a[u.row - 1]) return std::nullopt;
  return Composition(std::move(a));
}

bool is_snake(const Diagram& s, const Composition& b) {
  auto a = residual_shape(s, b);
  return a && snake_with_residual(s, *a, b);
}

bool is_special_snake(const Diagram& s, const Composition& b) {
  if (!is_snake(s, b)) return false;
  int anchor = lowest_nonzero_row(b);
  return s.empty() || (anchor > 0 && s.contains({1, anchor}));
}

bool rim_hook_check(const Diagram& s, const Composition& mu, std::size_t n) {
  if (n == 0) n = mu.length();
  Composition outer = mu.padded(n).reversed();
  auto inner = residual_shape(s, outer);
  if (!inner) return false;
  if (!inner->reversed().is_partition()) return false;
  if (!s.empty() && components(s, adjacent) != 1) return false;
  for (Cell u : s)
    if (s.contains({u.col + 1, u.row}) && s.contains({u.col, u.row + 1}) &&
        s.contains({u.col + 1, u.row + 1}))
      return false;
  return true;
}

std::vector<Diagram> special_snakes(const Composition& b) {
  std::vector<Diagram> out{Diagram()};
  int anchor = lowest_nonzero_row(b);
  if (anchor == 0) return out;
  // Containing (1, anchor) forces the whole anchor row into the snake.
  for_each_residual(b, anchor, [&](const Composition& a) {
    Diagram s = difference(b, a);
    if (snake_with_residual(s, a, b)) out.push_back(std::move(s));
  });
  return out;
}

std::vector<Diagram> special_snakes_by_subsets(const Composition& b) {
  Diagram full = key_diagram(b);
  const auto& cells = full.cells();
  if (cells.size() > 20) throw std::invalid_argument("special_snakes_by_subsets: diagram too large");
  std::vector<Diagram> out;
  for (unsigned long mask = 0; mask < (1UL << cells.size()); ++mask) {
    Diagram s;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (mask >> i & 1) s.insert(cells[i]);
    if (is_special_snake(s, b)) out.push_back(std::move(s));
  }
  return out;
}

int height(const Diagram& s) {
  if (s.empty()) return 1;
  std::vector<int> rows;
  for (Cell u : s) rows.push_back(u.row);
  std::sort(rows.begin(), rows.end());
  return static_cast<int>(std::unique(rows.begin(), rows.end()) - rows.begin());
}

int sign(const Diagram& s) { return height(s) % 2 == 1 ? 1 : -1; }

std::vector<SnakeTabloid> enumerate_special_snake_tabloids(const Composition& b) {
  std::vector<SnakeTabloid> out;
  SnakeTabloid partial;
  partial.shape = b;
  tabloids_from(0, b, partial, out);
  for (auto& u : out) {
    std::vector<int> w;
    u.sign = 1;
    for (const auto& s : u.snakes) {
      w.push_back(static_cast<int>(s.size()));
      u.sign *= sign(s);
    }
    u.weight = Composition(std::move(w));
  }
  return out;
}

Integer inverse_ktilde(const Composition& a, const Composition& b) {
  std::size_t n = std::max(a.length(), b.length());
  Composition target = a.padded(n);
  Integer total = 0;
  for (const auto& u : enumerate_special_snake_tabloids(b.padded(n)))
    if (u.weight == target) total += u.sign;
  return total;
}

BasisExpansion expand_key_into_h(const Composition& b) {
  BasisExpansion e;
  e.basis = BasisTag::HFlagged;
  for (const auto& u : enumerate_special_snake_tabloids(b)) e.add(u.weight, u.sign);
  return e;
}

std::vector<Filling> gset_enumerate(const Diagram& s, const Composition& b, int n) {
  if (n == 0) n = static_cast<int>(b.length());
  auto a = residual_shape(s, b);
  if (!a) throw std::invalid_argument("gset_enumerate: complement is not a key diagram");
  std::vector<Filling> out;
  for (const Filling& rest : enumerate(*a, n, Flavor::SSKT)) {
    Filling t = Filling::blank(b);
    for (Cell u : rest.cells()) t.at_mut(u) = rest.at(u);
    for (Cell u : s) t.at_mut(u) = 1;
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::pair<Cell, Cell>> s_attacks(const Diagram& s, const Filling& t) {
  std::vector<std::pair<Cell, Cell>> out;
  std::vector<Cell> cells = t.cells();
  for (Cell x : s) {
    if (t.at(x) != 1) continue;
    for (Cell y : cells) {
      if (!attacking(x, y) || t.at(y) != 1) continue;
      bool above = y.col == x.col && y.row > x.row;
      bool right = y.col == x.col + 1;
      if (!above && !right) continue;
      if (right && s.contains({y.col - 1, y.row})) continue;
      out.emplace_back(x, y);
    }
  }
  return out;
}

namespace {

void require_in_F(const Diagram& s, const Filling& t, int n) {
  const Composition& b = t.shape;
  if (b.length() == 0 || b[0] == 0) throw std::invalid_argument("iota: needs b_1 > 0");
  if (!is_special_snake(s, b)) throw std::invalid_argument("iota: not a special snake");
  for (Cell u : s)
    if (t.at(u) != 1) throw std::invalid_argument("iota: filling is not 1 on the snake");
  Composition a = *residual_shape(s, b);
  Filling rest = Filling::blank(a);
  for (Cell u : rest.cells()) rest.at_mut(u) = t.at(u);
  if (!is_member(rest, Flavor::SSKT, n))
    throw std::invalid_argument("iota: complement is not an SSKT");
  if (is_member(t, Flavor::SSKT, n)) throw std::invalid_argument("iota: filling is an SSKT");
}

}  // namespace

std::pair<Diagram, Filling> iota(const Diagram& s, const Filling& t, int n) {
  if (n == 0) n = static_cast<int>(t.shape.length());
  require_in_F(s, t, n);
  auto attacks = s_attacks(s, t);
  if (attacks.empty()) throw std::logic_error("iota: no S-attack");
  // x: rightmost, then topmost.
  Cell x = attacks.front().first;
  for (const auto& [p, q] : attacks) x = std::max(x, p);
  // y: rightmost, then lowest, among attacks starting at x.
  std::optional<Cell> y;
  for (const auto& [p, q] : attacks) {
    if (p != x) continue;
    if (!y || q.col > y->col || (q.col == y->col && q.row < y->row)) y = q;
  }
  Diagram next = s;
  for (int c = y->col; c <= t.shape[y->row - 1]; ++c) {
    Cell u{c, y->row};
    if (next.contains(u))
      next.erase(u);
    else
      next.insert(u);
  }
  return {next, t};
}

std::vector<std::pair<Diagram, Filling>> enumerate_F(const Composition& b, int n) {
  if (n == 0) n = static_cast<int>(b.length());
  std::vector<std::pair<Diagram, Filling>> out;
  for (const Diagram& s : special_snakes(b)) {
    if (s.empty()) continue;
    for (Filling& t : gset_enumerate(s, b, n))
      if (!is_member(t, Flavor::SSKT, n)) out.emplace_back(s, std::move(t));
  }
  return out;
}

}  // namespace flagkey
