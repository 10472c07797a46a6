#include "flagkey/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace flagkey::oracle {

namespace {

std::vector<int> trimmed(const Composition& c) {
  std::vector<int> v;
  for (std::size_t i = 0; i < c.support_length(); ++i) v.push_back(c[i]);
  return v;
}

// Partitions mu with lam/mu a horizontal strip: lam_{i+1} <= mu_i <= lam_i.
void horizontal_strips(const std::vector<int>& lam, std::vector<std::vector<int>>& out) {
  std::vector<int> mu(lam.size());
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == lam.size()) {
      out.push_back(mu);
      return;
    }
    int lo = i + 1 < lam.size() ? lam[i + 1] : 0;
    for (int v = lo; v <= lam[i]; ++v) {
      mu[i] = v;
      go(i + 1);
    }
  };
  go(0);
}

}  // namespace

Polynomial schur(const Composition& lam, std::size_t n) {
  std::vector<int> l = trimmed(lam);
  if (l.empty()) return Polynomial::constant(1, n);
  if (n == 0 || l.size() > n) return Polynomial(n);
  std::vector<std::vector<int>> mus;
  horizontal_strips(l, mus);
  Polynomial out(n);
  int size = 0;
  for (int v : l) size += v;
  for (const auto& mu : mus) {
    int m = 0;
    for (int v : mu) m += v;
    std::vector<int> e(n, 0);
    e[n - 1] = size - m;
    out += schur(Composition(mu), n - 1) * Polynomial::monomial(Composition(e));
  }
  return out;
}

Integer kostka(const Composition& lam, const Composition& b) {
  if (lam.total() != b.total()) return 0;
  return schur(lam, b.length()).coefficient(b);
}

Polynomial h_symmetric(const Composition& lam, std::size_t n) {
  std::vector<int> l = trimmed(lam);
  Polynomial out(n);
  std::vector<int> col(n, 0);
  std::function<void(std::size_t, std::size_t, int)> go = [&](std::size_t i, std::size_t j, int left) {
    if (i == l.size()) {
      out.add_term(Composition(col), 1);
      return;
    }
    if (j + 1 == n) {
      col[j] += left;
      go(i + 1, 0, i + 1 < l.size() ? l[i + 1] : 0);
      col[j] -= left;
      return;
    }
    for (int v = 0; v <= left; ++v) {
      col[j] += v;
      go(i, j + 1, left - v);
      col[j] -= v;
    }
  };
  if (l.empty()) return Polynomial::constant(1, n);
  if (n == 0) return out;
  go(0, 0, l[0]);
  return out;
}

Polynomial cauchy_lhs(std::size_t n, int deg) {
  // Each factor (1 - x_i y_j)^{-1} contributes powers of x_i y_j.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= i; ++j) pairs.emplace_back(i, j);
  Polynomial out(2 * n);
  std::vector<int> e(2 * n, 0);
  std::function<void(std::size_t, int)> go = [&](std::size_t k, int left) {
    if (k == pairs.size()) {
      out.add_term(Composition(e), 1);
      return;
    }
    auto [i, j] = pairs[k];
    for (int p = 0; p <= left; ++p) {
      e[i - 1] += p;
      e[n + j - 1] += p;
      go(k + 1, left - p);
      e[i - 1] -= p;
      e[n + j - 1] -= p;
    }
  };
  go(0, deg);
  return out;
}

namespace {

// English Ferrers diagram cells (row, col), both 1-based, row 1 on top.
using ECell = std::pair<int, int>;

bool is_rim_hook(const std::vector<ECell>& hook, const std::vector<int>& shape, std::vector<int>& rest) {
  // Complement must be a Ferrers diagram.
  rest = shape;
  for (auto [r, c] : hook) --rest[r - 1];
  std::vector<std::vector<bool>> in(shape.size() + 2, std::vector<bool>(shape.empty() ? 2 : shape[0] + 2, false));
  for (auto [r, c] : hook) in[r][c] = true;
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (int c = rest[r] + 1; c <= shape[r]; ++c)
      if (!in[r + 1][c]) return false;
  for (std::size_t r = 0; r + 1 < rest.size(); ++r)
    if (rest[r] < rest[r + 1]) return false;
  // Connected by edges.
  std::vector<bool> seen(hook.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t k = stack.back();
    stack.pop_back();
    for (std::size_t m = 0; m < hook.size(); ++m) {
      if (seen[m]) continue;
      int dr = std::abs(hook[k].first - hook[m].first), dc = std::abs(hook[k].second - hook[m].second);
      if (dr + dc == 1) {
        seen[m] = true;
        ++reached;
        stack.push_back(m);
      }
    }
  }
  if (reached != hook.size()) return false;
  // No 2x2 block.
  for (auto [r, c] : hook)
    if (in[r + 1][c] && in[r][c + 1] && in[r + 1][c + 1]) return false;
  return true;
}

// Signed tabloid counts keyed by sorted hook-size type.
void er_tabloids(std::vector<int> shape, std::vector<int> type, int sign,
                 std::map<std::vector<int>, Integer>& out) {
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) {
    std::sort(type.begin(), type.end(), std::greater<>());
    out[type] += sign;
    return;
  }
  // Every removable hook through the lowest cell of column 1.
  std::vector<ECell> cells;
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (int c = 1; c <= shape[r]; ++c) cells.push_back({static_cast<int>(r + 1), c});
  ECell anchor{static_cast<int>(shape.size()), 1};
  std::size_t m = cells.size();
  for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
    std::vector<ECell> hook;
    bool has_anchor = false;
    for (std::size_t k = 0; k < m; ++k)
      if (mask >> k & 1) {
        hook.push_back(cells[k]);
        has_anchor = has_anchor || cells[k] == anchor;
      }
    if (!has_anchor) continue;
    std::vector<int> rest;
    if (!is_rim_hook(hook, shape, rest)) continue;
    int lo = hook[0].first, hi = hook[0].first;
    for (auto [r, c] : hook) {
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    int s = (hi - lo) % 2 == 0 ? sign : -sign;
    type.push_back(static_cast<int>(hook.size()));
    er_tabloids(rest, type, s, out);
    type.pop_back();
  }
}

}  // namespace

Integer er_inverse_kostka(const Composition& lam, const Composition& mu) {
  if (lam.total() != mu.total()) return 0;
  std::map<std::vector<int>, Integer> counts;
  er_tabloids(trimmed(mu), {}, 1, counts);
  auto it = counts.find(trimmed(lam));
  return it == counts.end() ? Integer(0) : it->second;
}

std::map<Composition, std::map<Composition, Integer>> inverse_kostka_matrix(int k) {
  std::vector<Composition> parts = partitions(k, k);
  // K[lam][mu] = kostka(lam, mu); h_mu = sum_lam K[lam][mu] s_lam.
  std::map<Composition, std::map<Composition, Integer>> inv;
  // s_mu = h_mu - sum_{lam > mu} K[lam][mu] s_lam, resolved from the top of dominance.
  std::vector<Composition> order = parts;  // reverse lexicographic: dominant first
  std::map<Composition, std::map<Composition, Integer>> s_in_h;
  for (const Composition& mu : order) {
    std::map<Composition, Integer> row;
    row[mu.stripped()] += 1;
    for (const Composition& lam : order) {
      if (lam == mu) break;
      Integer kk = kostka(lam, mu);
      if (kk == 0) continue;
      for (auto& [nu, c] : s_in_h[lam.stripped()]) row[nu] -= kk * c;
    }
    for (auto it = row.begin(); it != row.end();)
      it = it->second == 0 ? row.erase(it) : std::next(it);
    s_in_h[mu.stripped()] = row;
  }
  for (auto& [mu, row] : s_in_h)
    for (auto& [lam, c] : row) inv[lam][mu] = c;
  return inv;
}

Polynomial divided_difference(const Polynomial& f, std::size_t i) {
  // Monomial by monomial: d_i x^a for a_i = p, a_{i+1} = q.
  Polynomial out(std::max(f.nvars(), i + 1));
  for (const auto& [e, c] : f.terms()) {
    std::vector<int> base(std::max(e.length(), i + 1), 0);
    for (std::size_t k = 0; k < e.length(); ++k) base[k] = e[k];
    int p = base[i - 1], q = base[i];
    if (p == q) continue;
    int sgn = p > q ? 1 : -1;
    int lo = std::min(p, q), hi = std::max(p, q);
    // (x^p y^q - x^q y^p)/(x - y) = sgn * sum_{t=lo}^{hi-1} x^t y^{lo+hi-1-t}
    for (int t = lo; t < hi; ++t) {
      base[i - 1] = t;
      base[i] = lo + hi - 1 - t;
      out.add_term(Composition(base), c * sgn);
    }
  }
  return out;
}

Polynomial demazure_pi(const Polynomial& f, std::size_t i) {
  return divided_difference(Polynomial::variable(i) * f, i);
}

Polynomial demazure_pibar(const Polynomial& f, std::size_t i) { return demazure_pi(f, i) - f; }

namespace {

// Adjacent swaps i_1, ..., i_k that bubble a into decreasing order, so that
// the operator for i_1 is applied last.
std::vector<std::size_t> sorting_word(const Composition& a, std::size_t n) {
  std::vector<int> v = a.padded(n).vec();
  std::vector<std::size_t> word;
  // Bubble toward decreasing order, recording positions.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (v[i] < v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        word.push_back(i + 1);
        changed = true;
      }
  }
  return word;
}

Polynomial operator_recursion(const Composition& a, std::size_t n, bool atom) {
  Composition lam = a.padded(n).sorted();
  Polynomial f = Polynomial::monomial(lam);
  f.widen(n);
  std::vector<std::size_t> word = sorting_word(a, n);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    f = atom ? demazure_pibar(f, *it) : demazure_pi(f, *it);
  return f;
}

}  // namespace

Polynomial key_by_operators(const Composition& a, std::size_t n) { return operator_recursion(a, n, false); }
Polynomial atom_by_operators(const Composition& a, std::size_t n) { return operator_recursion(a, n, true); }

}  // namespace flagkey::oracle
