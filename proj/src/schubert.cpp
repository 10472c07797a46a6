#include "flagkey/schubert.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagkey {

namespace {

void add_to(SchubertExpansion& e, const Permutation& w, const Integer& c) {
  Integer& slot = e[w];
  slot += c;
  if (slot == 0) e.erase(w);
}

// The larger of the two positions where u and w differ.
int swapped_position(const Permutation& u, const Permutation& w) {
  int m = std::max(u.window(), w.window());
  int j = 0;
  for (int p = 1; p <= m; ++p)
    if (u(p) != w(p)) j = p;
  return j;
}

}  // namespace

std::set<Permutation> horizontal_strip_targets(const Permutation& u, int k, int m) {
  if (m < 0) throw std::invalid_argument("horizontal strip size must be nonnegative");
  std::set<std::pair<Permutation, std::set<int>>> frontier{{u, {}}};
  for (int step = 0; step < m; ++step) {
    std::set<std::pair<Permutation, std::set<int>>> next;
    for (const auto& [v, used] : frontier)
      for (const Permutation& w : k_bruhat_covers(v, k)) {
        int j = swapped_position(v, w);
        if (used.count(j)) continue;
        auto more = used;
        more.insert(j);
        next.emplace(w, std::move(more));
      }
    frontier = std::move(next);
  }
  std::set<Permutation> out;
  for (const auto& [w, used] : frontier) out.insert(w);
  return out;
}

SchubertExpansion pieri_multiply(const SchubertExpansion& e, int m, int k) {
  if (m == 0) return e;
  SchubertExpansion out;
  for (const auto& [u, c] : e)
    for (const Permutation& w : horizontal_strip_targets(u, k, m)) add_to(out, w, c);
  return out;
}

SchubertExpansion h_schubert_expansion(const Composition& b) {
  SchubertExpansion e{{Permutation::identity(), 1}};
  for (std::size_t k = 0; k < b.length(); ++k) e = pieri_multiply(e, b[k], static_cast<int>(k) + 1);
  return e;
}

SchubertExpansion h_product_expansion(const Composition& a, const Composition& b) {
  SchubertExpansion e = h_schubert_expansion(a);
  for (std::size_t k = 0; k < b.length(); ++k) e = pieri_multiply(e, b[k], static_cast<int>(k) + 1);
  return e;
}

Polynomial divided_difference(const Polynomial& f, int i) {
  Polynomial out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    std::vector<int> a = e.padded(std::max<std::size_t>(e.length(), i + 1)).vec();
    int p = a[i - 1], q = a[i];
    if (p == q) continue;
    int lo = std::min(p, q), d = std::abs(p - q);
    Integer sign = p > q ? 1 : -1;
    for (int t = 0; t < d; ++t) {
      a[i - 1] = lo + d - 1 - t;
      a[i] = lo + t;
      out.add_term(Composition(a), c * sign);
    }
  }
  return out;
}

Polynomial schubert_polynomial(const Permutation& w) {
  int n = std::max(w.window(), 1);
  std::vector<int> word = w.word(n);
  // Ascend to the longest element of S_n, recording the ascents used.
  std::vector<int> path;
  while (true) {
    int i = 0;
    for (int p = 1; p < n; ++p)
      if (word[p - 1] < word[p]) {
        i = p;
        break;
      }
    if (i == 0) break;
    std::swap(word[i - 1], word[i]);
    path.push_back(i);
  }
  std::vector<int> staircase(n);
  for (int p = 0; p < n; ++p) staircase[p] = n - 1 - p;
  Polynomial f = Polynomial::monomial(Composition(staircase));
  for (auto it = path.rbegin(); it != path.rend(); ++it) f = divided_difference(f, *it);
  return f;
}

Polynomial to_polynomial(const SchubertExpansion& e) {
  Polynomial out;
  for (const auto& [w, c] : e) out += schubert_polynomial(w) * c;
  return out;
}

}  // namespace flagkey
