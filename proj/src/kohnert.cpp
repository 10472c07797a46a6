#include "flagkey/kohnert.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace flagkey {

std::set<Diagram> kohnert_moves(const Diagram& d) {
  std::map<int, int> rightmost;  // row -> column
  for (const Cell& c : d) rightmost[c.row] = std::max(rightmost[c.row], c.col);
  std::set<Diagram> out;
  for (auto [row, col] : rightmost) {
    int target = row - 1;
    while (target >= 1 && d.contains({col, target})) --target;
    if (target < 1) continue;
    Diagram next = d;
    next.erase({col, row});
    next.insert({col, target});
    out.insert(std::move(next));
  }
  return out;
}

std::set<Diagram> kohnert_closure(const Diagram& d) {
  std::set<Diagram> seen{d};
  std::deque<Diagram> frontier{d};
  while (!frontier.empty()) {
    Diagram cur = std::move(frontier.front());
    frontier.pop_front();
    for (const Diagram& next : kohnert_moves(cur))
      if (seen.insert(next).second) frontier.push_back(next);
  }
  return seen;
}

Polynomial kohnert_polynomial(const Diagram& d) {
  Polynomial out;
  for (const Diagram& t : kohnert_closure(d)) out.add_term(t.row_weight(), 1);
  out.widen(d.max_row());
  return out;
}

Diagram build_Da(const Composition& a, std::size_t n) {
  if (n != 0 && n < a.support_length())
    throw std::invalid_argument("build_Da: n smaller than the length of " + a.str());
  std::vector<Cell> cells;
  int start = 0;
  for (std::size_t r = 1; r <= a.length(); ++r) {
    for (int c = start + 1; c <= start + a.part(r); ++c) cells.push_back({c, static_cast<int>(r)});
    start += a.part(r);
  }
  return Diagram(std::move(cells));
}

bool is_southwest(const Diagram& d) {
  for (const Cell& u : d)
    for (const Cell& v : d)
      if (u.col < v.col && u.row > v.row && !d.contains({u.col, v.row})) return false;
  return true;
}

Matrix phi(const Diagram& t, const Composition& a) {
  int n = static_cast<int>(a.length());
  Matrix l = zero_matrix(n);
  std::vector<int> owner;  // column -> part index (1-based)
  for (int i = 1; i <= n; ++i)
    for (int k = 0; k < a.part(i); ++k) owner.push_back(i);
  std::vector<int> row_of(owner.size() + 1, 0);
  for (const Cell& c : t) {
    if (c.col > static_cast<int>(owner.size()) || row_of[c.col] != 0)
      throw std::invalid_argument("phi: diagram is not in the closure of D_a");
    row_of[c.col] = c.row;
  }
  for (std::size_t c = 1; c <= owner.size(); ++c) {
    int i = owner[c - 1], r = row_of[c];
    if (r == 0 || r > i) throw std::invalid_argument("phi: diagram is not in the closure of D_a");
    // Within a window rows weakly decrease left to right.
    if (c > 1 && owner[c - 2] == i && row_of[c - 1] < r)
      throw std::invalid_argument("phi: diagram is not in the closure of D_a");
    ++l[i - 1][r - 1];
  }
  return l;
}

Diagram phi_inverse(const Matrix& l) {
  if (!is_lower_triangular(l)) throw std::invalid_argument("phi_inverse needs a lower triangular matrix");
  std::vector<Cell> cells;
  int start = 0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    int width = 0;
    for (int v : l[i]) width += v;
    // Rightmost L_{i1} columns in row 1, the next L_{i2} in row 2, and so on.
    int c = start + width;
    for (std::size_t j = 0; j <= i; ++j)
      for (int k = 0; k < l[i][j]; ++k) cells.push_back({c--, static_cast<int>(j + 1)});
    start += width;
  }
  return Diagram(std::move(cells));
}

}  // namespace flagkey
