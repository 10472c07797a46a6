#include "flagkey/frsk.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace flagkey {

Matrix zero_matrix(int n) { return Matrix(n, std::vector<int>(n, 0)); }

bool is_lower_triangular(const Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m[i].size(); ++j)
      if (m[i][j] != 0) return false;
  return true;
}

Composition row_sums(const Matrix& m) {
  std::vector<int> r(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int v : m[i]) r[i] += v;
  return Composition(std::move(r));
}

Composition col_sums(const Matrix& m) {
  std::vector<int> c(m.size(), 0);
  for (const auto& row : m)
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j >= c.size()) c.resize(j + 1, 0);
      c[j] += row[j];
    }
  return Composition(std::move(c));
}

std::vector<Matrix> enumerate_matrices(int n, int max_sum, bool lower_triangular) {
  std::vector<Matrix> out;
  Matrix m = zero_matrix(n);
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!lower_triangular || j <= i) slots.emplace_back(i, j);
  std::function<void(std::size_t, int)> go = [&](std::size_t k, int left) {
    if (k == slots.size()) {
      out.push_back(m);
      return;
    }
    auto [i, j] = slots[k];
    for (int v = 0; v <= left; ++v) {
      m[i][j] = v;
      go(k + 1, left - v);
    }
    m[i][j] = 0;
  };
  go(0, max_sum);
  return out;
}

Biword canonical(Biword w) {
  std::sort(w.begin(), w.end(), [](const Letter& x, const Letter& y) {
    return x.top != y.top ? x.top < y.top : x.bottom > y.bottom;
  });
  return w;
}

Biword matrix_to_biword(const Matrix& m) {
  Biword w;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = m[i].size(); j-- > 0;)
      for (int k = 0; k < m[i][j]; ++k) w.push_back({static_cast<int>(i + 1), static_cast<int>(j + 1)});
  return w;
}

Matrix biword_to_matrix(const Biword& w, int n) {
  for (const Letter& l : w) {
    if (l.top < 1 || l.bottom < 1) throw std::invalid_argument("biword letters must be positive");
    n = std::max({n, l.top, l.bottom});
  }
  Matrix m = zero_matrix(n);
  for (const Letter& l : w) ++m[l.top - 1][l.bottom - 1];
  return m;
}

// ---------------------------------------------------------------- insertion

namespace {

// Appends a cell to row r (1-based), growing the shape as needed.
void append_cell(Filling& t, int r, int v) {
  if (static_cast<int>(t.rows.size()) < r) t.rows.resize(r);
  t.rows[r - 1].push_back(v);
  std::vector<int> lens;
  for (const auto& row : t.rows) lens.push_back(static_cast<int>(row.size()));
  lens.resize(std::max(lens.size(), t.shape.length()), 0);
  t.shape = Composition(std::move(lens));
}

int column_height(const Filling& t, int c) {
  int h = 0;
  for (std::size_t r = 1; r <= t.shape.length(); ++r)
    if (t.shape.part(r) >= c) ++h;
  return h;
}

int max_column(const Filling& t) {
  int m = 0;
  for (int v : t.shape.parts()) m = std::max(m, v);
  return m;
}

}  // namespace

Filling rsk_insert(const Filling& p, int j, InsertTrace* trace) {
  Filling out = p;
  InsertTrace local;
  for (int r = 1;; ++r) {
    ++local.iterations;
    int len = out.shape.part(r);
    int c = 1;
    while (c <= len && out.at({c, r}) >= j) ++c;
    local.placed.push_back({c, r});
    if (c > len) {
      append_cell(out, r, j);
      local.added = {c, r};
      break;
    }
    int bumped = out.at({c, r});
    out.at_mut({c, r}) = j;
    local.bumped.push_back(bumped);
    j = bumped;
  }
  if (trace) *trace = std::move(local);
  return out;
}

Filling flagged_insert(const Filling& s, int j, int n, InsertTrace* trace) {
  if (j < 1 || j > n) throw std::invalid_argument("flagged_insert: entry outside [n]");
  if (static_cast<int>(s.shape.support_length()) > n)
    throw std::invalid_argument("flagged_insert: filling has rows above the ambient n");
  Filling out = s;
  if (static_cast<int>(out.shape.length()) < n) {
    out.shape = out.shape.padded(n);
    out.rows.resize(n);
  }
  InsertTrace local;
  // Number of entries >= v in column c, basement included.
  auto count_ge = [&](int c, int v) {
    if (c == 0) return n - v + 1;
    int k = 0;
    for (int r = 1; r <= n; ++r)
      if (out.has({c, r}) && out.at({c, r}) >= v) ++k;
    return k;
  };
  int bound = std::numeric_limits<int>::max();
  while (true) {
    ++local.iterations;
    int cprime = std::min(bound, max_column(out) + 1);
    while (cprime >= 1 && !(count_ge(cprime, j) < count_ge(cprime - 1, j))) --cprime;
    if (cprime < 1) throw std::logic_error("flagged_insert: no admissible column");
    int row = 0;
    for (int r = n; r >= 1 && row == 0; --r) {
      Cell left{cprime - 1, r};
      if (left.col > 0 && !out.has(left)) continue;
      if (out.at(left) < j) continue;
      Cell here{cprime, r};
      if (out.has(here) ? out.at(here) < j : true) row = r;
    }
    if (row == 0) throw std::logic_error("flagged_insert: no admissible position");
    Cell here{cprime, row};
    local.placed.push_back(here);
    if (!out.has(here)) {
      append_cell(out, row, j);
      local.added = here;
      break;
    }
    int bumped = out.at(here);
    out.at_mut(here) = j;
    local.bumped.push_back(bumped);
    j = bumped;
    bound = cprime;
  }
  if (trace) *trace = std::move(local);
  return out;
}

// ---------------------------------------------------------------- RSK

namespace {

Filling empty_filling(int n) { return Filling::blank(Composition(std::vector<int>(n, 0))); }

void add_recording_cell(Filling& q, Cell c, int value) {
  if (q.shape.part(c.row) != c.col - 1) throw std::logic_error("recording cell out of place");
  append_cell(q, c.row, value);
}

}  // namespace

TableauPair rsk(const Matrix& a) {
  TableauPair out{empty_filling(0), empty_filling(0)};
  for (const Letter& l : matrix_to_biword(a)) {
    InsertTrace tr;
    out.insertion = rsk_insert(out.insertion, l.bottom, &tr);
    add_recording_cell(out.recording, tr.added, l.top);
  }
  return out;
}

Matrix rsk_inverse(const TableauPair& pq, int n) {
  Filling p = pq.insertion, q = pq.recording;
  if (!(p.shape == q.shape)) throw std::invalid_argument("insertion and recording shapes differ");
  if (!p.shape.is_partition()) throw std::invalid_argument("tableaux must have partition shape");
  if (!is_member(p, Flavor::RSSYT, n) || !is_member(q, Flavor::SSYT, n))
    throw std::invalid_argument("pair is not (reverse SSYT, SSYT) with entries in [n]");
  p.shape = p.shape.stripped();
  p.rows.resize(p.shape.length());
  q.shape = q.shape.stripped();
  q.rows.resize(q.shape.length());
  Biword letters;
  while (q.size() > 0) {
    // The largest recorded value sits rightmost at the top of its column.
    int best = 0;
    Cell at{0, 0};
    for (const Cell& c : q.cells()) {
      int v = q.at(c);
      if (v > best || (v == best && c.col > at.col)) {
        best = v;
        at = c;
      }
    }
    int r = at.row;
    int v = p.at(at);
    p.rows[r - 1].pop_back();
    q.rows[r - 1].pop_back();
    for (int s = r - 1; s >= 1; --s) {
      auto& row = p.rows[s - 1];
      int c = -1;
      for (int k = 0; k < static_cast<int>(row.size()); ++k)
        if (row[k] > v) c = k;
      std::swap(row[c], v);
    }
    letters.push_back({best, v});
    while (!p.rows.empty() && p.rows.back().empty()) {
      p.rows.pop_back();
      q.rows.pop_back();
    }
    std::vector<int> lens;
    for (const auto& row : p.rows) lens.push_back(static_cast<int>(row.size()));
    p.shape = q.shape = Composition(lens);
  }
  return biword_to_matrix(letters, n);
}

TableauPair frsk(const Matrix& l) {
  if (!is_lower_triangular(l)) throw std::invalid_argument("fRSK needs a lower triangular matrix");
  int n = static_cast<int>(l.size());
  TableauPair out{empty_filling(n), empty_filling(n)};
  for (const Letter& x : matrix_to_biword(l)) {
    InsertTrace tr;
    out.insertion = flagged_insert(out.insertion, x.bottom, x.top, &tr);
    if (static_cast<int>(out.recording.rows.size()) < n) out.recording.rows.resize(n);
    add_recording_cell(out.recording, tr.added, x.top);
    out.recording.shape = out.recording.shape.padded(std::max<std::size_t>(n, out.recording.shape.length()));
    out.insertion.shape = out.insertion.shape.padded(std::max<std::size_t>(n, out.insertion.shape.length()));
  }
  return out;
}

Matrix frsk_inverse(const TableauPair& st, int n) {
  const Filling& s = st.insertion;
  const Filling& t = st.recording;
  if (!(s.shape == t.shape)) throw std::invalid_argument("fillings have different shapes");
  if (!is_member(s, Flavor::SSKT, n)) throw std::invalid_argument("first filling is not an SSKT");
  if (!is_member(t, Flavor::RSSAF, n)) throw std::invalid_argument("second filling is not an rSSAF");
  Matrix l = rsk_inverse({tau(s), rho(t)}, n);
  if (!is_lower_triangular(l)) throw std::invalid_argument("pair is outside the image of fRSK");
  if (!(frsk(l) == st)) throw std::invalid_argument("pair is outside the image of fRSK");
  return l;
}

// ---------------------------------------------------------------- column maps

namespace {

// Column sets, columns 1..max.
std::vector<std::vector<int>> column_sets(const Filling& t) {
  std::vector<std::vector<int>> cols(max_column(t));
  for (const Cell& c : t.cells()) cols[c.col - 1].push_back(t.at(c));
  return cols;
}

// Stacks the given columns bottom to top into a French tableau.
Filling from_columns(const std::vector<std::vector<int>>& cols) {
  std::vector<std::vector<int>> rows;
  for (const auto& col : cols)
    for (std::size_t k = 0; k < col.size(); ++k) {
      if (rows.size() <= k) rows.resize(k + 1);
      rows[k].push_back(col[k]);
    }
  return Filling(std::move(rows));
}

}  // namespace

Filling rho(const Filling& t) {
  auto cols = column_sets(t);
  for (auto& c : cols) std::sort(c.begin(), c.end());
  return from_columns(cols);
}

Filling tau(const Filling& s) {
  auto cols = column_sets(s);
  for (auto& c : cols) std::sort(c.begin(), c.end(), std::greater<>());
  return from_columns(cols);
}

Filling rho_inverse(const Filling& q, int n) {
  auto cols = column_sets(q);
  // entry[r][c] with 0 for empty; column 0 is the basement.
  std::vector<std::vector<int>> grid(n + 1, std::vector<int>(cols.size() + 1, 0));
  for (int r = 1; r <= n; ++r) grid[r][0] = r;
  for (std::size_t c = 1; c <= cols.size(); ++c) {
    std::vector<int> col = cols[c - 1];
    std::sort(col.begin(), col.end());
    for (int v : col) {
      int row = 0;
      for (int r = n; r >= 1 && row == 0; --r)
        if (grid[r][c] == 0 && grid[r][c - 1] != 0 && grid[r][c - 1] <= v) row = r;
      if (row == 0) throw std::invalid_argument("rho_inverse: no position for entry " + std::to_string(v));
      grid[row][c] = v;
    }
  }
  std::vector<std::vector<int>> rows(n);
  for (int r = 1; r <= n; ++r)
    for (std::size_t c = 1; c <= cols.size() && grid[r][c] != 0; ++c) rows[r - 1].push_back(grid[r][c]);
  return Filling(std::move(rows));
}

Filling tau_dagger(const Filling& p, const Composition& a) {
  auto cols = column_sets(p);
  Filling out = Filling::blank(a);
  int width = max_column(out);
  if (static_cast<int>(cols.size()) != width)
    throw std::invalid_argument("tau_dagger: column count mismatch");
  for (int c = width; c >= 1; --c) {
    std::multiset<int> left(cols[c - 1].begin(), cols[c - 1].end());
    if (static_cast<int>(left.size()) != column_height(out, c))
      throw std::invalid_argument("tau_dagger: column " + std::to_string(c) + " has the wrong height");
    for (std::size_t r = 1; r <= a.length(); ++r) {
      Cell u{c, static_cast<int>(r)};
      if (!out.has(u)) continue;
      Cell right{c + 1, static_cast<int>(r)};
      int floor = out.has(right) ? out.at(right) : 0;
      auto it = left.lower_bound(floor);
      if (it == left.end())
        throw std::invalid_argument("tau_dagger: cannot keep rows decreasing in column " + std::to_string(c));
      out.at_mut(u) = *it;
      left.erase(it);
    }
  }
  return out;
}

Matrix lift_F(const Matrix& a) {
  int n = static_cast<int>(a.size());
  Matrix out = zero_matrix(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i + n][j] = a[i][j];
  return out;
}

}  // namespace flagkey
