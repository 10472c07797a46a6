#include "flagkey/fillings.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace flagkey {

// ---------------------------------------------------------------- Diagram

Diagram::Diagram(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  for (const Cell& c : cells_)
    if (c.col < 1 || c.row < 1) throw std::invalid_argument("diagram cells must be positive");
}

bool Diagram::contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

void Diagram::insert(Cell c) {
  if (c.col < 1 || c.row < 1) throw std::invalid_argument("diagram cells must be positive");
  auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
  if (it == cells_.end() || *it != c) cells_.insert(it, c);
}

void Diagram::erase(Cell c) {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
  if (it != cells_.end() && *it == c) cells_.erase(it);
}

int Diagram::max_row() const {
  int r = 0;
  for (const Cell& c : cells_) r = std::max(r, c.row);
  return r;
}

int Diagram::max_col() const { return cells_.empty() ? 0 : cells_.back().col; }

Composition Diagram::row_weight(std::size_t n) const {
  std::vector<int> w(std::max<std::size_t>(n, max_row()), 0);
  for (const Cell& c : cells_) ++w[c.row - 1];
  return Composition(std::move(w));
}

Diagram key_diagram(const Composition& a) {
  std::vector<Cell> cells;
  for (std::size_t r = 1; r <= a.length(); ++r)
    for (int c = 1; c <= a.part(r); ++c) cells.push_back({c, static_cast<int>(r)});
  return Diagram(std::move(cells));
}

std::optional<Composition> key_shape(const Diagram& d, std::size_t n) {
  Composition w = d.row_weight(n);
  for (const Cell& c : d)
    if (c.col > w.part(c.row)) return std::nullopt;
  return w;
}

bool attacking(Cell u, Cell v) {
  if (u == v) return false;
  if (u.col == v.col) return true;
  if (u.col + 1 == v.col) return u.row > v.row;
  if (v.col + 1 == u.col) return v.row > u.row;
  return false;
}

// ---------------------------------------------------------------- Filling

Filling::Filling(std::vector<std::vector<int>> rows_bottom_to_top)
    : rows(std::move(rows_bottom_to_top)) {
  std::vector<int> lens;
  for (const auto& r : rows) lens.push_back(static_cast<int>(r.size()));
  shape = Composition(std::move(lens));
}

Filling Filling::blank(const Composition& shape) {
  Filling t;
  t.shape = shape;
  for (std::size_t r = 0; r < shape.length(); ++r) t.rows.emplace_back(shape[r], 0);
  return t;
}

bool Filling::has(Cell c) const {
  return c.row >= 1 && c.col >= 1 && c.col <= shape.part(c.row);
}

int Filling::at(Cell c) const {
  if (c.col == 0) return c.row;
  if (!has(c)) throw std::out_of_range("cell outside filling");
  return rows[c.row - 1][c.col - 1];
}

int& Filling::at_mut(Cell c) {
  if (!has(c)) throw std::out_of_range("cell outside filling");
  return rows[c.row - 1][c.col - 1];
}

Composition Filling::weight(std::size_t n) const {
  std::size_t len = n;
  for (const auto& r : rows)
    for (int v : r) len = std::max(len, static_cast<std::size_t>(std::max(v, 0)));
  std::vector<int> w(len, 0);
  for (const auto& r : rows)
    for (int v : r)
      if (v >= 1) ++w[v - 1];
  return Composition(std::move(w));
}

std::vector<Cell> Filling::cells() const {
  std::vector<Cell> out;
  for (std::size_t r = 1; r <= shape.length(); ++r)
    for (int c = 1; c <= shape.part(r); ++c) out.push_back({c, static_cast<int>(r)});
  return out;
}

std::vector<int> Filling::reading_word() const {
  std::vector<int> w;
  for (const auto& r : rows) w.insert(w.end(), r.begin(), r.end());
  return w;
}

std::vector<std::vector<int>> Filling::nonempty_rows() const {
  std::vector<std::vector<int>> r = rows;
  while (!r.empty() && r.back().empty()) r.pop_back();
  return r;
}

// ---------------------------------------------------------------- statistics

int leg(const Filling& t, Cell u) { return t.shape.part(u.row) - u.col + 1; }

int arm(const Filling& t, Cell u, int n) {
  int count = 0;
  for (int r = 1; r < u.row; ++r)
    if (t.has({u.col, r})) ++count;
  for (int r = u.row + 1; r <= n; ++r) {
    Cell left{u.col - 1, r};
    if (left.col == 0 || t.has(left)) ++count;
  }
  return count;
}

namespace {

// Row lengths padded to n rows.
std::vector<int> row_lengths(const Filling& t, int n) {
  std::vector<int> len(n, 0);
  for (int r = 1; r <= n; ++r) len[r - 1] = t.shape.part(r);
  return len;
}

bool coinversion(int i, int j, int k) { return (i < j && j < k) || (j < k && k < i) || (k < i && i < j); }
bool inversion(int i, int j, int k) { return (i > j && j > k) || (j > k && k > i) || (k > i && i > j); }

struct TripleCount {
  int coinv = 0;
  int inv = 0;
};

// Triples between lower row r and upper row s. `len` holds padded row lengths.
TripleCount triples_between(const Filling& t, const std::vector<int>& len, int r, int s) {
  TripleCount out;
  auto tally = [&](int i, int j, int k) {
    if (i == j || j == k || i == k) return;
    if (coinversion(i, j, k)) ++out.coinv;
    if (inversion(i, j, k)) ++out.inv;
  };
  int ar = len[r - 1], as = len[s - 1];
  if (ar > as) {
    // Type I: (c,r), (c+1,r) below (c,s).
    for (int c = 0; c <= as && c + 1 <= ar; ++c)
      tally(t.at({c + 1, r}), t.at({c, s}), t.at({c, r}));
  } else {
    // Type II: (c,s), (c+1,s) above (c+1,r).
    for (int c = 0; c + 1 <= ar; ++c) tally(t.at({c + 1, s}), t.at({c + 1, r}), t.at({c, s}));
  }
  return out;
}

int check_ambient(const Filling& t, int n) {
  if (static_cast<int>(t.shape.support_length()) > n)
    throw std::invalid_argument("filling has rows above the ambient n");
  return n;
}

}  // namespace

FillingStats statistics(const Filling& t, int n) {
  check_ambient(t, n);
  FillingStats st;
  std::vector<int> len = row_lengths(t, n);
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= len[r - 1]; ++c) {
      int v = t.at({c, r}), left = t.at({c - 1, r});
      if (v > left) st.maj += leg(t, {c, r});
      if (v < left) st.comaj += leg(t, {c, r});
    }
  }
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s) {
      TripleCount tc = triples_between(t, len, r, s);
      st.coinv += tc.coinv;
      st.inv += tc.inv;
    }
  // Attacking pairs with equal entries, basement included.
  std::vector<Cell> cells = t.cells();
  for (int r = 1; r <= n; ++r) cells.push_back({0, r});
  for (std::size_t x = 0; x < cells.size(); ++x)
    for (std::size_t y = x + 1; y < cells.size(); ++y)
      if (attacking(cells[x], cells[y]) && t.at(cells[x]) == t.at(cells[y]))
        ++st.attacking_violations;
  return st;
}

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::SSKT: return "SSKT";
    case Flavor::RSSAF: return "rSSAF";
    case Flavor::SSYT: return "SSYT";
    case Flavor::RSSYT: return "rSSYT";
  }
  return "?";
}

Flavor parse_flavor(const std::string& s) {
  if (s == "SSKT" || s == "sskt") return Flavor::SSKT;
  if (s == "rSSAF" || s == "rssaf") return Flavor::RSSAF;
  if (s == "SSYT" || s == "ssyt") return Flavor::SSYT;
  if (s == "rSSYT" || s == "rssyt") return Flavor::RSSYT;
  throw std::invalid_argument("unknown flavor '" + s + "'");
}

namespace {

bool entries_in_range(const Filling& t, int n) {
  for (const auto& r : t.rows)
    for (int v : r)
      if (v < 1 || v > n) return false;
  return true;
}

bool is_tableau(const Filling& t, bool reverse) {
  for (std::size_t r = 1; r <= t.shape.length(); ++r) {
    for (int c = 1; c <= t.shape.part(r); ++c) {
      int v = t.at({c, static_cast<int>(r)});
      if (c > 1) {
        int left = t.at({c - 1, static_cast<int>(r)});
        if (reverse ? v > left : v < left) return false;
      }
      if (r > 1) {
        int below = t.at({c, static_cast<int>(r - 1)});
        if (reverse ? v >= below : v <= below) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_member(const Filling& t, Flavor flavor, int n) {
  bool ferrers = flavor == Flavor::SSYT || flavor == Flavor::RSSYT;
  if (ferrers && !t.shape.is_partition())
    throw std::invalid_argument(to_string(flavor) + " needs a partition shape, got " + t.shape.str());
  if (static_cast<int>(t.shape.support_length()) > n && !ferrers) return false;
  if (!entries_in_range(t, n)) return false;
  if (ferrers) return is_tableau(t, flavor == Flavor::RSSYT);
  FillingStats st = statistics(t, n);
  if (st.attacking_violations != 0) return false;
  if (flavor == Flavor::SSKT) return st.maj == 0 && st.coinv == 0;
  return st.comaj == 0 && st.inv == 0;
}

// ---------------------------------------------------------------- enumeration

namespace {

// Backtracking over cells in reading order with candidate entries ascending,
// so completed fillings come out lexicographically by reading word.
class Enumerator {
 public:
  Enumerator(const Composition& shape, int n, Flavor flavor, const std::optional<Composition>& weight)
      : flavor_(flavor), n_(n) {
    ferrers_ = flavor == Flavor::SSYT || flavor == Flavor::RSSYT;
    if (ferrers_ && !shape.is_partition())
      throw std::invalid_argument(to_string(flavor) + " needs a partition shape, got " + shape.str());
    feasible_ = ferrers_ || static_cast<int>(shape.support_length()) <= n;
    if (!feasible_) return;
    std::size_t rows = ferrers_ ? shape.length() : std::max<std::size_t>(shape.length(), n);
    t_ = Filling::blank(shape.padded(rows));
    len_ = row_lengths(t_, static_cast<int>(rows));
    cells_ = t_.cells();
    if (weight) {
      if (weight->total() != shape.total() || static_cast<int>(weight->support_length()) > n) {
        feasible_ = false;
      } else {
        remaining_.assign(n + 1, 0);
        for (int i = 1; i <= n; ++i) remaining_[i] = weight->part(i);
      }
    }
  }

  void run(const std::function<void(const Filling&)>& emit) {
    if (!feasible_) return;
    emit_ = &emit;
    place(0);
  }

 private:
  bool allowed(Cell u, int v) const {
    int r = u.row, c = u.col;
    if (ferrers_) {
      bool rev = flavor_ == Flavor::RSSYT;
      if (c > 1) {
        int left = t_.at({c - 1, r});
        if (rev ? v > left : v < left) return false;
      }
      if (r > 1) {
        int below = t_.at({c, r - 1});
        if (rev ? v >= below : v <= below) return false;
      }
      return true;
    }
    int left = t_.at({c - 1, r});
    if (flavor_ == Flavor::SSKT ? v > left : v < left) return false;
    // Attacking pairs with cells already placed.
    for (int q = 1; q < r; ++q) {
      if (t_.has({c, q}) && t_.at({c, q}) == v) return false;
      if (t_.has({c + 1, q}) && t_.at({c + 1, q}) == v) return false;
    }
    // Column 1 attacks every basement cell above it.
    return c > 1 || v <= r;
  }

  bool row_triples_ok(int s) const {
    if (ferrers_) return true;
    for (int r = 1; r < s; ++r) {
      TripleCount tc = triples_between(t_, len_, r, s);
      if (flavor_ == Flavor::SSKT ? tc.coinv != 0 : tc.inv != 0) return false;
    }
    return true;
  }

  // Rows above the stored shape still carry basement triples with lower rows.
  bool trailing_rows_ok() const {
    if (ferrers_) return true;
    for (int s = static_cast<int>(t_.shape.length()) + 1; s <= n_; ++s)
      if (!row_triples_ok(s)) return false;
    return true;
  }

  void place(std::size_t idx) {
    if (idx == cells_.size()) {
      if (trailing_rows_ok()) (*emit_)(t_);
      return;
    }
    Cell u = cells_[idx];
    bool row_end = u.col == t_.shape.part(u.row);
    for (int v = 1; v <= n_; ++v) {
      if (!remaining_.empty() && remaining_[v] == 0) continue;
      if (!allowed(u, v)) continue;
      t_.at_mut(u) = v;
      if (!remaining_.empty()) --remaining_[v];
      bool ok = true;
      if (row_end) {
        ok = row_triples_ok(u.row);
        // Empty rows directly above are complete as soon as this row is.
        for (int s = u.row + 1; ok && s <= static_cast<int>(t_.shape.length()) && t_.shape.part(s) == 0; ++s)
          ok = row_triples_ok(s);
      }
      if (ok) place(idx + 1);
      if (!remaining_.empty()) ++remaining_[v];
      t_.at_mut(u) = 0;
    }
  }

  Flavor flavor_;
  int n_;
  bool ferrers_ = false;
  bool feasible_ = true;
  Filling t_;
  std::vector<int> len_;
  std::vector<Cell> cells_;
  std::vector<int> remaining_;
  const std::function<void(const Filling&)>* emit_ = nullptr;
};

}  // namespace

std::vector<Filling> enumerate(const Composition& shape, int n, Flavor flavor,
                               const std::optional<Composition>& weight) {
  std::vector<Filling> out;
  Enumerator e(shape, n, flavor, weight);
  e.run([&](const Filling& t) {
    Filling copy = t;
    copy.shape = copy.shape.padded(shape.length());
    copy.rows.resize(shape.length());
    out.push_back(std::move(copy));
  });
  return out;
}

long long count_fillings(const Composition& shape, int n, Flavor flavor,
                         const std::optional<Composition>& weight) {
  long long count = 0;
  Enumerator e(shape, n, flavor, weight);
  e.run([&](const Filling&) { ++count; });
  return count;
}

}  // namespace flagkey
