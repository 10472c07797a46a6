#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "flagkey/composition.hpp"

namespace flagkey {

/// A lattice box at (column, row); columns and rows are 1-based, column 0 is
/// the basement.
struct Cell {
  int col = 0;
  int row = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Finite set of cells kept sorted by (column, row).
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(std::vector<Cell> cells);

  bool contains(Cell c) const;
  void insert(Cell c);
  void erase(Cell c);
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  const std::vector<Cell>& cells() const { return cells_; }
  auto begin() const { return cells_.begin(); }
  auto end() const { return cells_.end(); }

  int max_row() const;
  int max_col() const;
  /// Cells per row, as a composition of length max(n, max_row).
  Composition row_weight(std::size_t n = 0) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram& a, const Diagram& b) { return a.cells_ <=> b.cells_; }

 private:
  std::vector<Cell> cells_;
};

/// D(a): row r holds columns 1..a_r.
Diagram key_diagram(const Composition& a);

/// Shape of a left-justified diagram, or nullopt if some row has a gap.
std::optional<Composition> key_shape(const Diagram& d, std::size_t n = 0);

/// Same column, or adjacent columns with the left cell strictly higher.
bool attacking(Cell u, Cell v);

/// A filling of a key diagram (or French Ferrers diagram) by entries in [n].
///
/// rows[r-1][c-1] is the entry of cell (c, r). The basement is implicit: the
/// entry of (0, i) is i for every i up to the ambient n supplied to the
/// functions below, which may exceed the number of stored rows.
struct Filling {
  Composition shape;
  std::vector<std::vector<int>> rows;

  Filling() = default;
  /// Rows listed bottom to top; the shape is read off the row lengths.
  explicit Filling(std::vector<std::vector<int>> rows_bottom_to_top);
  Filling(std::initializer_list<std::vector<int>> rows_bottom_to_top)
      : Filling(std::vector<std::vector<int>>(rows_bottom_to_top)) {}
  /// All entries zero on D(shape).
  static Filling blank(const Composition& shape);

  bool has(Cell c) const;
  /// Entry of (c, r); basement cells report r.
  int at(Cell c) const;
  int& at_mut(Cell c);

  std::size_t size() const { return static_cast<std::size_t>(shape.total()); }
  /// wt(T): number of entries equal to i, as a composition of length n.
  Composition weight(std::size_t n) const;
  Diagram diagram() const { return key_diagram(shape); }
  /// Cells in reading order: row 1 upward, left to right.
  std::vector<Cell> cells() const;

  friend bool operator==(const Filling& a, const Filling& b) {
    return a.shape == b.shape && a.nonempty_rows() == b.nonempty_rows();
  }
  /// Shape first, then reading word.
  friend std::strong_ordering operator<=>(const Filling& a, const Filling& b) {
    if (auto c = a.shape <=> b.shape; c != 0) return c;
    return a.reading_word() <=> b.reading_word();
  }

  std::vector<int> reading_word() const;

 private:
  std::vector<std::vector<int>> nonempty_rows() const;
};

struct FillingStats {
  int maj = 0;
  int comaj = 0;
  int coinv = 0;
  int inv = 0;
  int attacking_violations = 0;
};

/// Number of cells weakly right of u in its row, u included.
int leg(const Filling& t, Cell u);
/// Cells below u in its column plus cells of the augmented diagram above u
/// in the column to its left.
int arm(const Filling& t, Cell u, int n);

/// Statistics of the augmented filling with an n-row basement. Triples are
/// evaluated on the augmented diagram, so column 0 participates.
FillingStats statistics(const Filling& t, int n);

enum class Flavor { SSKT, RSSAF, SSYT, RSSYT };

std::string to_string(Flavor f);
Flavor parse_flavor(const std::string& s);

/// Membership with ambient n. SSYT and RSSYT require a partition shape
/// (French convention) and throw std::invalid_argument otherwise.
bool is_member(const Filling& t, Flavor flavor, int n);

/// All members of the given shape with entries in [n], optionally with a fixed
/// weight, ordered lexicographically by reading word.
std::vector<Filling> enumerate(const Composition& shape, int n, Flavor flavor,
                               const std::optional<Composition>& weight = std::nullopt);

/// Count of enumerate(...) without materializing the fillings.
long long count_fillings(const Composition& shape, int n, Flavor flavor,
                         const std::optional<Composition>& weight = std::nullopt);

}  // namespace flagkey
