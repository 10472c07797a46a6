#pragma once

#include <vector>

#include "flagkey/composition.hpp"
#include "flagkey/fillings.hpp"

namespace flagkey {

/// Square matrix of naturals; m[i-1][j-1] is the (i, j) entry.
using Matrix = std::vector<std::vector<int>>;

Matrix zero_matrix(int n);
bool is_lower_triangular(const Matrix& m);
/// Row sums row(M) and column sums col(M).
Composition row_sums(const Matrix& m);
Composition col_sums(const Matrix& m);

/// Every n x n matrix (or only the lower triangular ones) with entry sum at most max_sum.
std::vector<Matrix> enumerate_matrices(int n, int max_sum, bool lower_triangular);

/// One column (i over j) of a two-line array.
struct Letter {
  int top = 0;
  int bottom = 0;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Biword = std::vector<Letter>;

/// Sorted with tops ascending and, for equal tops, bottoms descending.
Biword matrix_to_biword(const Matrix& m);
/// Counts letters; n defaults to the largest letter.
Matrix biword_to_matrix(const Biword& w, int n = 0);
/// Sorts letters into the canonical order.
Biword canonical(Biword w);

/// Record of one insertion: where each value landed, which values were
/// displaced, and how many times the core loop ran.
struct InsertTrace {
  std::vector<Cell> placed;
  std::vector<int> bumped;
  int iterations = 0;
  Cell added;
};

/// Row insertion P <- j into a reverse SSYT (French, rows weakly decrease).
Filling rsk_insert(const Filling& p, int j, InsertTrace* trace = nullptr);

/// Flagged insertion of j into an SSKT with an n-row basement.
Filling flagged_insert(const Filling& s, int j, int n, InsertTrace* trace = nullptr);

struct TableauPair {
  Filling insertion;
  Filling recording;
  friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

/// Classical RSK: P is a reverse SSYT, Q an SSYT.
TableauPair rsk(const Matrix& a);
/// Inverse of rsk; rejects pairs that are not valid tableaux of equal shape.
Matrix rsk_inverse(const TableauPair& pq, int n);

/// Flagged RSK on lower triangular matrices: S an SSKT, T an rSSAF.
TableauPair frsk(const Matrix& l);
/// Inverse of frsk; rejects pairs outside its image.
Matrix frsk_inverse(const TableauPair& st, int n);

/// Column-set maps between fillings of key diagrams and tableaux.
Filling rho(const Filling& t);
Filling rho_inverse(const Filling& q, int n);
Filling tau(const Filling& s);
/// Fills D(a) from the column sets of p, right to left and bottom to top.
Filling tau_dagger(const Filling& p, const Composition& a);

/// F: M_n -> L_{2n}, shifting every top letter by n.
Matrix lift_F(const Matrix& a);

}  // namespace flagkey
