#pragma once

#include <set>

#include "flagkey/composition.hpp"
#include "flagkey/fillings.hpp"
#include "flagkey/frsk.hpp"
#include "flagkey/polynomial.hpp"

namespace flagkey {

/// Every diagram reachable by one Kohnert move: the rightmost cell of a row
/// drops to the topmost vacant position below it in its column.
std::set<Diagram> kohnert_moves(const Diagram& d);

/// All diagrams reachable by a sequence of moves, d included.
std::set<Diagram> kohnert_closure(const Diagram& d);

/// Sum of x^{wt(T)} over the closure, wt counting cells per row.
Polynomial kohnert_polynomial(const Diagram& d);

/// D_a: row r occupies the columns a_1+..+a_{r-1} < c <= a_1+..+a_r.
Diagram build_Da(const Composition& a, std::size_t n = 0);

/// True when no cell (c, r) of d lacks a southwest partner required by
/// (c, r'), (c', r) in d with c < c', r < r' implying (c, r) in d.
bool is_southwest(const Diagram& d);

/// phi(T)_{ij}: cells of T in row j within the column window of part i.
/// Rejects diagrams that cannot lie in the closure of D_a.
Matrix phi(const Diagram& t, const Composition& a);

/// The unique diagram with phi(T) = L; L must be lower triangular.
Diagram phi_inverse(const Matrix& l);

}  // namespace flagkey
