#pragma once

#include <json.hpp>
#include <string>

#include "flagkey/bases.hpp"
#include "flagkey/fillings.hpp"
#include "flagkey/frsk.hpp"
#include "flagkey/permutation.hpp"
#include "flagkey/polynomial.hpp"
#include "flagkey/schubert.hpp"
#include "flagkey/snakes.hpp"

namespace flagkey::io {

using nlohmann::json;

/// Coefficients within 64 bits are JSON numbers; larger ones are decimal strings.
json to_json(const Integer& c);
json to_json(const Composition& a);
/// [{"exp", "coef"}] in graded lexicographic order.
json to_json(const Polynomial& p);
/// {"shape", "rows"} with rows bottom to top.
json to_json(const Filling& t);
json to_json(const TableauPair& pq);
/// {"top", "bottom"}.
json to_json(const Biword& w);
/// Row-major array of rows.
json to_json(const Matrix& m);
/// {"cells": [[c, r], ...]} sorted.
json to_json(const Diagram& d);
/// {"shape", "snakes", "weight", "sign"}.
json to_json(const SnakeTabloid& u);
/// [{"perm", "coef"}] sorted by one-line word.
json to_json(const SchubertExpansion& e);
/// {"basis", "terms": [{"index", "coef"}]} sorted by index.
/// Indices are padded with zeros to length n.
json to_json(const BasisExpansion& e, std::size_t n = 0);

Filling filling_from_json(const json& j);
Matrix matrix_from_json(const json& j);

/// "1,3,2" -> (1,3,2).
std::vector<int> parse_ints(const std::string& s);
/// Rows separated by ';', entries by ','.
Matrix parse_matrix(const std::string& s);
/// Two comma-separated lines of equal length.
Biword parse_biword(const std::string& top, const std::string& bottom);
/// Rows bottom to top separated by ';'; empty rows allowed.
Filling parse_filling(const std::string& s);

/// Key-diagram filling drawn top row first with the basement column left of
/// a vertical rule and a horizontal rule under row 1. n is the basement height.
std::string render_filling(const Filling& t, int n);
/// Ferrers tableau in French convention, no basement.
std::string render_tableau(const Filling& t);
/// '#' for cells and '.' for holes.
std::string render_diagram(const Diagram& d);
/// Cells labelled by the index of the snake that owns them.
std::string render_tabloid(const SnakeTabloid& u);
/// One term per line: coefficient, then the index.
std::string render_expansion(const BasisExpansion& e, std::size_t n = 0);
std::string render_expansion(const SchubertExpansion& e);
std::string render_matrix(const Matrix& m);

}  // namespace flagkey::io
