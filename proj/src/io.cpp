#include "flagkey/io.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace flagkey::io {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string piece;
  std::istringstream is(s);
  while (std::getline(is, piece, sep)) out.push_back(trim(piece));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string pad_left(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

std::string coef_str(const Integer& c) {
  std::ostringstream os;
  os << (c > 0 ? "+" : "") << c;
  return os.str();
}

// Rows drawn top first; cell(c, r) returns "" for a hole.
template <class F>
std::string draw(int rows, int cols, F&& cell) {
  std::size_t w = 1;
  for (int r = 1; r <= rows; ++r)
    for (int c = 1; c <= cols; ++c) w = std::max(w, cell(c, r).size());
  std::ostringstream os;
  for (int r = rows; r >= 1; --r) {
    std::string line;
    for (int c = 1; c <= cols; ++c) {
      std::string v = cell(c, r);
      line += (c > 1 ? " " : "") + pad_left(v.empty() ? " " : v, w);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

}  // namespace

json to_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

json to_json(const Composition& a) { return json(a.vec()); }

json to_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& [e, c] : p.canonical_terms()) out.push_back({{"exp", to_json(e)}, {"coef", to_json(c)}});
  return out;
}

json to_json(const Filling& t) {
  json rows = json::array();
  for (std::size_t r = 0; r < t.shape.length(); ++r)
    rows.push_back(r < t.rows.size() ? t.rows[r] : std::vector<int>{});
  return {{"shape", to_json(t.shape)}, {"rows", rows}};
}

json to_json(const TableauPair& pq) {
  return {{"insertion", to_json(pq.insertion)}, {"recording", to_json(pq.recording)}};
}

json to_json(const Biword& w) {
  std::vector<int> top, bottom;
  for (const auto& l : w) {
    top.push_back(l.top);
    bottom.push_back(l.bottom);
  }
  return {{"top", top}, {"bottom", bottom}};
}

json to_json(const Matrix& m) { return json(m); }

json to_json(const Diagram& d) {
  json cells = json::array();
  for (Cell u : d) cells.push_back({u.col, u.row});
  return {{"cells", cells}};
}

json to_json(const SnakeTabloid& u) {
  json snakes = json::array();
  for (const auto& s : u.snakes) snakes.push_back(to_json(s)["cells"]);
  return {{"shape", to_json(u.shape)}, {"snakes", snakes}, {"weight", to_json(u.weight)}, {"sign", u.sign}};
}

json to_json(const SchubertExpansion& e) {
  json out = json::array();
  for (const auto& [w, c] : e) out.push_back({{"perm", w.word()}, {"coef", to_json(c)}});
  return out;
}

namespace {
Composition at_length(const Composition& a, std::size_t n) { return a.length() < n ? a.padded(n) : a; }
}  // namespace

json to_json(const BasisExpansion& e, std::size_t n) {
  json terms = json::array();
  for (const auto& [a, c] : e.terms) terms.push_back({{"index", to_json(at_length(a, n))}, {"coef", to_json(c)}});
  return {{"basis", to_string(e.basis)}, {"terms", terms}};
}

Filling filling_from_json(const json& j) {
  auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
  Filling t(rows);
  if (j.contains("shape")) {
    Composition shape(j.at("shape").get<std::vector<int>>());
    if (shape.stripped() != t.shape.stripped()) throw std::invalid_argument("filling: shape does not match rows");
    t.shape = shape;
    t.rows.resize(shape.length());
  }
  return t;
}

Matrix matrix_from_json(const json& j) { return j.get<Matrix>(); }

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  if (trim(s).empty()) return out;
  for (const auto& piece : split(s, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(piece, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + piece + "'");
    }
    if (used != piece.size()) throw std::invalid_argument("not an integer: '" + piece + "'");
    out.push_back(v);
  }
  return out;
}

Matrix parse_matrix(const std::string& s) {
  Matrix m;
  for (const auto& row : split(s, ';')) m.push_back(parse_ints(row));
  for (const auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument("matrix must be square");
  return m;
}

Biword parse_biword(const std::string& top, const std::string& bottom) {
  auto t = parse_ints(top), b = parse_ints(bottom);
  if (t.size() != b.size()) throw std::invalid_argument("biword lines differ in length");
  Biword w;
  for (std::size_t k = 0; k < t.size(); ++k) w.push_back({t[k], b[k]});
  return w;
}

Filling parse_filling(const std::string& s) {
  std::vector<std::vector<int>> rows;
  for (const auto& row : split(s, ';')) rows.push_back(parse_ints(row));
  return Filling(rows);
}

std::string render_filling(const Filling& t, int n) {
  int rows = std::max<int>(n, static_cast<int>(t.shape.length()));
  int cols = 0;
  for (std::size_t r = 0; r < t.shape.length(); ++r) cols = std::max(cols, t.shape[r]);
  std::size_t w = std::to_string(rows).size();
  for (Cell u : t.cells()) w = std::max(w, std::to_string(t.at(u)).size());
  std::ostringstream os;
  for (int r = rows; r >= 1; --r) {
    std::string line = pad_left(std::to_string(r), w) + " |";
    for (int c = 1; c <= cols; ++c) {
      if (!t.has({c, r})) break;
      line += " " + pad_left(std::to_string(t.at({c, r})), w);
    }
    os << line << '\n';
  }
  os << std::string(w + 1, '-') << '+' << std::string(cols * (w + 1), '-') << '\n';
  return os.str();
}

std::string render_tableau(const Filling& t) {
  int rows = static_cast<int>(t.shape.support_length());
  int cols = rows > 0 ? t.shape[0] : 0;
  for (std::size_t r = 0; r < t.shape.length(); ++r) cols = std::max(cols, t.shape[r]);
  return draw(rows, cols, [&](int c, int r) { return t.has({c, r}) ? std::to_string(t.at({c, r})) : std::string(); });
}

std::string render_diagram(const Diagram& d) {
  return draw(d.max_row(), d.max_col(), [&](int c, int r) { return std::string(d.contains({c, r}) ? "#" : "."); });
}

std::string render_tabloid(const SnakeTabloid& u) {
  int rows = static_cast<int>(u.shape.length());
  int cols = 0;
  for (std::size_t r = 0; r < u.shape.length(); ++r) cols = std::max(cols, u.shape[r]);
  std::string body = draw(rows, cols, [&](int c, int r) {
    for (std::size_t i = 0; i < u.snakes.size(); ++i)
      if (u.snakes[i].contains({c, r})) return std::to_string(i + 1);
    return std::string();
  });
  return body + std::string(std::max(1, cols * 2 - 1), '-') + '\n';
}

std::string render_expansion(const BasisExpansion& e, std::size_t n) {
  if (e.terms.empty()) return "0\n";
  std::size_t w = 0;
  for (const auto& [a, c] : e.terms) w = std::max(w, coef_str(c).size());
  std::ostringstream os;
  for (const auto& [a, c] : e.terms) os << pad_left(coef_str(c), w) << "  " << to_string(e.basis) << at_length(a, n).str() << '\n';
  return os.str();
}

std::string render_expansion(const SchubertExpansion& e) {
  if (e.empty()) return "0\n";
  std::size_t w = 0;
  for (const auto& [p, c] : e) w = std::max(w, coef_str(c).size());
  std::ostringstream os;
  for (const auto& [p, c] : e) os << pad_left(coef_str(c), w) << "  schubert" << p.str() << '\n';
  return os.str();
}

std::string render_matrix(const Matrix& m) {
  std::size_t w = 1;
  for (const auto& row : m)
    for (int v : row) w = std::max(w, std::to_string(v).size());
  std::ostringstream os;
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << pad_left(std::to_string(row[j]), w);
    os << '\n';
  }
  return os.str();
}

}  // namespace flagkey::io
