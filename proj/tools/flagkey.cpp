#include <CLI11.hpp>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "flagkey/bases.hpp"
#include "flagkey/frsk.hpp"
#include "flagkey/io.hpp"
#include "flagkey/kohnert.hpp"
#include "flagkey/schubert.hpp"
#include "flagkey/snakes.hpp"
#include "flagkey/verify.hpp"

using namespace flagkey;
using io::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  int n = 0;
  int deg = -1;
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }


std::size_t ambient(const Options& o, const Composition& a) {
  std::size_t n = o.n > 0 ? static_cast<std::size_t>(o.n) : a.length();
  if (n < a.support_length()) throw UsageError("--n " + std::to_string(n) + " is smaller than " + a.str());
  return n;
}

// ------------------------------------------------------------ expand

int run_expand(const Options& o, const std::string& from_s, const std::string& to_s, const std::string& index_s) {
  BasisTag from = parse_basis(from_s), to = parse_basis(to_s);
  Composition b(io::parse_ints(index_s));
  std::size_t n = ambient(o, b);
  b = b.padded(n);

  if (to == BasisTag::Schubert) {
    if (from != BasisTag::HFlagged) throw UsageError("only h expands into the Schubert basis");
    SchubertExpansion e = h_schubert_expansion(b);
    if (o.json)
      emit({{"basis", "schubert"}, {"terms", io::to_json(e)}});
    else
      std::cout << io::render_expansion(e);
    return kPass;
  }
  if (from == BasisTag::Schubert) throw UsageError("Schubert indices are permutations; expand from h, key, atom or monomial");

  BasisExpansion e;
  e.basis = to;
  if (from == BasisTag::HFlagged && to == BasisTag::Key) {
    e = expand_h_into_keys(b, n);
  } else if (from == BasisTag::HFlagged && to == BasisTag::Atom) {
    e = expand_h_into_atoms(b, n);
  } else if (from == BasisTag::Key && to == BasisTag::HFlagged) {
    e = expand_key_into_h(b);
  } else {
    Polynomial p = basis_element(from, b, n);
    if (to == BasisTag::Monomial) {
      for (const auto& [a, c] : p.terms()) e.add(a, c);
    } else {
      for (const auto& [a, c] : express_in_basis(p, basis_family(to, b.total(), n))) e.add(a, c);
    }
  }
  if (o.json)
    emit(io::to_json(e, n));
  else
    std::cout << io::render_expansion(e, n);
  return kPass;
}

// ------------------------------------------------------------ rsk

int run_rsk(const Options& o, const std::string& matrix_s, const std::string& top_s, const std::string& bottom_s,
            bool flagged, bool inverse, const std::string& ins_s, const std::string& rec_s) {
  if (inverse) {
    if (ins_s.empty() || rec_s.empty()) throw UsageError("--inverse needs --insertion and --recording");
    TableauPair pq{io::parse_filling(ins_s), io::parse_filling(rec_s)};
    int n = o.n;
    if (n == 0)
      for (const Filling* t : {&pq.insertion, &pq.recording})
        for (Cell u : t->cells()) n = std::max({n, t->at(u), u.row});
    Matrix m = flagged ? frsk_inverse(pq, n) : rsk_inverse(pq, n);
    if (o.json)
      emit({{"matrix", io::to_json(m)}, {"biword", io::to_json(matrix_to_biword(m))}});
    else
      std::cout << io::render_matrix(m);
    return kPass;
  }

  Matrix m;
  if (!matrix_s.empty()) {
    m = io::parse_matrix(matrix_s);
  } else if (!top_s.empty() || !bottom_s.empty()) {
    m = biword_to_matrix(io::parse_biword(top_s, bottom_s), o.n);
  } else {
    throw UsageError("rsk needs --matrix or --top/--bottom");
  }
  if (o.n > 0 && static_cast<int>(m.size()) < o.n) {
    Matrix wide = zero_matrix(o.n);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) wide[i][j] = m[i][j];
    m = wide;
  }
  int n = static_cast<int>(m.size());
  if (flagged && !is_lower_triangular(m)) throw UsageError("flagged RSK needs a lower triangular matrix");
  TableauPair pq = flagged ? frsk(m) : rsk(m);
  if (o.json) {
    emit({{"matrix", io::to_json(m)},
          {"biword", io::to_json(matrix_to_biword(m))},
          {"flagged", flagged},
          {"insertion", io::to_json(pq.insertion)},
          {"recording", io::to_json(pq.recording)}});
  } else if (flagged) {
    std::cout << "S (SSKT)\n" << io::render_filling(pq.insertion, n) << "\nT (reverse SSAF)\n"
              << io::render_filling(pq.recording, n);
  } else {
    std::cout << "P (reverse SSYT)\n" << io::render_tableau(pq.insertion) << "\nQ (SSYT)\n"
              << io::render_tableau(pq.recording);
  }
  return kPass;
}

// ------------------------------------------------------------ kohnert

int run_kohnert(const Options& o, const std::string& index_s, bool list) {
  Composition a(io::parse_ints(index_s));
  std::size_t n = ambient(o, a);
  a = a.padded(n);
  Diagram d = build_Da(a, n);
  auto closure = kohnert_closure(d);
  Polynomial p = kohnert_polynomial(d);
  if (o.json) {
    json j{{"index", io::to_json(a)}, {"diagram", io::to_json(d)}, {"size", closure.size()}, {"polynomial", io::to_json(p)}};
    if (list) {
      json all = json::array();
      for (const Diagram& t : closure) all.push_back({{"cells", io::to_json(t)["cells"]}, {"phi", io::to_json(phi(t, a))}});
      j["closure"] = all;
    }
    emit(j);
    return kPass;
  }
  std::cout << "D" << a.str() << '\n' << io::render_diagram(d) << '\n';
  std::cout << "closure size " << closure.size() << '\n';
  std::cout << "polynomial " << p.str() << '\n';
  if (list)
    for (const Diagram& t : closure) std::cout << '\n' << io::render_diagram(t);
  return kPass;
}

// ------------------------------------------------------------ snakes

int run_snakes(const Options& o, const std::string& shape_s, bool list) {
  Composition b(io::parse_ints(shape_s));
  std::size_t n = ambient(o, b);
  b = b.padded(n);
  auto tabloids = enumerate_special_snake_tabloids(b);
  BasisExpansion e = expand_key_into_h(b);
  if (o.json) {
    json j{{"shape", io::to_json(b)}, {"count", tabloids.size()}, {"expansion", io::to_json(e, n)}};
    if (list) {
      json all = json::array();
      for (const auto& u : tabloids) all.push_back(io::to_json(u));
      j["tabloids"] = all;
    }
    emit(j);
    return kPass;
  }
  std::cout << tabloids.size() << " special snake tabloids of shape " << b.str() << '\n';
  std::cout << "key" << b.str() << " =\n" << io::render_expansion(e, n);
  if (list)
    for (const auto& u : tabloids)
      std::cout << "\nweight " << u.weight.str() << " sign " << (u.sign > 0 ? "+1" : "-1") << '\n'
                << io::render_tabloid(u);
  return kPass;
}

// ------------------------------------------------------------ verify

int run_verify(const Options& o, const std::string& suite, bool timing) {
  verify::Bounds bounds;
  if (o.n > 0) bounds.n = o.n;
  if (o.deg >= 0) bounds.deg = o.deg;
  std::vector<std::string> names;
  if (suite == "all") {
    names = verify::suite_names();
  } else {
    auto known = verify::suite_names();
    if (std::find(known.begin(), known.end(), suite) == known.end()) throw UsageError("unknown suite: " + suite);
    names = {suite};
  }
  bool ok = true;
  json reports = json::array();
  for (const auto& name : names) {
    verify::VerifyReport r = verify::run_suite(name, bounds);
    ok = ok && r.passed();
    if (o.json) {
      json failures = json::array();
      for (const auto& f : r.failures) failures.push_back({{"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
      json report{{"suite", r.suite}, {"passed", r.passed()}, {"instances", r.instances}, {"failures", failures}};
      if (timing) report["seconds"] = r.seconds;
      reports.push_back(report);
    } else {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(14) << r.suite << std::right
                << r.instances << " checks, " << r.failures.size() << " failures";
      if (timing) std::cout << ", " << std::fixed << std::setprecision(2) << r.seconds << "s";
      std::cout << '\n';
      for (const auto& f : r.failures)
        std::cout << "  " << f.inputs << "\n    expected: " << f.expected << "\n    got:      " << f.got << '\n';
    }
  }
  if (o.json) emit(suite == "all" ? reports : reports[0]);
  return ok ? kPass : kFail;
}

// ------------------------------------------------------------ render

int run_render(const Options& o, const std::string& filling_s, const std::string& diagram_s, const std::string& index_s,
               bool tableau) {
  if (!filling_s.empty()) {
    Filling t = io::parse_filling(filling_s);
    if (o.json) {
      emit(io::to_json(t));
    } else if (tableau) {
      std::cout << io::render_tableau(t);
    } else {
      int n = std::max<int>(o.n, static_cast<int>(t.shape.length()));
      std::cout << io::render_filling(t, n);
    }
    return kPass;
  }
  Diagram d;
  if (!diagram_s.empty()) {
    std::vector<Cell> cells;
    std::stringstream ss(diagram_s);
    std::string piece;
    while (std::getline(ss, piece, ';')) {
      auto v = io::parse_ints(piece);
      if (v.size() != 2) throw UsageError("cells are written c,r and separated by ';'");
      cells.push_back({v[0], v[1]});
    }
    d = Diagram(cells);
  } else if (!index_s.empty()) {
    d = key_diagram(Composition(io::parse_ints(index_s)));
  } else {
    throw UsageError("render needs --filling, --cells or --index");
  }
  if (o.json)
    emit(io::to_json(d));
  else
    std::cout << io::render_diagram(d);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flagged homogeneous polynomials, key polynomials, flagged RSK, snakes and Schubert expansions"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit JSON");
  app.add_option("--n", o.n, "Number of variables (default: the index length)");
  app.add_option("--deg", o.deg, "Degree bound for verify suites");

  std::string from = "h", to = "key", index;
  auto* expand = app.add_subcommand("expand", "Expand a basis element in another basis");
  expand->add_option("--from", from, "h, key, atom or monomial")->capture_default_str();
  expand->add_option("--to", to, "h, key, atom, monomial or schubert")->capture_default_str();
  expand->add_option("index", index, "Weak composition, e.g. 1,0,2")->required();

  std::string matrix, top, bottom, insertion, recording;
  bool flagged = false, inverse = false;
  auto* rsk_cmd = app.add_subcommand("rsk", "Classical or flagged RSK and their inverses");
  rsk_cmd->add_option("--matrix", matrix, "Rows separated by ';', entries by ','");
  rsk_cmd->add_option("--top", top, "Top line of a biword");
  rsk_cmd->add_option("--bottom", bottom, "Bottom line of a biword");
  rsk_cmd->add_flag("--flagged", flagged, "Flagged insertion into SSKT");
  rsk_cmd->add_flag("--inverse", inverse, "Recover the matrix from a pair");
  rsk_cmd->add_option("--insertion", insertion, "Insertion filling, rows bottom to top separated by ';'");
  rsk_cmd->add_option("--recording", recording, "Recording filling, rows bottom to top separated by ';'");

  std::string kindex;
  bool klist = false;
  auto* kohnert = app.add_subcommand("kohnert", "Kohnert closure of D_a and its character");
  kohnert->add_option("index", kindex, "Weak composition")->required();
  kohnert->add_flag("--list", klist, "List every diagram of the closure");

  std::string shape;
  bool slist = false;
  auto* snakes = app.add_subcommand("snakes", "Special snake tabloids and the key to h expansion");
  snakes->add_option("shape", shape, "Weak composition")->required();
  snakes->add_flag("--list", slist, "List every tabloid");

  std::string suite;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  bool timing = false;
  verify_cmd->add_option("suite", suite, "Suite name or 'all'")->required();
  verify_cmd->add_flag("--timing", timing, "Report wall time (output is then not reproducible)");

  std::string rfilling, rcells, rindex;
  bool rtableau = false;
  auto* render = app.add_subcommand("render", "Draw a filling or a diagram");
  render->add_option("--filling", rfilling, "Rows bottom to top separated by ';'");
  render->add_flag("--tableau", rtableau, "Draw the filling as a Ferrers tableau without basement");
  render->add_option("--cells", rcells, "Cells c,r separated by ';'");
  render->add_option("--index", rindex, "Weak composition; draws its key diagram");

  for (auto* sub : {expand, rsk_cmd, kohnert, snakes, verify_cmd, render}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*expand) return run_expand(o, from, to, index);
    if (*rsk_cmd) return run_rsk(o, matrix, top, bottom, flagged, inverse, insertion, recording);
    if (*kohnert) return run_kohnert(o, kindex, klist);
    if (*snakes) return run_snakes(o, shape, slist);
    if (*verify_cmd) return run_verify(o, suite, timing);
    if (*render) return run_render(o, rfilling, rcells, rindex, rtableau);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
