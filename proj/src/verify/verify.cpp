#include "flagkey/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "flagkey/bases.hpp"
#include "flagkey/frsk.hpp"
#include "flagkey/kohnert.hpp"
#include "flagkey/oracles.hpp"
#include "flagkey/schubert.hpp"
#include "flagkey/snakes.hpp"

namespace flagkey::verify {

void VerifyReport::merge(const VerifyReport& other) {
  instances += other.instances;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

namespace {

// ------------------------------------------------------------ descriptions

std::string describe(const std::string& s) { return s; }
std::string describe(int v) { return std::to_string(v); }
std::string describe(std::size_t v) { return std::to_string(v); }
std::string describe(const Integer& v) { return v.str(); }
std::string describe(const Composition& a) { return a.str(); }
std::string describe(const Polynomial& p) { return p.str(); }

std::string describe(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << (i ? ";" : "");
    for (std::size_t j = 0; j < m[i].size(); ++j) os << (j ? "," : "") << m[i][j];
  }
  return os.str();
}

std::string describe(const Filling& t) {
  std::ostringstream os;
  for (std::size_t r = 0; r < t.shape.length(); ++r) {
    os << (r ? ";" : "");
    if (r < t.rows.size())
      for (std::size_t c = 0; c < t.rows[r].size(); ++c) os << (c ? "," : "") << t.rows[r][c];
  }
  return os.str();
}

std::string describe(const Diagram& d) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Cell u : d) {
    os << (first ? "" : " ") << '(' << u.col << ',' << u.row << ')';
    first = false;
  }
  os << '}';
  return os.str();
}

std::string describe(const std::map<Composition, Integer>& m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [a, c] : m) {
    os << (first ? "" : ", ") << a.str() << ':' << c;
    first = false;
  }
  os << '}';
  return os.str();
}

// ------------------------------------------------------------ recording

template <class A, class B>
void expect_eq(VerifyReport& r, const std::string& inputs, const A& expected, const B& got) {
  ++r.instances;
  if (!(expected == got)) r.failures.push_back({inputs, describe(expected), describe(got)});
}

void expect(VerifyReport& r, const std::string& inputs, bool ok, const std::string& claim) {
  ++r.instances;
  if (!ok) r.failures.push_back({inputs, claim, "violated"});
}

// Runs body, turning an escaped exception into a failure for `inputs`.
void guarded(VerifyReport& r, const std::string& inputs, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    ++r.instances;
    r.failures.push_back({inputs, "no exception", std::string("threw: ") + e.what()});
  }
}

std::vector<Composition> up_to(int max_total, std::size_t n) {
  std::vector<Composition> out;
  for (int k = 0; k <= max_total; ++k)
    for (auto& b : compositions(k, n)) out.push_back(b);
  return out;
}

std::string with_n(const Composition& a, std::size_t n) { return a.str() + " n=" + std::to_string(n); }

Polynomial generating_function(const Composition& shape, int n, Flavor flavor) {
  Polynomial out;
  for (const Filling& t : enumerate(shape, n, flavor)) out += Polynomial::monomial(t.weight(n));
  return out;
}

// ------------------------------------------------------------ worked examples

Biword letters(const std::vector<int>& top, const std::vector<int>& bottom) {
  Biword w;
  for (std::size_t k = 0; k < top.size(); ++k) w.push_back({top[k], bottom[k]});
  return w;
}

const std::vector<int> kTop{1, 3, 3, 4, 4, 4, 5, 5, 5, 5, 6, 7, 7};
const std::vector<int> kBottomCorrected{1, 3, 2, 4, 3, 1, 4, 3, 3, 2, 1, 6, 3};
const std::vector<int> kBottomPrinted{1, 3, 2, 4, 3, 1, 4, 4, 3, 2, 1, 6, 3};

Filling example_sskt() { return Filling({{1}, {}, {3, 3, 2}, {4, 4, 3, 3, 3, 1}, {2}, {}, {6, 1}}); }
Filling example_rssaf() { return Filling({{1}, {}, {3, 3, 5}, {4, 4, 4, 5, 5, 6}, {5}, {}, {7, 7}}); }
Filling example_p() { return Filling({{6, 4, 3, 3, 3, 1}, {4, 3, 2}, {3, 1}, {2}, {1}}); }
Filling example_q() { return Filling({{1, 3, 4, 5, 5, 6}, {3, 4, 5}, {4, 7}, {5}, {7}}); }
const Composition kExampleShape{1, 0, 3, 6, 1, 0, 2};
const Composition kSnakeShape{3, 7, 0, 2, 5, 8, 6};

Diagram cells_of(std::initializer_list<Cell> cells) { return Diagram(std::vector<Cell>(cells)); }

SnakeTabloid from_labels(const std::vector<std::vector<int>>& rows) {
  SnakeTabloid u;
  u.snakes.resize(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      u.snakes[rows[r][c] - 1].insert({static_cast<int>(c) + 1, static_cast<int>(r) + 1});
  return u;
}

const SnakeTabloid* find_tabloid(const std::vector<SnakeTabloid>& all, const SnakeTabloid& u) {
  for (const auto& v : all)
    if (v.snakes == u.snakes) return &v;
  return nullptr;
}

void check_tabloid(VerifyReport& r, const std::string& name, const std::vector<SnakeTabloid>& all,
                   const SnakeTabloid& labels, const Composition& weight, int sign) {
  const SnakeTabloid* u = find_tabloid(all, labels);
  expect(r, name, u != nullptr, "is a special snake tabloid");
  if (!u) return;
  expect_eq(r, name + " weight", weight, u->weight);
  expect_eq(r, name + " sign", sign, u->sign);
}

// ------------------------------------------------------------ suites

VerifyReport suite_hbasis(int n, int deg) {
  VerifyReport r;
  auto nn = static_cast<std::size_t>(n);
  for (int d = 0; d <= deg; ++d) {
    std::string at = "degree " + std::to_string(d) + " n=" + std::to_string(n);
    guarded(r, at, [&] {
      BasisFamily family = basis_family(BasisTag::HFlagged, d, nn);
      expect_eq(r, at + " family size", compositions(d, nn).size(), family.size());
      for (const auto& [a, p] : family) {
        expect_eq(r, "leading coefficient of h" + a.str(), Integer(1), p.coefficient(a));
        for (const auto& [e, c] : p.terms())
          if (e.stripped() != a.stripped())
            expect(r, "h" + a.str() + " monomial " + e.str(), dominance_extension_less(a, e),
                   "lies strictly later than the index");
      }
      for (const auto& b : compositions(d, nn)) {
        Polynomial mono = Polynomial::monomial(b);
        auto coefs = express_in_basis(mono, family);
        std::map<Composition, Polynomial> lookup;
        for (const auto& [a, p] : family) lookup.emplace(a.stripped(), p);
        Polynomial back = combine(coefs, [&](const Composition& a) { return lookup.at(a.stripped()); });
        expect_eq(r, "x^" + b.str() + " in the h basis", mono, back);
      }
    });
  }
  return r;
}

VerifyReport suite_stable(int n, int deg) {
  VerifyReport r;
  for (std::size_t m = 1; m <= static_cast<std::size_t>(n); ++m)
    for (const auto& a : up_to(deg, m)) {
      if (support(a).size() > 2) continue;
      guarded(r, with_n(a, m), [&] {
        Polynomial lifted = h_flagged(a.prepend_zeros(m), 2 * m).truncate_variables(m);
        expect_eq(r, "0^" + std::to_string(m) + "x" + with_n(a, m), oracle::h_symmetric(a.sorted(), m), lifted);
      });
    }
  return r;
}

VerifyReport suite_kohnert(int n, int deg) {
  VerifyReport r;
  for (std::size_t m = 1; m <= static_cast<std::size_t>(n); ++m)
    for (const auto& a : up_to(deg, m))
      guarded(r, with_n(a, m), [&] {
        Diagram da = build_Da(a, m);
        expect_eq(r, "character " + with_n(a, m), h_flagged(a, m), kohnert_polynomial(da));
        std::set<Matrix> images;
        for (const Diagram& t : kohnert_closure(da)) {
          Matrix l = phi(t, a);
          expect(r, "phi " + describe(t), is_lower_triangular(l) && row_sums(l) == a, "lower triangular with row sums a");
          expect_eq(r, "phi inverse " + describe(t), t, phi_inverse(l));
          images.insert(l);
        }
        std::size_t expected = 0;
        for (const Matrix& l : enumerate_matrices(static_cast<int>(m), a.total(), true))
          if (row_sums(l) == a) ++expected;
        expect_eq(r, "phi image size " + with_n(a, m), expected, images.size());
      });
  return r;
}

VerifyReport suite_expand(int n, int deg) {
  VerifyReport r;
  for (std::size_t m = 1; m <= static_cast<std::size_t>(n); ++m)
    for (const auto& b : up_to(deg, m))
      guarded(r, with_n(b, m), [&] {
        expect_eq(r, "key by operators " + with_n(b, m), oracle::key_by_operators(b, m), key_polynomial(b, m));
        expect_eq(r, "atom by operators " + with_n(b, m), oracle::atom_by_operators(b, m), demazure_atom(b, m));
        auto keys = expand_h_into_keys(b, m);
        auto atoms = expand_h_into_atoms(b, m);
        for (const auto& [a, c] : keys.terms) expect(r, "key coefficient " + a.str() + " of h" + b.str(), c > 0, "positive");
        for (const auto& [a, c] : atoms.terms) expect(r, "atom coefficient " + a.str() + " of h" + b.str(), c > 0, "positive");
        expect_eq(r, "h into keys " + with_n(b, m), h_flagged(b, m), to_polynomial(keys, m));
        expect_eq(r, "h into atoms " + with_n(b, m), h_flagged(b, m), to_polynomial(atoms, m));
      });
  return r;
}

VerifyReport suite_kostka(int n, int deg) {
  VerifyReport r;
  for (std::size_t m = 1; m <= static_cast<std::size_t>(n); ++m)
    for (int k = 0; k <= deg; ++k)
      for (const auto& lam : partitions(k, m))
        for (const auto& b : compositions(k, m)) {
          std::string at = "lambda=" + lam.str() + " b=" + b.str();
          guarded(r, at, [&] {
            Integer expected = oracle::kostka(lam, b);
            Integer sum = 0;
            for (const auto& a : compositions(k, m))
              if (a.sorted() == lam) sum += ktilde(a, b, m);
            expect_eq(r, "sum of lower coefficients " + at, expected, sum);
            expect_eq(r, "upper coefficient " + at, expected, ktilde_upper(lam, b, m));
          });
        }
  return r;
}

VerifyReport suite_cauchy(int n, int deg) {
  VerifyReport r;
  auto nn = static_cast<std::size_t>(n);
  guarded(r, "n=" + std::to_string(n), [&] {
    Polynomial lhs = oracle::cauchy_lhs(nn, deg);
    std::vector<int> to_y(nn);
    for (std::size_t i = 0; i < nn; ++i) to_y[i] = static_cast<int>(nn + i + 1);
    for (int d = 0; d <= deg; ++d) {
      Polynomial rhs;
      for (const auto& a : compositions(d, nn))
        rhs += generating_function(a, n, Flavor::RSSAF) * key_polynomial(a, nn).rename_variables(to_y);
      expect_eq(r, "degree " + std::to_string(d), lhs.homogeneous_part(2 * d), rhs);
    }
  });
  return r;
}

VerifyReport suite_frsk(int n, int deg) {
  VerifyReport r;
  auto all = enumerate_matrices(n, deg, true);
  std::set<std::pair<Filling, Filling>> images;
  for (const Matrix& l : all)
    guarded(r, describe(l), [&] {
      std::string at = describe(l);
      TableauPair st = frsk(l);
      expect(r, at, is_member(st.insertion, Flavor::SSKT, n), "insertion filling is an SSKT");
      expect(r, at, is_member(st.recording, Flavor::RSSAF, n), "recording filling is a reverse SSAF");
      expect_eq(r, "insertion weight " + at, col_sums(l), st.insertion.weight(n));
      expect_eq(r, "recording weight " + at, row_sums(l), st.recording.weight(n));
      TableauPair pq = rsk(l);
      expect_eq(r, "tau after flagged RSK " + at, pq.insertion, tau(st.insertion));
      expect_eq(r, "rho after flagged RSK " + at, pq.recording, rho(st.recording));
      expect_eq(r, "inverse " + at, l, frsk_inverse(st, n));
      Filling t = rho_inverse(pq.recording, n);
      expect_eq(r, "rho left inverse " + at, st.recording, t);
      expect_eq(r, "tau left inverse " + at, st.insertion, tau_dagger(pq.insertion, t.shape));
      images.insert({st.insertion, st.recording});
    });
  expect_eq(r, "distinct images", all.size(), images.size());
  return r;
}

VerifyReport suite_snakes(int n, int deg) {
  VerifyReport r;
  for (std::size_t m = 1; m <= static_cast<std::size_t>(n); ++m)
    for (const auto& b : up_to(deg, m))
      guarded(r, with_n(b, m), [&] {
        expect_eq(r, "key from tabloids " + with_n(b, m), key_polynomial(b, m), to_polynomial(expand_key_into_h(b), m));
      });
  auto nn = static_cast<std::size_t>(n);
  for (int k = 0; k <= deg; ++k)
    guarded(r, "matrix degree " + std::to_string(k), [&] {
      auto comps = compositions(k, nn);
      std::map<Composition, BasisExpansion> inverse;
      for (const auto& b : comps) inverse.emplace(b, expand_key_into_h(b));
      for (const auto& c : comps)
        for (const auto& b : comps) {
          Integer sum = 0;
          for (const auto& a : comps) sum += ktilde(c, a, nn) * inverse.at(b)[a];
          expect_eq(r, "product entry " + c.str() + "," + b.str(), Integer(c == b ? 1 : 0), sum);
        }
    });
  return r;
}

VerifyReport suite_cancelfree(int deg) {
  VerifyReport r;
  for (int k = 1; k <= deg; ++k)
    for (const auto& mu : partitions(k, k))
      guarded(r, "mu=" + mu.str(), [&] {
        std::map<Composition, int> per_weight;
        std::map<Composition, Integer> per_sorted;
        for (const auto& u : enumerate_special_snake_tabloids(mu.reversed())) {
          ++per_weight[u.weight];
          per_sorted[u.weight.sorted()] += u.sign;
        }
        for (const auto& [w, count] : per_weight)
          expect(r, "mu=" + mu.str() + " weight " + w.str(), count == 1, "at most one tabloid");
        for (const auto& lam : partitions(k, k))
          expect_eq(r, "rim hook tabloids lambda=" + lam.str() + " mu=" + mu.str(),
                    oracle::er_inverse_kostka(lam, mu), per_sorted[lam]);
      });
  guarded(r, "pair of shape (1,1,2,2)", [&] {
    auto all = enumerate_special_snake_tabloids({1, 1, 2, 2});
    const SnakeTabloid* p1 = find_tabloid(all, from_labels({{1}, {2}, {2, 2}, {4, 4}}));
    const SnakeTabloid* p2 = find_tabloid(all, from_labels({{1}, {1}, {3, 3}, {4, 3}}));
    expect(r, "pair of shape (1,1,2,2)", p1 && p2, "both are special snake tabloids");
    if (!p1 || !p2) return;
    expect_eq(r, "pair weights sorted", p1->weight.sorted(), p2->weight.sorted());
    expect(r, "pair weights", p1->weight != p2->weight, "differ as compositions");
    expect_eq(r, "pair signs", -p1->sign, p2->sign);
  });
  return r;
}

VerifyReport suite_involution(int n, int deg) {
  VerifyReport r;
  long pairs = 0;
  for (std::size_t m = 1; m <= static_cast<std::size_t>(n); ++m)
    for (const auto& b : up_to(deg, m)) {
      if (b[0] == 0) continue;
      int mm = static_cast<int>(m);
      guarded(r, with_n(b, m), [&] {
        for (const auto& [s, t] : enumerate_F(b, mm)) {
          ++pairs;
          std::string at = with_n(b, m) + " S=" + describe(s) + " T=" + describe(t);
          auto [s1, t1] = iota(s, t, mm);
          expect_eq(r, "filling kept " + at, t, t1);
          expect_eq(r, "sign flipped " + at, -sign(s), sign(s1));
          auto [s2, t2] = iota(s1, t1, mm);
          expect_eq(r, "involution " + at, s, s2);
        }
        Polynomial signed_sum;
        for (const auto& s : special_snakes(b)) {
          if (s.empty()) continue;
          for (const auto& f : gset_enumerate(s, b, mm)) signed_sum += Polynomial::monomial(f.weight(m)) * sign(s);
        }
        expect_eq(r, "signed sum " + with_n(b, m), key_polynomial(b, m), signed_sum);
      });
    }
  expect(r, "pairs enumerated", pairs > 0, "at least one pair");
  return r;
}

VerifyReport suite_schubert(int n, int deg) {
  VerifyReport r;
  for (std::size_t m = 1; m <= static_cast<std::size_t>(n); ++m) {
    for (const auto& b : up_to(deg, m))
      guarded(r, with_n(b, m), [&] {
        auto e = h_schubert_expansion(b);
        for (const auto& [w, c] : e) expect(r, "coefficient of " + w.str() + " in h" + b.str(), c > 0, "positive");
        expect_eq(r, "h in Schubert basis " + with_n(b, m), h_flagged(b, m), to_polynomial(e));
      });
    for (const auto& a : up_to(deg, m))
      for (const auto& b : up_to(deg - a.total(), m))
        guarded(r, "h" + a.str() + " h" + b.str(), [&] {
          auto e = h_product_expansion(a, b);
          for (const auto& [w, c] : e)
            expect(r, "coefficient of " + w.str() + " in h" + a.str() + " h" + b.str(), c > 0, "positive");
          expect_eq(r, "product h" + a.str() + " h" + b.str(), h_flagged(a, m) * h_flagged(b, m), to_polynomial(e));
        });
  }
  for (int k = 1; k <= n; ++k)
    for (int m = 0; m <= deg; ++m)
      guarded(r, "grassmannian", [&] {
        std::vector<int> b(k, 0);
        b[k - 1] = m;
        expect_eq(r, "single part " + Composition(b).str(), h_flagged(Composition(b)),
                  schubert_polynomial(grassmannian_perm(Composition{m}, k)));
      });
  return r;
}

VerifyReport suite_examples() {
  VerifyReport r = regressions();
  r.merge(thirteen_letter_example(false));
  r.merge(thirteen_letter_example(true));

  guarded(r, "fillings", [&] {
    expect_eq(r, "diagram size", std::size_t(13), key_diagram(kExampleShape).size());
    auto s = statistics(example_sskt(), 7);
    expect(r, "SSKT statistics", s.maj == 0 && s.coinv == 0 && s.attacking_violations == 0, "maj = coinv = 0, non-attacking");
    auto t = statistics(example_rssaf(), 7);
    expect(r, "reverse SSAF statistics", t.comaj == 0 && t.inv == 0 && t.attacking_violations == 0,
           "comaj = inv = 0, non-attacking");
    expect(r, "SSKT membership", is_member(example_sskt(), Flavor::SSKT, 7), "is an SSKT");
    expect(r, "reverse SSYT membership", is_member(example_p(), Flavor::RSSYT, 7), "is a reverse SSYT");
    expect_eq(r, "key of (0,1)", Polynomial::variable(1) + Polynomial::variable(2), key_polynomial({0, 1}, 2));
  });

  guarded(r, "insertions", [&] {
    InsertTrace ct;
    Filling p = rsk_insert(Filling({{6, 4, 3, 3, 2, 1}, {4, 3, 1}, {3}, {2}, {1}}), 3, &ct);
    expect_eq(r, "classical insertion result", example_p(), p);
    expect_eq(r, "classical insertion bumps", describe(Composition{2, 1}), describe(Composition(ct.bumped)));
    InsertTrace ft;
    Filling s = flagged_insert(Filling({{1}, {}, {3, 3, 1}, {4, 4, 3, 3, 2, 1}, {2}, {}, {6}}), 3, 7, &ft);
    expect_eq(r, "flagged insertion result", example_sskt(), s);
    expect_eq(r, "flagged insertion bumps", describe(Composition{2, 1}), describe(Composition(ft.bumped)));
    std::vector<int> cols;
    for (Cell u : ft.placed) cols.push_back(u.col);
    expect_eq(r, "flagged insertion columns", describe(Composition{5, 3, 2}), describe(Composition(cols)));
    InsertTrace one;
    Filling col = flagged_insert(Filling({{1}, {2}}), 3, 3, &one);
    expect_eq(r, "one-iteration insertion", Filling({{1}, {2}, {3}}), col);
    expect_eq(r, "one-iteration count", 1, one.iterations);
  });

  guarded(r, "column maps", [&] {
    expect_eq(r, "tau", example_p(), tau(example_sskt()));
    expect_eq(r, "tau dagger", example_sskt(), tau_dagger(example_p(), kExampleShape));
    expect_eq(r, "rho", example_q(), rho(example_rssaf()));
    expect_eq(r, "rho inverse", example_rssaf(), rho_inverse(example_q(), 7));
  });

  guarded(r, "Kohnert diagram of (1,0,3,6,1,0,2)", [&] {
    Diagram d = build_Da(kExampleShape);
    Diagram expected;
    int c = 0;
    for (std::size_t i = 0; i < kExampleShape.length(); ++i)
      for (int k = 0; k < kExampleShape[i]; ++k) expected.insert({++c, static_cast<int>(i) + 1});
    expect_eq(r, "D_a", expected, d);
  });

  guarded(r, "snakes", [&] {
    Diagram snake = cells_of({{1, 1}, {2, 1}, {3, 1}, {7, 2}, {2, 4}, {3, 5}, {4, 5}, {5, 5}, {5, 7}, {6, 7}});
    expect(r, "snake of (3,7,0,2,5,8,6)", is_snake(snake, kSnakeShape), "is a snake");
    Diagram hook = cells_of({{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 3}, {5, 3}, {5, 4}, {6, 4}, {6, 5}, {7, 5}});
    expect(r, "rim hook of (8,7,6,5,3,2)", rim_hook_check(hook, {8, 7, 6, 5, 3, 2}), "is a rim hook");

    Filling g({{1, 1, 1}, {2, 2, 2, 2, 2, 1, 1}, {}, {1, 1}, {4, 3, 1, 1, 1}, {6, 5, 4, 4, 3, 2, 2, 2}, {7, 7, 3, 1, 1, 1}});
    Diagram gs = cells_of({{1, 1}, {2, 1}, {3, 1}, {3, 5}, {4, 5}, {5, 5}, {5, 7}, {6, 7}});
    bool ones = true;
    for (Cell u : gs) ones = ones && g.at(u) == 1;
    Composition rest_shape = *residual_shape(gs, kSnakeShape);
    Filling rest = Filling::blank(rest_shape);
    for (Cell u : rest.cells()) rest.at_mut(u) = g.at(u);
    expect(r, "member of G(S)", ones && is_special_snake(gs, kSnakeShape) && is_member(rest, Flavor::SSKT, 7),
           "1 on the snake and an SSKT elsewhere");

    Filling t({{1, 1, 1}, {2, 2, 2, 1, 1, 1, 1}, {}, {1, 1}, {4, 3, 1, 1, 1}, {6, 5, 4, 4, 4, 4, 3, 1}, {7, 7, 3, 3, 3, 2}});
    Diagram left = cells_of({{1, 1}, {2, 1}, {3, 1}, {3, 5}, {4, 5}, {5, 5}});
    Diagram right = left;
    right.insert({6, 2});
    right.insert({7, 2});
    expect(r, "S-attacks on the left configuration", !s_attacks(left, t).empty(), "nonempty");
    expect_eq(r, "iota left to right", right, iota(left, t, 7).first);
    expect_eq(r, "iota right to left", left, iota(right, t, 7).first);
  });
  return r;
}

struct Suite {
  int n;
  int deg;
  std::function<VerifyReport(int, int)> run;
};

const std::map<std::string, Suite>& registry() {
  static const std::map<std::string, Suite> suites{
      {"hbasis", {3, 4, suite_hbasis}},
      {"stable", {3, 4, suite_stable}},
      {"kohnert", {3, 4, suite_kohnert}},
      {"expand", {3, 4, suite_expand}},
      {"kostka", {3, 4, suite_kostka}},
      {"cauchy", {3, 4, suite_cauchy}},
      {"frsk", {3, 4, suite_frsk}},
      {"snakes", {3, 5, suite_snakes}},
      {"cancelfree", {0, 6, [](int, int deg) { return suite_cancelfree(deg); }}},
      {"involution", {3, 4, suite_involution}},
      {"schubert", {3, 4, suite_schubert}},
      {"paper-figures", {0, 0, [](int, int) { return suite_examples(); }}},
  };
  return suites;
}

}  // namespace

VerifyReport thirteen_letter_example(bool as_printed) {
  VerifyReport r;
  std::string tag = as_printed ? "thirteen-letter word as printed" : "thirteen-letter word";
  guarded(r, tag, [&] {
    Matrix a = biword_to_matrix(letters(kTop, as_printed ? kBottomPrinted : kBottomCorrected), 7);
    expect_eq(r, tag + ": column sums", example_p().weight(7), col_sums(a));
    TableauPair classical = rsk(a);
    expect_eq(r, tag + ": RSK insertion", example_p(), classical.insertion);
    expect_eq(r, tag + ": RSK recording", example_q(), classical.recording);
    if (!is_lower_triangular(a)) {
      expect(r, tag, false, "lower triangular");
      return;
    }
    TableauPair flagged = frsk(a);
    expect_eq(r, tag + ": flagged insertion", example_sskt(), flagged.insertion);
    expect_eq(r, tag + ": flagged recording", example_rssaf(), flagged.recording);
    expect_eq(r, tag + ": flagged inverse", a, frsk_inverse(flagged, 7));
  });
  return r;
}

VerifyReport regressions() {
  VerifyReport r;
  guarded(r, "h_11 in two variables", [&] {
    auto c = express_in_basis(oracle::h_symmetric({1, 1}, 2), basis_family(BasisTag::HFlagged, 2, 2));
    expect_eq(r, "h_11 in two variables",
              std::map<Composition, Integer>{{{0, 2}, 1}, {{1, 1}, 1}, {{2}, -1}}, c);
  });
  guarded(r, "square of h(0,1)", [&] {
    Polynomial sq = h_flagged({0, 1}) * h_flagged({0, 1});
    auto c = express_in_basis(sq, basis_family(BasisTag::HFlagged, 2, 2));
    expect_eq(r, "square of h(0,1)", std::map<Composition, Integer>{{{0, 2}, 1}, {{1, 1}, 1}, {{2}, -1}}, c);
  });
  guarded(r, "tabloids of (3,7,0,2,5,8,6)", [&] {
    auto all = enumerate_special_snake_tabloids(kSnakeShape);
    check_tabloid(r, "first tabloid", all,
                  from_labels({{1, 1, 1}, {2, 2, 2, 2, 2, 2, 1}, {}, {4, 1}, {4, 2, 1, 1, 1}, {6, 6, 6, 6, 4, 2, 2, 2},
                               {4, 4, 4, 4, 1, 1}}),
                  {10, 10, 0, 7, 0, 4, 0}, -1);
    check_tabloid(r, "second tabloid", all,
                  from_labels({{1, 1, 1}, {2, 2, 2, 2, 2, 1, 1}, {}, {4, 4}, {5, 4, 1, 1, 1}, {6, 4, 4, 4, 4, 4, 4, 4},
                               {7, 7, 7, 4, 2, 2}}),
                  {8, 7, 0, 11, 1, 1, 3}, 1);
  });
  guarded(r, "opposite signs in shape (2,4,3)", [&] {
    auto all = enumerate_special_snake_tabloids({2, 4, 3});
    check_tabloid(r, "first of the pair", all, from_labels({{1, 1}, {2, 2, 2, 1}, {2, 1, 1}}), {5, 4, 0}, -1);
    check_tabloid(r, "second of the pair", all, from_labels({{1, 1}, {2, 1, 1, 1}, {2, 2, 2}}), {5, 4, 0}, 1);
  });
  expect(r, "(0,6,0,1,2,8,4) below (3,7,0,2,5,8,6)", key_poset_leq({0, 6, 0, 1, 2, 8, 4}, kSnakeShape), "holds");
  expect(r, "(0,6,0,1,5,8,2) below (3,7,0,2,5,8,6)", !key_poset_leq({0, 6, 0, 1, 5, 8, 2}, kSnakeShape), "fails");
  guarded(r, "Kohnert moves", [&] {
    expect_eq(r, "Kohnert moves", std::size_t(3),
              kohnert_moves(cells_of({{2, 4}, {1, 3}, {2, 3}, {3, 3}, {3, 2}})).size());
  });
  return r;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, s] : registry()) out.push_back(name);
  return out;
}

VerifyReport run_suite(const std::string& name, const Bounds& bounds) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite: " + name);
  const Suite& s = it->second;
  auto start = std::chrono::steady_clock::now();
  VerifyReport r;
  try {
    r = s.run(bounds.n.value_or(s.n), bounds.deg.value_or(s.deg));
  } catch (const std::exception& e) {
    r.failures.push_back({name, "suite completes", std::string("threw: ") + e.what()});
  }
  r.suite = name;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace flagkey::verify
