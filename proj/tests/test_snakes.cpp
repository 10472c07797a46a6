#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "flagkey/bases.hpp"
#include "flagkey/oracles.hpp"
#include "flagkey/snakes.hpp"

using namespace flagkey;

namespace {

// Rows listed bottom to top; each label names the snake owning the cell.
SnakeTabloid from_labels(const std::vector<std::vector<int>>& rows) {
  SnakeTabloid u;
  u.snakes.resize(rows.size());
  std::vector<int> shape;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    shape.push_back(static_cast<int>(rows[r].size()));
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      u.snakes[rows[r][c] - 1].insert({static_cast<int>(c) + 1, static_cast<int>(r) + 1});
  }
  u.shape = Composition(shape);
  return u;
}

const SnakeTabloid* find_tabloid(const std::vector<SnakeTabloid>& all, const SnakeTabloid& u) {
  for (const auto& v : all)
    if (v.snakes == u.snakes) return &v;
  return nullptr;
}

std::vector<Composition> all_compositions(int max_total, std::size_t n) {
  std::vector<Composition> out;
  for (int k = 0; k <= max_total; ++k)
    for (auto& b : compositions(k, n)) out.push_back(b);
  return out;
}

Diagram cells_of(std::initializer_list<Cell> cells) { return Diagram(std::vector<Cell>(cells)); }

const Composition kBig{3, 7, 0, 2, 5, 8, 6};

}  // namespace

TEST_CASE("snake predicates") {
  Diagram s = cells_of({{1, 1}, {2, 1}, {3, 1}, {7, 2}, {2, 4}, {3, 5}, {4, 5}, {5, 5}, {5, 7}, {6, 7}});
  CHECK(is_snake(s, kBig));
  CHECK(is_special_snake(s, kBig));
  CHECK(is_special_snake(cells_of({{1, 1}, {2, 1}}), Composition{2, 3}));
  CHECK_FALSE(is_snake(cells_of({{2, 2}}), Composition{2, 3}));
  CHECK(is_snake(Diagram(), Composition{2, 3}));
  CHECK_FALSE(is_special_snake(cells_of({{3, 2}}), Composition{2, 3}));
  // Forbidden triple (1,2),(2,2),(2,1).
  CHECK_FALSE(is_snake(cells_of({{1, 1}, {2, 1}, {1, 2}, {2, 2}}), Composition{2, 2}));
  // Not weakly connected: (1,1) and (2,2) with the left cell lower.
  CHECK_FALSE(is_snake(cells_of({{1, 1}, {2, 2}}), Composition{1, 2}));
  CHECK(weakly_connected({1, 2}, {2, 2}));
  CHECK(weakly_connected({1, 3}, {2, 2}));
  CHECK_FALSE(weakly_connected({1, 1}, {2, 2}));
}

TEST_CASE("special snakes agree with subset filtering") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& b : all_compositions(8, n)) {
      auto fast = special_snakes(b);
      auto slow = special_snakes_by_subsets(b);
      std::sort(fast.begin(), fast.end());
      std::sort(slow.begin(), slow.end());
      CHECK_MESSAGE(fast == slow, b.str());
    }
}

TEST_CASE("rim hooks are snakes of reversed partitions") {
  Composition lam{8, 7, 6, 5, 3, 2};
  Diagram hook = cells_of({{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 3}, {5, 3},
                           {5, 4}, {6, 4}, {6, 5}, {7, 5}});
  CHECK(rim_hook_check(hook, lam));
  CHECK(is_snake(hook, lam.reversed()));
  CHECK_FALSE(rim_hook_check(cells_of({{1, 1}, {2, 1}, {1, 2}, {2, 2}}), Composition{2, 2}));

  for (int k = 1; k <= 6; ++k)
    for (const auto& mu : partitions(k, k)) {
      Composition b = mu.reversed();
      Diagram full = key_diagram(b);
      const auto& cells = full.cells();
      for (unsigned long mask = 0; mask < (1UL << cells.size()); ++mask) {
        Diagram s;
        for (std::size_t i = 0; i < cells.size(); ++i)
          if (mask >> i & 1) s.insert(cells[i]);
        CHECK(is_snake(s, b) == rim_hook_check(s, mu));
      }
    }
}

TEST_CASE("tabloid enumeration") {
  auto small = enumerate_special_snake_tabloids({1, 1});
  REQUIRE(small.size() == 2);
  std::map<Composition, int> by_weight;
  for (const auto& u : small) by_weight[u.weight] = u.sign;
  CHECK(by_weight == std::map<Composition, int>{{Composition{1, 1}, 1}, {Composition{2, 0}, -1}});

  auto big = enumerate_special_snake_tabloids(kBig);
  SnakeTabloid left = from_labels({{1, 1, 1}, {2, 2, 2, 2, 2, 2, 1}, {}, {4, 1}, {4, 2, 1, 1, 1},
                                   {6, 6, 6, 6, 4, 2, 2, 2}, {4, 4, 4, 4, 1, 1}});
  SnakeTabloid right = from_labels({{1, 1, 1}, {2, 2, 2, 2, 2, 1, 1}, {}, {4, 4}, {5, 4, 1, 1, 1},
                                    {6, 4, 4, 4, 4, 4, 4, 4}, {7, 7, 7, 4, 2, 2}});
  const SnakeTabloid* l = find_tabloid(big, left);
  const SnakeTabloid* r = find_tabloid(big, right);
  REQUIRE(l);
  REQUIRE(r);
  CHECK(l->weight == Composition{10, 10, 0, 7, 0, 4, 0});
  CHECK(l->sign == -1);
  CHECK(r->weight == Composition{8, 7, 0, 11, 1, 1, 3});
  CHECK(r->sign == 1);

  auto cancel = enumerate_special_snake_tabloids({2, 4, 3});
  const SnakeTabloid* c1 = find_tabloid(cancel, from_labels({{1, 1}, {2, 2, 2, 1}, {2, 1, 1}}));
  const SnakeTabloid* c2 = find_tabloid(cancel, from_labels({{1, 1}, {2, 1, 1, 1}, {2, 2, 2}}));
  REQUIRE(c1);
  REQUIRE(c2);
  CHECK(c1->weight == Composition{5, 4, 0});
  CHECK(c2->weight == Composition{5, 4, 0});
  CHECK(c1->sign == -c2->sign);

  auto pair = enumerate_special_snake_tabloids({1, 1, 2, 2});
  const SnakeTabloid* p1 = find_tabloid(pair, from_labels({{1}, {2}, {2, 2}, {4, 4}}));
  const SnakeTabloid* p2 = find_tabloid(pair, from_labels({{1}, {1}, {3, 3}, {4, 3}}));
  REQUIRE(p1);
  REQUIRE(p2);
  CHECK(p1->weight == Composition{1, 3, 0, 2});
  CHECK(p1->sign == -1);
  CHECK(p2->weight == Composition{2, 0, 3, 1});
  CHECK(p2->sign == 1);
}

TEST_CASE("inverse ktilde values") {
  CHECK(inverse_ktilde({0, 2}, {0, 2}) == 1);
  CHECK(inverse_ktilde({1, 1}, {1, 1}) == 1);
  CHECK(inverse_ktilde({2, 0}, {1, 1}) == -1);
  CHECK(inverse_ktilde({2}, {1, 1}) == -1);
  BasisExpansion e = expand_key_into_h({1, 1});
  CHECK(e.basis == BasisTag::HFlagged);
  CHECK(e.terms == std::map<Composition, Integer>{{Composition{1, 1}, 1}, {Composition{2}, -1}});
}

TEST_CASE("key polynomials from tabloids") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& b : all_compositions(5, n))
      CHECK_MESSAGE(to_polynomial(expand_key_into_h(b), n) == key_polynomial(b, n), b.str());
}

TEST_CASE("tabloid matrix inverts the rSSAF matrix") {
  const std::size_t n = 3;
  for (int k = 0; k <= 4; ++k) {
    auto comps = compositions(k, n);
    for (const auto& c : comps)
      for (const auto& b : comps) {
        Integer sum = 0;
        for (const auto& a : comps) sum += ktilde(c, a, n) * inverse_ktilde(a, b);
        CHECK(sum == (c == b ? 1 : 0));
      }
  }
}

TEST_CASE("reversed partitions recover the rim hook formula without cancellation") {
  for (int k = 1; k <= 6; ++k)
    for (const auto& mu : partitions(k, k)) {
      std::map<Composition, int> per_weight;
      std::map<Composition, Integer> per_sorted;
      for (const auto& u : enumerate_special_snake_tabloids(mu.reversed())) {
        ++per_weight[u.weight];
        per_sorted[u.weight.sorted()] += u.sign;
      }
      for (const auto& [w, count] : per_weight) CHECK(count == 1);
      for (const auto& lam : partitions(k, k))
        CHECK_MESSAGE(per_sorted[lam] == oracle::er_inverse_kostka(lam, mu), lam.str() << " " << mu.str());
    }
}

TEST_CASE("G(S) fillings") {
  auto row = gset_enumerate(cells_of({{1, 1}, {2, 1}}), Composition{2, 0});
  REQUIRE(row.size() == 1);
  CHECK(row[0] == Filling({{1, 1}, {}}));

  Filling t({{1, 1, 1}, {2, 2, 2, 2, 2, 1, 1}, {}, {1, 1}, {4, 3, 1, 1, 1}, {6, 5, 4, 4, 3, 2, 2, 2},
             {7, 7, 3, 1, 1, 1}});
  Diagram s = cells_of({{1, 1}, {2, 1}, {3, 1}, {3, 5}, {4, 5}, {5, 5}, {5, 7}, {6, 7}});
  REQUIRE(is_special_snake(s, kBig));
  auto a = residual_shape(s, kBig);
  REQUIRE(a);
  Filling rest = Filling::blank(*a);
  for (Cell u : rest.cells()) rest.at_mut(u) = t.at(u);
  CHECK(is_member(rest, Flavor::SSKT, 7));
  for (Cell u : s) CHECK(t.at(u) == 1);

  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& b : all_compositions(4, n))
      for (const auto& snake : special_snakes(b)) {
        Polynomial sum;
        for (const auto& f : gset_enumerate(snake, b, static_cast<int>(n))) {
          sum += Polynomial::monomial(f.weight(n));
          auto st = statistics(f, static_cast<int>(n));
          CHECK(st.maj == 0);
          CHECK(st.coinv == 0);
        }
        Polynomial expect = Polynomial::monomial(Composition{static_cast<int>(snake.size())}) *
                            key_polynomial(*residual_shape(snake, b), n);
        CHECK(sum == expect);
      }
}

TEST_CASE("S-attacks") {
  Filling sskt({{1, 1}, {2}});
  CHECK(s_attacks(cells_of({{1, 1}, {2, 1}}), sskt).empty());
  Filling ones({{1}, {1}});
  auto attacks = s_attacks(cells_of({{1, 1}, {1, 2}}), ones);
  CHECK(std::find(attacks.begin(), attacks.end(), std::pair<Cell, Cell>{{1, 1}, {1, 2}}) != attacks.end());
}

TEST_CASE("involution on a large shape") {
  Filling t({{1, 1, 1}, {2, 2, 2, 1, 1, 1, 1}, {}, {1, 1}, {4, 3, 1, 1, 1}, {6, 5, 4, 4, 4, 4, 3, 1},
             {7, 7, 3, 3, 3, 2}});
  Diagram left = cells_of({{1, 1}, {2, 1}, {3, 1}, {3, 5}, {4, 5}, {5, 5}});
  Diagram right = left;
  right.insert({6, 2});
  right.insert({7, 2});
  CHECK_FALSE(s_attacks(left, t).empty());
  auto [s1, t1] = iota(left, t, 7);
  CHECK(s1 == right);
  CHECK(t1 == t);
  auto [s2, t2] = iota(right, t, 7);
  CHECK(s2 == left);
  CHECK_THROWS_AS(iota(left, Filling({{1, 1, 1}, {2, 2, 2, 2, 2, 2, 2}, {}, {3, 3}, {4, 4, 3, 3, 3},
                                      {6, 6, 6, 6, 6, 6, 6, 6}, {7, 7, 7, 7, 7, 7}}), 7),
                  std::invalid_argument);
}

TEST_CASE("involution is sign reversing and cancels to the key polynomial") {
  std::size_t pairs = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& b : all_compositions(4, n)) {
      if (b[0] == 0) continue;
      int nn = static_cast<int>(n);
      auto family = enumerate_F(b, nn);
      pairs += family.size();
      for (const auto& [s, t] : family) {
        auto [s1, t1] = iota(s, t, nn);
        CHECK(t1 == t);
        CHECK(sign(s1) == -sign(s));
        CHECK(is_special_snake(s1, b));
        auto [s2, t2] = iota(s1, t1, nn);
        CHECK(s2 == s);
        auto before = s_attacks(s, t), after = s_attacks(s1, t);
        std::sort(before.begin(), before.end());
        std::sort(after.begin(), after.end());
        CHECK(before == after);
        Diagram sym = s;
        for (Cell u : s1)
          if (sym.contains(u)) sym.erase(u); else sym.insert(u);
        CHECK(height(sym) == 1);
        bool union_or_difference = std::all_of(sym.begin(), sym.end(), [&](Cell u) { return s.contains(u); }) ||
                                   std::none_of(sym.begin(), sym.end(), [&](Cell u) { return s.contains(u); });
        CHECK(union_or_difference);
      }

      Polynomial signed_sum;
      for (const auto& s : special_snakes(b)) {
        if (s.empty()) continue;
        for (const auto& f : gset_enumerate(s, b, nn))
          signed_sum += Polynomial::monomial(f.weight(n)) * sign(s);
      }
      CHECK(signed_sum == key_polynomial(b, n));
    }
  CHECK(pairs > 0);
}

TEST_CASE("relabeling the support") {
  std::vector<Composition> samples{{0, 2}, {0, 1, 1}, {0, 2, 1}, {0, 0, 3}, {0, 1, 0, 2}, {0, 2, 0, 1}};
  for (const auto& b : samples) {
    std::size_t n = b.length();
    auto from = support(b);
    std::vector<int> to(from.size());
    std::iota(to.begin(), to.end(), 1);
    Composition packed = relabel(b, from, to, n);
    BasisExpansion direct = expand_key_into_h(b);
    BasisExpansion moved;
    moved.basis = BasisTag::HFlagged;
    for (const auto& [a, c] : expand_key_into_h(packed).terms) {
      Composition full = a.padded(n);
      moved.add(relabel(full, to, from, n), c);
    }
    CHECK_MESSAGE(direct == moved, b.str());
  }
}
