#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "flagkey/fillings.hpp"

using namespace flagkey;

namespace {

Filling example_sskt() { return Filling({{1}, {}, {3, 3, 2}, {4, 4, 3, 3, 3, 1}, {2}, {}, {6, 1}}); }
Filling example_rssaf() { return Filling({{1}, {}, {3, 3, 5}, {4, 4, 4, 5, 5, 6}, {5}, {}, {7, 7}}); }

// Every entry map on D(shape), filtered by membership.
std::vector<Filling> naive(const Composition& shape, int n, Flavor f) {
  Filling t = Filling::blank(shape);
  auto cells = t.cells();
  std::vector<Filling> out;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == cells.size()) {
      if (is_member(t, f, n)) out.push_back(t);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      t.at_mut(cells[i]) = v;
      go(i + 1);
    }
  };
  go(0);
  return out;
}

}  // namespace

TEST_CASE("key diagrams") {
  CHECK(key_diagram({0, 1}).cells() == std::vector<Cell>{{1, 2}});
  CHECK(key_diagram({2, 0}).cells() == std::vector<Cell>{{1, 1}, {2, 1}});
  CHECK(key_diagram({1, 0, 3, 6, 1, 0, 2}).size() == 13);
  CHECK(key_shape(key_diagram({1, 0, 3})) == Composition{1, 0, 3});
  CHECK_FALSE(key_shape(Diagram({{2, 1}})).has_value());
}

TEST_CASE("attacking cells") {
  CHECK(attacking({1, 2}, {1, 5}));
  CHECK(attacking({1, 3}, {2, 2}));
  CHECK_FALSE(attacking({1, 2}, {2, 3}));
  CHECK_FALSE(attacking({1, 2}, {3, 5}));
}

TEST_CASE("example fillings") {
  auto s = statistics(example_sskt(), 7);
  CHECK(s.maj == 0);
  CHECK(s.coinv == 0);
  CHECK(s.attacking_violations == 0);
  CHECK(is_member(example_sskt(), Flavor::SSKT, 7));
  auto r = statistics(example_rssaf(), 7);
  CHECK(r.comaj == 0);
  CHECK(r.inv == 0);
  CHECK(r.attacking_violations == 0);
  CHECK(is_member(example_rssaf(), Flavor::RSSAF, 7));

  // Create an attacking equal pair in column 1.
  Filling bad = example_sskt();
  bad.at_mut({1, 3}) = 4;
  CHECK_FALSE(is_member(bad, Flavor::SSKT, 7));

  Filling ascent({{1, 2}});
  CHECK(statistics(ascent, 2).maj > 0);
}

TEST_CASE("tableau flavors") {
  Filling p({{6, 4, 3, 3, 3, 1}, {4, 3, 2}, {3, 1}, {2}, {1}});
  CHECK(is_member(p, Flavor::RSSYT, 7));
  CHECK_FALSE(is_member(p, Flavor::SSYT, 7));
  Filling q({{1, 3, 4, 5, 5, 6}, {3, 4, 5}, {4, 7}, {5}, {7}});
  CHECK(is_member(q, Flavor::SSYT, 7));
  CHECK_THROWS_AS(is_member(Filling({{1}, {1, 2}}), Flavor::SSYT, 3), std::invalid_argument);
}

TEST_CASE("small enumerations") {
  CHECK(enumerate({0, 1}, 2, Flavor::SSKT).size() == 2);
  auto one = enumerate({2, 0}, 2, Flavor::SSKT);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Filling({{1, 1}}));
  for (Flavor f : {Flavor::SSKT, Flavor::RSSAF}) {
    auto e = enumerate({0, 0}, 3, f);
    REQUIRE(e.size() == 1);
    CHECK(e[0].size() == 0);
  }
  // Schur s_11 in three variables.
  CHECK(count_fillings({0, 1, 1}, 3, Flavor::SSKT) == 3);
  CHECK(count_fillings({2, 1}, 3, Flavor::SSYT) == 8);
}

TEST_CASE("enumeration agrees with the naive filter") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (int k = 0; k <= 5; ++k)
      for (const Composition& a : compositions(k, n))
        for (Flavor f : {Flavor::SSKT, Flavor::RSSAF}) {
          if (k > 4 && n == 3) continue;
          auto fast = enumerate(a, static_cast<int>(n), f);
          auto slow = naive(a, static_cast<int>(n), f);
          CHECK_MESSAGE(fast == slow, a.str(), " ", to_string(f));
        }
}

TEST_CASE("row and column structure of members") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (int k = 0; k <= 4; ++k)
      for (const Composition& a : compositions(k, n)) {
        for (const Filling& t : enumerate(a, static_cast<int>(n), Flavor::SSKT)) {
          for (int r = 1; r <= static_cast<int>(n); ++r)
            for (int s = r + 1; s <= static_cast<int>(n); ++s)
              if (a.part(r) <= a.part(s))
                for (int c = 1; c <= a.part(r); ++c) CHECK(t.at({c, r}) < t.at({c, s}));
        }
        for (const Filling& t : enumerate(a, static_cast<int>(n), Flavor::RSSAF))
          for (int r = 1; r <= static_cast<int>(n); ++r)
            if (a.part(r) > 0) CHECK(t.at({1, r}) == r);
      }
}

TEST_CASE("weight filter") {
  auto all = enumerate({1, 0, 2}, 3, Flavor::SSKT);
  std::size_t total = 0;
  for (const Composition& w : compositions(3, 3)) {
    auto part = enumerate({1, 0, 2}, 3, Flavor::SSKT, w);
    for (auto& t : part) CHECK(t.weight(3) == w);
    total += part.size();
  }
  CHECK(total == all.size());
}
