#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "flagkey/composition.hpp"
#include "flagkey/permutation.hpp"

using namespace flagkey;

TEST_CASE("sort and reverse") {
  auto r = sort_and_reverse({1, 0, 3});
  CHECK(r.sorted == Composition{3, 1, 0});
  CHECK(r.reversed == Composition{3, 0, 1});
  CHECK(sort_and_reverse({0, 0}).reversed == Composition{0, 0});
  CHECK(sort_and_reverse({2, 5, 2}).sorted == Composition{5, 2, 2});
  CHECK(sort_and_reverse({2, 5, 2}).reversed == Composition{2, 5, 2});
}

TEST_CASE("trailing zeros are insignificant") {
  CHECK(Composition{1, 2} == Composition{1, 2, 0, 0});
  CHECK(Composition{} == Composition{0});
  CHECK(Composition{1, 0, 3}.reversed() == Composition{3, 0, 1});
  CHECK_THROWS(Composition({1, -1}));
  CHECK(parse_composition("1, 0,3") == Composition{1, 0, 3});
}

TEST_CASE("dominance") {
  CHECK(dominance_leq({1, 1}, {2, 0}));
  CHECK_FALSE(dominance_leq({2, 0}, {1, 1}));
  CHECK(dominance_leq({3, 1, 4}, {3, 1, 4}));
}

TEST_CASE("key poset") {
  CHECK(key_poset_leq({0, 6, 0, 1, 2, 8, 4}, {3, 7, 0, 2, 5, 8, 6}));
  CHECK_FALSE(key_poset_leq({0, 6, 0, 1, 5, 8, 2}, {3, 7, 0, 2, 5, 8, 6}));
  CHECK(key_poset_leq({0, 0}, {5, 5}));
}

TEST_CASE("order properties on all compositions of small size") {
  std::vector<Composition> all;
  for (int k = 0; k <= 4; ++k)
    for (auto& c : compositions(k, 3)) all.push_back(c);
  for (auto& a : all) {
    CHECK(dominance_leq(a, a));
    CHECK(key_poset_leq(a, a));
    for (auto& b : all) {
      if (key_poset_leq(a, b))
        for (std::size_t i = 0; i < 3; ++i) CHECK(a[i] <= b[i]);
      if (a != b) {
        CHECK_FALSE((key_poset_leq(a, b) && key_poset_leq(b, a)));
        if (a.total() == b.total()) CHECK_FALSE((dominance_leq(a, b) && dominance_leq(b, a)));
      }
      for (auto& c : all) {
        if (key_poset_leq(a, b) && key_poset_leq(b, c)) CHECK(key_poset_leq(a, c));
        if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
      }
    }
  }
}

TEST_CASE("young lattice embeds into the key poset by reversal") {
  std::vector<Composition> parts;
  for (int k = 0; k <= 5; ++k)
    for (auto& p : partitions(k, 3)) parts.push_back(p);
  for (auto& lam : parts)
    for (auto& mu : parts)
      CHECK(key_poset_leq(lam.padded(3).reversed(), mu.padded(3).reversed()) == young_leq(lam, mu));
}

TEST_CASE("dominance extension is linear and extends dominance") {
  auto all = compositions(4, 3);
  for (auto& a : all)
    for (auto& b : all) {
      if (a == b) continue;
      CHECK(dominance_extension_less(a, b) != dominance_extension_less(b, a));
      if (dominance_leq(a, b)) CHECK(dominance_extension_less(a, b));
    }
}

TEST_CASE("relabel") {
  std::vector<int> I{1, 3}, J{2, 4};
  CHECK(relabel({2, 0, 5, 0}, I, J, 4) == Composition{0, 2, 0, 5});
  std::vector<int> I2{2}, J2{1};
  CHECK(relabel({0, 3}, I2, J2, 2) == Composition{3, 0});
  for (auto& a : compositions(3, 4)) {
    std::vector<int> from{1, 2, 4}, to{2, 3, 4};
    if (a[2] != 0) {
      CHECK_THROWS(relabel(a, from, to, 4));
      continue;
    }
    CHECK(relabel(relabel(a, from, to, 4), to, from, 4) == a);
  }
  std::vector<int> bad{1};
  CHECK_THROWS(relabel({1, 1}, I, bad, 2));
}

TEST_CASE("k-Bruhat covers") {
  auto c = k_bruhat_covers(Permutation({1, 2, 3}), 1, 3);
  CHECK(c == std::set<Permutation>{Permutation({2, 1, 3})});
  CHECK(k_bruhat_covers(Permutation({1}), 1, 1).empty());

  // Brute force over all transpositions for u=[2,1], k=2.
  Permutation u({2, 1});
  std::set<Permutation> brute;
  for (int i = 1; i <= 2; ++i)
    for (int j = 3; j <= 6; ++j) {
      Permutation w = u.times_transposition(i, j);
      if (w.length() == u.length() + 1) brute.insert(w);
    }
  CHECK(k_bruhat_covers(u, 2) == brute);

  std::vector<int> w{1, 2, 3, 4};
  do {
    Permutation p(w);
    for (int k = 1; k <= 3; ++k)
      for (auto& v : k_bruhat_covers(p, k)) CHECK(v.length() == p.length() + 1);
  } while (std::next_permutation(w.begin(), w.end()));
}

TEST_CASE("grassmannian permutations") {
  CHECK(grassmannian_perm({2}, 2) == Permutation({1, 4, 2, 3}));
  CHECK(grassmannian_perm({}, 1) == Permutation::identity());
  CHECK(grassmannian_perm({1}, 1) == Permutation({2, 1}));
  CHECK_THROWS(grassmannian_perm({1, 1}, 1));
  CHECK(Permutation({2, 1, 3}) == Permutation({2, 1}));
}
