#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagkey/bases.hpp"
#include "flagkey/kohnert.hpp"

using namespace flagkey;

TEST_CASE("single moves") {
  Diagram top({{2, 4}, {1, 3}, {2, 3}, {3, 3}, {3, 2}});
  auto moves = kohnert_moves(top);
  CHECK(moves.size() == 3);
  CHECK(moves.count(Diagram({{2, 4}, {1, 3}, {2, 3}, {3, 2}, {3, 1}})));
  CHECK(moves.count(Diagram({{2, 2}, {1, 3}, {2, 3}, {3, 3}, {3, 2}})));
  CHECK(moves.count(Diagram({{2, 4}, {1, 3}, {2, 3}, {3, 1}, {3, 3}})));
  CHECK(kohnert_moves(Diagram({{1, 2}})) == std::set<Diagram>{Diagram({{1, 1}})});
  CHECK(kohnert_moves(Diagram({{1, 1}})).empty());
}

TEST_CASE("closures and polynomials") {
  CHECK(kohnert_closure(Diagram({{1, 2}})).size() == 2);
  CHECK(kohnert_closure(Diagram()).size() == 1);
  CHECK(kohnert_closure(build_Da({0, 2})).size() == 3);
  CHECK(kohnert_polynomial(Diagram()) == Polynomial::constant(1));
  CHECK(kohnert_polynomial(Diagram({{1, 2}})) == Polynomial::monomial({1}) + Polynomial::monomial({0, 1}));
  CHECK(kohnert_polynomial(build_Da({1, 1})) == h_flagged({1, 1}));
}

TEST_CASE("D_a") {
  CHECK(build_Da({0, 0}).empty());
  CHECK(build_Da({0, 2}).cells() == std::vector<Cell>{{1, 2}, {2, 2}});
  Diagram big = build_Da({1, 0, 3, 6, 1, 0, 2});
  CHECK(big.size() == 13);
  CHECK(big.contains({1, 1}));
  CHECK(big.contains({5, 4}));
  CHECK(big.contains({11, 5}));
  CHECK(big.contains({13, 7}));
  CHECK(is_southwest(big));
  CHECK(is_southwest(Diagram({{1, 2}, {4, 2}, {1, 1}, {3, 1}})));
  CHECK_FALSE(is_southwest(Diagram({{1, 2}, {3, 2}, {4, 2}, {3, 1}})));
}

TEST_CASE("character identity and phi") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (int k = 0; k <= 4; ++k)
      for (const Composition& a : compositions(k, n)) {
        Diagram da = build_Da(a, n);
        CHECK(is_southwest(da));
        auto closure = kohnert_closure(da);
        CHECK(kohnert_polynomial(da) == h_flagged(a, n));
        Matrix diag = zero_matrix(static_cast<int>(n));
        for (std::size_t i = 0; i < n; ++i) diag[i][i] = a[i];
        CHECK(phi(da, a) == diag);
        std::set<Matrix> images;
        for (const Diagram& t : closure) {
          Matrix l = phi(t, a);
          CHECK(is_lower_triangular(l));
          CHECK(row_sums(l) == a);
          CHECK(col_sums(l) == t.row_weight(n));
          CHECK(phi_inverse(l) == t);
          images.insert(l);
        }
        std::size_t expected = 0;
        for (const Matrix& l : enumerate_matrices(static_cast<int>(n), k, true))
          if (row_sums(l) == a) {
            ++expected;
            CHECK(closure.count(phi_inverse(l)));
          }
        CHECK(images.size() == expected);
      }
}

TEST_CASE("phi on a dropped cell and rejections") {
  Matrix l = phi(Diagram({{1, 1}}), {0, 1});
  CHECK(l == Matrix{{0, 0}, {1, 0}});
  CHECK_THROWS(phi(Diagram({{1, 2}, {2, 1}, {3, 2}}), {0, 3}));
  CHECK_THROWS(phi(Diagram({{1, 2}}), {1, 0}));
  CHECK_THROWS(phi_inverse(Matrix{{0, 1}, {0, 0}}));
}
