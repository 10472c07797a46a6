#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagkey/bases.hpp"
#include "flagkey/oracles.hpp"

using namespace flagkey;

namespace {

Polynomial m(const Composition& e) { return Polynomial::monomial(e); }

std::vector<Composition> all_compositions(int max_total, std::size_t n) {
  std::vector<Composition> out;
  for (int k = 0; k <= max_total; ++k)
    for (auto& c : compositions(k, n)) out.push_back(c);
  return out;
}

}  // namespace

TEST_CASE("flagged complete homogeneous") {
  CHECK(h_flagged({0, 0}, 2) == Polynomial::constant(1));
  CHECK(h_flagged({0, 2}, 2) == m({2, 0}) + m({1, 1}) + m({0, 2}));
  CHECK(h_flagged({1, 1}, 2) == m({2, 0}) + m({1, 1}));
  CHECK(h_flagged_matrix_oracle({1, 0}) == m({1}));
  CHECK(h_flagged_matrix_oracle({0, 1}) == m({1}) + m({0, 1}));
  CHECK(h_flagged_matrix_oracle({0, 2}) == h_flagged({0, 2}));
}

TEST_CASE("matrix model agrees") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (auto& a : all_compositions(4, n)) CHECK(h_flagged(a, n) == h_flagged_matrix_oracle(a));
}

TEST_CASE("stable limit") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (auto& a : all_compositions(4, n)) {
      if (support(a).size() > 2) continue;
      Polynomial lifted = h_flagged(a.prepend_zeros(n), 2 * n).truncate_variables(n);
      CHECK(lifted == oracle::h_symmetric(a.sorted(), n));
    }
}

TEST_CASE("key polynomials and atoms") {
  CHECK(key_polynomial({0, 0}, 2) == Polynomial::constant(1));
  CHECK(key_polynomial({0, 1}, 2) == m({1}) + m({0, 1}));
  CHECK(key_polynomial({2, 0}, 2) == m({2}));
  CHECK(demazure_atom({0, 0}, 2) == Polynomial::constant(1));
  CHECK(demazure_atom({1, 0}, 2) == m({1}));
  CHECK(demazure_atom({0, 1}, 2) == m({0, 1}));
  CHECK(key_polynomial({0, 1}, 2) == demazure_atom({0, 1}, 2) + demazure_atom({1, 0}, 2));
}

TEST_CASE("filling models agree with Demazure operators") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (auto& a : all_compositions(4, n)) {
      CHECK(key_polynomial(a, n) == oracle::key_by_operators(a, n));
      CHECK(demazure_atom(a, n) == oracle::atom_by_operators(a, n));
    }
}

TEST_CASE("keys of reversed partitions are Schur polynomials") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (int k = 0; k <= 4; ++k)
      for (auto& lam : partitions(k, n)) CHECK(key_polynomial(lam.reversed(), n) == oracle::schur(lam, n));
}

TEST_CASE("ktilde values") {
  CHECK(ktilde({0, 2}, {0, 2}) == 1);
  CHECK(ktilde({1, 1}, {1, 1}) == 1);
  CHECK(ktilde({2, 0}, {1, 1}) == 1);
  CHECK(ktilde({0, 2}, {1, 1}) == 0);
  CHECK(ktilde({1}, {2}) == 0);
  CHECK(ktilde_upper({1, 0}, {2, 0}) == 0);
  CHECK(kostka({1}, {1}) == 1);
  CHECK(kostka({2, 1}, {1, 1, 1}) == 2);
}

TEST_CASE("expansions into keys and atoms") {
  CHECK(expand_h_into_keys({0, 2}).terms == std::map<Composition, Integer>{{{0, 2}, 1}});
  CHECK(expand_h_into_keys({1, 1}).terms == std::map<Composition, Integer>{{{1, 1}, 1}, {{2}, 1}});
  CHECK(expand_h_into_keys({0, 0}).terms == std::map<Composition, Integer>{{{}, 1}});
  for (std::size_t n = 1; n <= 3; ++n)
    for (auto& b : all_compositions(4, n)) {
      auto keys = expand_h_into_keys(b, n);
      auto atoms = expand_h_into_atoms(b, n);
      for (auto& [a, c] : keys.terms) CHECK(c > 0);
      for (auto& [a, c] : atoms.terms) CHECK(c > 0);
      CHECK(to_polynomial(keys, n) == h_flagged(b, n));
      CHECK(to_polynomial(atoms, n) == h_flagged(b, n));
    }
}

TEST_CASE("Kostka bridges") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (int k = 0; k <= 4; ++k)
      for (auto& lam : partitions(k, n))
        for (auto& b : compositions(k, n)) {
          Integer sum = 0;
          for (auto& a : compositions(k, n))
            if (a.sorted() == lam) sum += ktilde(a, b, n);
          Integer expected = oracle::kostka(lam, b);
          CHECK(sum == expected);
          CHECK(ktilde_upper(lam, b, n) == expected);
          CHECK(kostka(lam, b) == expected);
        }
}

TEST_CASE("h basis is unitriangular") {
  for (int d = 0; d <= 4; ++d) {
    auto family = basis_family(BasisTag::HFlagged, d, 3);
    for (auto& [a, p] : family) {
      CHECK(p.coefficient(a) == 1);
      for (auto& [e, c] : p.terms())
        if (e != a) CHECK(dominance_extension_less(a, e));
    }
  }
  Polynomial h11 = oracle::h_symmetric({1, 1}, 2);
  auto c = express_in_basis(h11, basis_family(BasisTag::HFlagged, 2, 2));
  CHECK(c == std::map<Composition, Integer>{{{0, 2}, 1}, {{1, 1}, 1}, {{2}, -1}});
  CHECK(express_in_basis(m({1, 1}), basis_family(BasisTag::Key, 2, 2)) ==
        std::map<Composition, Integer>{{{1, 1}, 1}});
}
