#pragma once

#include <map>
#include <string>

#include "flagkey/composition.hpp"
#include "flagkey/polynomial.hpp"

namespace flagkey {

enum class BasisTag { Monomial, HFlagged, Key, Atom, Schubert };

std::string to_string(BasisTag tag);
BasisTag parse_basis(const std::string& s);

/// Coefficients of a polynomial in a named basis; no zero values are stored.
struct BasisExpansion {
  BasisTag basis = BasisTag::Monomial;
  std::map<Composition, Integer> terms;

  Integer operator[](const Composition& index) const;
  void add(const Composition& index, const Integer& c);
  friend bool operator==(const BasisExpansion&, const BasisExpansion&) = default;
};

/// Complete homogeneous symmetric polynomial h_m(x_1..x_k).
Polynomial complete_homogeneous(int m, std::size_t k);

/// ĥ_a = prod_i h_{a_i}(x_1..x_i).
Polynomial h_flagged(const Composition& a, std::size_t n = 0);

/// Sum of x^{col(L)} over lower triangular L with row(L) = a.
Polynomial h_flagged_matrix_oracle(const Composition& a);

/// Sum over SSKT of shape a with entries in [n].
Polynomial key_polynomial(const Composition& a, std::size_t n = 0);

/// Sum over rSSAF of shape rev(a), with variable i read as x_{n+1-i}.
Polynomial demazure_atom(const Composition& a, std::size_t n = 0);

/// Number of rSSAF with shape a and weight b. Zero when |a| != |b|.
Integer ktilde(const Composition& a, const Composition& b, std::size_t n = 0);

/// Number of SSKT with shape rev(a) and weight rev(b), reversal taken over
/// length n (default: the longer declared length).
Integer ktilde_upper(const Composition& a, const Composition& b, std::size_t n = 0);

/// Number of SSYT of shape lam and weight b.
Integer kostka(const Composition& lam, const Composition& b);

/// ĥ_b as a nonnegative combination of key polynomials.
BasisExpansion expand_h_into_keys(const Composition& b, std::size_t n = 0);

/// ĥ_b as a nonnegative combination of Demazure atoms.
BasisExpansion expand_h_into_atoms(const Composition& b, std::size_t n = 0);

/// The polynomial named by basis element `index` in n variables. Schubert
/// indices are not compositions, so that tag is rejected here.
Polynomial basis_element(BasisTag basis, const Composition& index, std::size_t n);

/// Recombines an expansion into a polynomial.
Polynomial to_polynomial(const BasisExpansion& e, std::size_t n);

/// Degree-d basis family in n variables, ready for express_in_basis.
BasisFamily basis_family(BasisTag basis, int degree, std::size_t n);

}  // namespace flagkey
