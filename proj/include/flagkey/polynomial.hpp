#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flagkey/composition.hpp"

namespace flagkey {

using Integer = boost::multiprecision::cpp_int;

/// Sparse polynomial in x_1..x_n with arbitrary-precision integer coefficients.
///
/// Exponents are compositions keyed with trailing zeros stripped; no stored
/// coefficient is ever zero. The variable count n only grows: binary
/// operations take the larger of the two.
class Polynomial {
 public:
  using Terms = std::map<Composition, Integer>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(const Integer& c, std::size_t nvars = 0);
  static Polynomial monomial(const Composition& exponent, const Integer& c = 1);
  /// The variable x_i (1-based).
  static Polynomial variable(std::size_t i);

  std::size_t nvars() const { return nvars_; }
  void widen(std::size_t n) { nvars_ = std::max(nvars_, n); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  Integer coefficient(const Composition& exponent) const;
  /// Adds c * x^exponent.
  void add_term(const Composition& exponent, const Integer& c);

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Homogeneous component of degree d.
  Polynomial homogeneous_part(int d) const;

  /// Sets x_{k+1}, x_{k+2}, ... to zero.
  Polynomial truncate_variables(std::size_t k) const;
  /// Substitutes x_i -> x_{image[i-1]} (image is 1-based).
  Polynomial rename_variables(const std::vector<int>& image) const;
  /// x_i -> x_{n+1-i}.
  Polynomial reverse_variables(std::size_t n) const;

  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Integer& c);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator-(Polynomial p) { return p *= -1; }
  friend Polynomial operator*(Polynomial p, const Integer& c) { return p *= c; }
  friend Polynomial operator*(const Integer& c, Polynomial p) { return p *= c; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);

  /// Equality of terms; the variable count is ignored.
  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.terms_ == q.terms_; }

  /// Terms in graded lexicographic order: higher total degree first, then
  /// lexicographically larger exponent first.
  std::vector<std::pair<Composition, Integer>> canonical_terms() const;

  /// Human-readable form such as "x1^2 + 2*x1*x2 - x3".
  std::string str() const;

 private:
  Terms terms_;
  std::size_t nvars_ = 0;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Integer coefficient(const Polynomial& p, const Composition& exponent);

/// Graded lexicographic comparison used for serialization.
bool grlex_before(const Composition& a, const Composition& b);

/// A basis element: its index and its monomial expansion.
using BasisFamily = std::vector<std::pair<Composition, Polynomial>>;

/// Thrown when a polynomial is outside the span of a supplied basis.
class NotInSpan : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Expresses p in a basis that is uni-triangular: each element has coefficient
/// 1 at its own index and every other monomial strictly later in `order`.
/// Elimination repeatedly cancels the earliest remaining monomial. The default
/// order is the prefix-sum linear extension of dominance.
std::map<Composition, Integer> express_in_basis(
    const Polynomial& p, const BasisFamily& basis,
    const std::function<bool(const Composition&, const Composition&)>& order =
        dominance_extension_less);

/// Recombination sum_a coef[a] * element(a).
Polynomial combine(const std::map<Composition, Integer>& coefs,
                   const std::function<Polynomial(const Composition&)>& element);

}  // namespace flagkey
