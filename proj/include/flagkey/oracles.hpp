#pragma once

#include <vector>

#include "flagkey/composition.hpp"
#include "flagkey/polynomial.hpp"

// Reference computations built from classical definitions only. They share
// no code with the library's combinatorial models and exist to cross-check them.
namespace flagkey::oracle {

/// s_lam(x_1..x_n) by the horizontal-strip branching rule.
Polynomial schur(const Composition& lam, std::size_t n);

/// Coefficient of x^b in s_lam.
Integer kostka(const Composition& lam, const Composition& b);

/// h_lam(x_1..x_n) as a sum over N-matrices with row sums lam.
Polynomial h_symmetric(const Composition& lam, std::size_t n);

/// Truncation of prod_{j<=i<=n} (1 - x_i y_j)^{-1} to total degree <= deg in
/// x. Variables are x_1..x_n followed by y_1..y_n.
Polynomial cauchy_lhs(std::size_t n, int deg);

/// Signed count of special rim hook tabloids of shape mu and type lam.
Integer er_inverse_kostka(const Composition& lam, const Composition& mu);

/// Inverse of the Kostka matrix on partitions of k, by back substitution.
/// Entry [lam][mu] is the coefficient of h_lam in s_mu.
std::map<Composition, std::map<Composition, Integer>> inverse_kostka_matrix(int k);

/// Divided difference (f - s_i f) / (x_i - x_{i+1}).
Polynomial divided_difference(const Polynomial& f, std::size_t i);

/// Demazure operators pi_i f = d_i(x_i f) and pi_i - 1.
Polynomial demazure_pi(const Polynomial& f, std::size_t i);
Polynomial demazure_pibar(const Polynomial& f, std::size_t i);

/// Key polynomial and Demazure atom by the operator recursion from the
/// dominant monomial.
Polynomial key_by_operators(const Composition& a, std::size_t n);
Polynomial atom_by_operators(const Composition& a, std::size_t n);

}  // namespace flagkey::oracle
