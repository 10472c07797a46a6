#include "flagkey/bases.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "flagkey/fillings.hpp"

namespace flagkey {

std::string to_string(BasisTag tag) {
  switch (tag) {
    case BasisTag::Monomial: return "monomial";
    case BasisTag::HFlagged: return "h-flagged";
    case BasisTag::Key: return "key";
    case BasisTag::Atom: return "atom";
    case BasisTag::Schubert: return "schubert";
  }
  return "?";
}

BasisTag parse_basis(const std::string& s) {
  if (s == "monomial" || s == "x") return BasisTag::Monomial;
  if (s == "h" || s == "h-flagged" || s == "hhat") return BasisTag::HFlagged;
  if (s == "key") return BasisTag::Key;
  if (s == "atom") return BasisTag::Atom;
  if (s == "schubert") return BasisTag::Schubert;
  throw std::invalid_argument("unknown basis '" + s + "'");
}

Integer BasisExpansion::operator[](const Composition& index) const {
  auto it = terms.find(index.stripped());
  return it == terms.end() ? Integer(0) : it->second;
}

void BasisExpansion::add(const Composition& index, const Integer& c) {
  if (c == 0) return;
  Composition key = index.stripped();
  Integer& slot = terms[key];
  slot += c;
  if (slot == 0) terms.erase(key);
}

namespace {

std::size_t ambient(const Composition& a, std::size_t n) {
  if (n == 0) return a.length();
  if (n < a.support_length())
    throw std::invalid_argument("ambient n=" + std::to_string(n) + " too small for " + a.str());
  return n;
}

}  // namespace

Polynomial complete_homogeneous(int m, std::size_t k) {
  Polynomial out(k);
  if (m == 0) return Polynomial::constant(1, k);
  if (k == 0) return out;
  for (const Composition& e : compositions(m, k)) out.add_term(e, 1);
  return out;
}

Polynomial h_flagged(const Composition& a, std::size_t n) {
  n = ambient(a, n);
  Polynomial out = Polynomial::constant(1, n);
  for (std::size_t i = 1; i <= a.length(); ++i)
    if (a.part(i) > 0) out = out * complete_homogeneous(a.part(i), i);
  out.widen(n);
  return out;
}

Polynomial h_flagged_matrix_oracle(const Composition& a) {
  std::size_t n = a.length();
  Polynomial out(n);
  std::vector<int> col(n, 0);
  // Row i distributes a_i over columns 1..i.
  std::function<void(std::size_t, std::size_t, int)> go = [&](std::size_t i, std::size_t j, int left) {
    if (i == n) {
      out.add_term(Composition(col), 1);
      return;
    }
    if (j == i) {
      col[j] += left;
      go(i + 1, 0, i + 1 < n ? a[i + 1] : 0);
      col[j] -= left;
      return;
    }
    for (int v = 0; v <= left; ++v) {
      col[j] += v;
      go(i, j + 1, left - v);
      col[j] -= v;
    }
  };
  if (n == 0) return Polynomial::constant(1);
  go(0, 0, a[0]);
  return out;
}

Polynomial key_polynomial(const Composition& a, std::size_t n) {
  n = ambient(a, n);
  Polynomial out(n);
  for (const Filling& t : enumerate(a, static_cast<int>(n), Flavor::SSKT)) out.add_term(t.weight(n), 1);
  return out;
}

Polynomial demazure_atom(const Composition& a, std::size_t n) {
  n = ambient(a, n);
  Polynomial out(n);
  Composition shape = a.padded(n).reversed();
  for (const Filling& t : enumerate(shape, static_cast<int>(n), Flavor::RSSAF))
    out.add_term(t.weight(n).reversed(), 1);
  return out;
}

Integer ktilde(const Composition& a, const Composition& b, std::size_t n) {
  if (a.total() != b.total()) return 0;
  n = std::max({n, a.length(), b.length()});
  return count_fillings(a, static_cast<int>(n), Flavor::RSSAF, b.padded(n));
}

Integer ktilde_upper(const Composition& a, const Composition& b, std::size_t n) {
  if (a.total() != b.total()) return 0;
  n = std::max({n, a.length(), b.length()});
  return count_fillings(a.padded(n).reversed(), static_cast<int>(n), Flavor::SSKT,
                        b.padded(n).reversed());
}

Integer kostka(const Composition& lam, const Composition& b) {
  if (lam.total() != b.total()) return 0;
  if (!lam.is_partition()) throw std::invalid_argument("kostka needs a partition, got " + lam.str());
  int n = static_cast<int>(std::max<std::size_t>(b.support_length(), 1));
  return count_fillings(lam.stripped(), n, Flavor::SSYT, b.padded(n));
}

BasisExpansion expand_h_into_keys(const Composition& b, std::size_t n) {
  n = ambient(b, n);
  BasisExpansion out{BasisTag::Key, {}};
  for (const Composition& a : compositions(b.total(), n)) out.add(a, ktilde(a, b, n));
  return out;
}

BasisExpansion expand_h_into_atoms(const Composition& b, std::size_t n) {
  n = ambient(b, n);
  BasisExpansion out{BasisTag::Atom, {}};
  for (const Composition& a : compositions(b.total(), n)) out.add(a, ktilde_upper(a, b, n));
  return out;
}

Polynomial basis_element(BasisTag basis, const Composition& index, std::size_t n) {
  switch (basis) {
    case BasisTag::Monomial: return Polynomial::monomial(index);
    case BasisTag::HFlagged: return h_flagged(index, n);
    case BasisTag::Key: return key_polynomial(index, n);
    case BasisTag::Atom: return demazure_atom(index, n);
    case BasisTag::Schubert: break;
  }
  throw std::invalid_argument("schubert elements are indexed by permutations");
}

Polynomial to_polynomial(const BasisExpansion& e, std::size_t n) {
  return combine(e.terms, [&](const Composition& a) { return basis_element(e.basis, a, n); });
}

BasisFamily basis_family(BasisTag basis, int degree, std::size_t n) {
  BasisFamily out;
  for (const Composition& a : compositions(degree, n)) out.emplace_back(a, basis_element(basis, a, n));
  return out;
}

}  // namespace flagkey
