#include "flagkey/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace flagkey {

Polynomial Polynomial::constant(const Integer& c, std::size_t nvars) {
  Polynomial p(nvars);
  p.add_term(Composition{}, c);
  return p;
}

Polynomial Polynomial::monomial(const Composition& exponent, const Integer& c) {
  Polynomial p(exponent.length());
  p.add_term(exponent, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t i) {
  std::vector<int> e(i, 0);
  e[i - 1] = 1;
  return monomial(Composition(std::move(e)));
}

Integer Polynomial::coefficient(const Composition& exponent) const {
  auto it = terms_.find(exponent.stripped());
  return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::add_term(const Composition& exponent, const Integer& c) {
  if (c == 0) return;
  widen(exponent.support_length());
  auto [it, inserted] = terms_.try_emplace(exponent.stripped(), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.total());
  return d;
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_)
    if (e.total() == d) out.terms_.emplace(e, c);
  return out;
}

Polynomial Polynomial::truncate_variables(std::size_t k) const {
  Polynomial out(std::min(nvars_, k));
  for (const auto& [e, c] : terms_)
    if (e.support_length() <= k) out.terms_.emplace(e, c);
  return out;
}

Polynomial Polynomial::rename_variables(const std::vector<int>& image) const {
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    std::vector<int> f;
    for (std::size_t i = 0; i < e.length(); ++i) {
      if (e[i] == 0) continue;
      if (i >= image.size()) throw std::invalid_argument("rename_variables: image too short");
      std::size_t target = image[i];
      if (f.size() < target) f.resize(target, 0);
      f[target - 1] += e[i];
    }
    out.add_term(Composition(std::move(f)), c);
  }
  out.widen(nvars_);
  return out;
}

Polynomial Polynomial::reverse_variables(std::size_t n) const {
  std::vector<int> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = static_cast<int>(n - i);
  return rename_variables(image);
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  for (const auto& [e, c] : q.terms_) add_term(e, c);
  widen(q.nvars_);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  for (const auto& [e, c] : q.terms_) add_term(e, -c);
  widen(q.nvars_);
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  Polynomial out(std::max(p.nvars_, q.nvars_));
  for (const auto& [ep, cp] : p.terms_) {
    for (const auto& [eq, cq] : q.terms_) {
      std::size_t n = std::max(ep.length(), eq.length());
      std::vector<int> e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = ep[i] + eq[i];
      out.add_term(Composition(std::move(e)), cp * cq);
    }
  }
  return out;
}

bool grlex_before(const Composition& a, const Composition& b) {
  int da = a.total(), db = b.total();
  if (da != db) return da > db;
  return a > b;
}

std::vector<std::pair<Composition, Integer>> Polynomial::canonical_terms() const {
  std::vector<std::pair<Composition, Integer>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return grlex_before(x.first, y.first); });
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : canonical_terms()) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool has_var = !e.is_zero();
    if (mag != 1 || !has_var) os << mag << (has_var ? "*" : "");
    bool first_var = true;
    for (std::size_t i = 0; i < e.length(); ++i) {
      if (e[i] == 0) continue;
      os << (first_var ? "" : "*") << 'x' << (i + 1);
      if (e[i] > 1) os << '^' << e[i];
      first_var = false;
    }
  }
  return os.str();
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Integer coefficient(const Polynomial& p, const Composition& exponent) {
  return p.coefficient(exponent);
}

std::map<Composition, Integer> express_in_basis(
    const Polynomial& p, const BasisFamily& basis,
    const std::function<bool(const Composition&, const Composition&)>& order) {
  std::map<Composition, const Polynomial*> by_index;
  for (const auto& [index, poly] : basis) by_index.emplace(index.stripped(), &poly);

  std::map<Composition, Integer> out;
  Polynomial rest = p;
  // Each step removes the earliest monomial and only introduces later ones,
  // so the loop runs at most once per monomial reachable from p.
  while (!rest.is_zero()) {
    auto earliest = rest.terms().begin();
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it)
      if (order(it->first, earliest->first)) earliest = it;
    Composition e = earliest->first;
    Integer c = earliest->second;
    auto b = by_index.find(e);
    if (b == by_index.end())
      throw NotInSpan("no basis element indexed by " + e.str() + " (remainder " + rest.str() + ")");
    Integer lead = b->second->coefficient(e);
    if (lead != 1) throw NotInSpan("basis element " + e.str() + " is not unitriangular");
    for (const auto& [f, d] : b->second->terms())
      if (f != e && !order(e, f))
        throw NotInSpan("basis element " + e.str() + " is not triangular in the given order");
    rest -= *b->second * c;
    out[e] += c;
    if (out[e] == 0) out.erase(e);
  }
  return out;
}

Polynomial combine(const std::map<Composition, Integer>& coefs,
                   const std::function<Polynomial(const Composition&)>& element) {
  Polynomial out;
  for (const auto& [index, c] : coefs) out += element(index) * c;
  return out;
}

}  // namespace flagkey
