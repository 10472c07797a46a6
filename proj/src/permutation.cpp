#include "flagkey/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace flagkey {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<bool> seen(word_.size() + 1, false);
  for (int v : word_) {
    if (v < 1 || v > static_cast<int>(word_.size()) || seen[v])
      throw std::invalid_argument("not a permutation word");
    seen[v] = true;
  }
  while (!word_.empty() && word_.back() == static_cast<int>(word_.size())) word_.pop_back();
}

int Permutation::operator()(int i) const {
  return i >= 1 && i <= window() ? word_[i - 1] : i;
}

std::vector<int> Permutation::word(int m) const {
  std::vector<int> w(std::max(m, window()));
  for (int i = 1; i <= static_cast<int>(w.size()); ++i) w[i - 1] = (*this)(i);
  return w;
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < word_.size(); ++i)
    for (std::size_t j = i + 1; j < word_.size(); ++j)
      if (word_[i] > word_[j]) ++inv;
  return inv;
}

Permutation Permutation::times_transposition(int i, int j) const {
  std::vector<int> w = word(std::max(i, j));
  std::swap(w[i - 1], w[j - 1]);
  return Permutation(std::move(w));
}

std::string Permutation::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < word_.size(); ++i) os << (i ? "," : "") << word_[i];
  os << ']';
  return os.str();
}

std::set<Permutation> k_bruhat_covers(const Permutation& u, int k, int universe) {
  if (k < 1) throw std::invalid_argument("k-Bruhat order needs k >= 1");
  std::set<Permutation> out;
  // Past max(window, k) + 1 the fixed point at window+1 always sits in between.
  int jmax = std::max(u.window(), k) + 1;
  if (universe > 0) jmax = std::min(jmax, universe);
  for (int i = 1; i <= k; ++i) {
    for (int j = k + 1; j <= jmax; ++j) {
      int ui = u(i), uj = u(j);
      if (ui > uj) continue;
      bool blocked = false;
      for (int p = i + 1; p < j && !blocked; ++p) blocked = ui < u(p) && u(p) < uj;
      if (!blocked) out.insert(u.times_transposition(i, j));
    }
  }
  return out;
}

Permutation grassmannian_perm(const Composition& lam, int k) {
  if (k < 1) throw std::invalid_argument("grassmannian_perm needs k >= 1");
  if (!lam.is_partition()) throw std::invalid_argument("grassmannian_perm needs a partition");
  if (lam.support_length() > static_cast<std::size_t>(k))
    throw std::invalid_argument("partition " + lam.str() + " has more than k parts");
  int m = k + lam[0];
  std::vector<int> w;
  std::vector<bool> used(m + 1, false);
  for (int i = 1; i <= k; ++i) {
    int v = lam[k - i] + i;
    w.push_back(v);
    used[v] = true;
  }
  for (int v = 1; v <= m; ++v)
    if (!used[v]) w.push_back(v);
  return Permutation(std::move(w));
}

}  // namespace flagkey
