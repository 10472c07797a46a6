#include "flagkey/composition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace flagkey {

namespace {

void check_nonnegative(const std::vector<int>& parts) {
  for (int p : parts)
    if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
}

}  // namespace

Composition::Composition(std::initializer_list<int> parts) : parts_(parts) {
  check_nonnegative(parts_);
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  check_nonnegative(parts_);
}

int Composition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::size_t Composition::support_length() const {
  std::size_t n = parts_.size();
  while (n > 0 && parts_[n - 1] == 0) --n;
  return n;
}

Composition Composition::padded(std::size_t n) const {
  if (n < support_length())
    throw std::invalid_argument("cannot shorten composition " + str() + " to length " +
                                std::to_string(n));
  std::vector<int> p(parts_.begin(), parts_.begin() + std::min(n, parts_.size()));
  p.resize(n, 0);
  return Composition(std::move(p));
}

Composition Composition::stripped() const { return padded(support_length()); }

Composition Composition::sorted() const {
  std::vector<int> p = parts_;
  std::sort(p.begin(), p.end(), std::greater<>());
  return Composition(std::move(p));
}

Composition Composition::reversed() const {
  std::vector<int> p(parts_.rbegin(), parts_.rend());
  return Composition(std::move(p));
}

Composition Composition::prepend_zeros(std::size_t k) const {
  std::vector<int> p(k, 0);
  p.insert(p.end(), parts_.begin(), parts_.end());
  return Composition(std::move(p));
}

bool Composition::is_partition() const {
  return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>());
}

std::string Composition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

bool operator==(const Composition& a, const Composition& b) {
  std::size_t n = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
  std::size_t n = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

SortedReversed sort_and_reverse(const Composition& a) { return {a.sorted(), a.reversed()}; }

bool dominance_leq(const Composition& a, const Composition& b) {
  std::size_t n = std::max(a.length(), b.length());
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

bool key_poset_leq(const Composition& a, const Composition& b) {
  std::size_t n = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] > b[i]) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a[i] > a[j] && !(b[i] > b[j])) return false;
  return true;
}

bool young_leq(const Composition& lam, const Composition& mu) {
  std::size_t n = std::max(lam.length(), mu.length());
  for (std::size_t i = 0; i < n; ++i)
    if (lam[i] > mu[i]) return false;
  return true;
}

bool dominance_extension_less(const Composition& a, const Composition& b) {
  std::size_t n = std::max(a.length(), b.length());
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa != sb) return sa < sb;
  }
  return false;
}

std::vector<Composition> compositions(int total, std::size_t n) {
  std::vector<Composition> out;
  if (total < 0) return out;
  if (n == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      cur[i] = left;
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, total);
  return out;
}

std::vector<Composition> partitions(int total, std::size_t max_parts) {
  std::vector<Composition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      std::vector<int> p = cur;
      p.resize(max_parts, 0);
      out.emplace_back(std::move(p));
      return;
    }
    if (cur.size() == max_parts) return;
    for (int v = std::min(left, cap); v >= 1; --v) {
      cur.push_back(v);
      rec(left - v, v);
      cur.pop_back();
    }
  };
  if (total >= 0) rec(total, total);
  return out;
}

Composition relabel(const Composition& a, std::span<const int> from, std::span<const int> to,
                    std::size_t n) {
  if (from.size() != to.size()) throw std::invalid_argument("relabel: index sets differ in size");
  for (std::size_t i = 1; i <= a.length(); ++i) {
    if (a.part(i) == 0) continue;
    if (std::find(from.begin(), from.end(), static_cast<int>(i)) == from.end())
      throw std::invalid_argument("relabel: nonzero part outside the source index set");
  }
  std::size_t len = n;
  for (int j : to) {
    if (j < 1) throw std::invalid_argument("relabel: indices are 1-based");
    len = std::max(len, static_cast<std::size_t>(j));
  }
  std::vector<int> out(len, 0);
  for (std::size_t m = 0; m < from.size(); ++m) out[to[m] - 1] = a.part(from[m]);
  return Composition(std::move(out));
}

std::vector<int> support(const Composition& a) {
  std::vector<int> s;
  for (std::size_t i = 1; i <= a.length(); ++i)
    if (a.part(i) != 0) s.push_back(static_cast<int>(i));
  return s;
}

Composition parse_composition(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (token.empty()) {
      if (text.find_first_not_of(" \t") == std::string::npos) break;
      throw std::invalid_argument("empty part in composition '" + text + "'");
    }
    std::size_t used = 0;
    int v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument("bad integer '" + token + "'");
    parts.push_back(v);
  }
  return Composition(std::move(parts));
}

}  // namespace flagkey
