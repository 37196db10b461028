#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace mzv {

// A finite (possibly empty) sequence of positive integers.  Weight is the sum
// of the parts, depth the number of parts.  An index is admissible when it is
// empty or its last part is at least 2; admissible indices name convergent
// nested sums.
class Index {
 public:
  Index() = default;

  Index(std::initializer_list<int> parts) : parts_(parts) { validate(); }

  explicit Index(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }

  int depth() const { return static_cast<int>(parts_.size()); }

  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  bool empty() const { return parts_.empty(); }

  int part(int i) const { return parts_.at(static_cast<size_t>(i)); }

  int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }

  int last() const {
    if (empty()) throw std::out_of_range("Index::last on empty index");
    return parts_.back();
  }

  const std::vector<int>& parts() const { return parts_; }

  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  bool admissible() const { return empty() || parts_.back() >= 2; }

  Index reversed() const {
    std::vector<int> p(parts_.rbegin(), parts_.rend());
    return Index(std::move(p));
  }

  // Leading i parts (k_1,...,k_i).  i = 0 gives the empty index.
  Index prefix(int i) const {
    check_cut(i);
    return Index(std::vector<int>(parts_.begin(), parts_.begin() + i));
  }

  // Trailing depth()-i parts (k_{i+1},...,k_r).
  Index suffix(int i) const {
    check_cut(i);
    return Index(std::vector<int>(parts_.begin() + i, parts_.end()));
  }

  friend bool operator==(const Index&, const Index&) = default;
  friend auto operator<=>(const Index& a, const Index& b) {
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                  b.parts_.begin(), b.parts_.end());
  }

  // "1,2,3"; the empty index renders as the empty string.
  std::string str() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  static Index parse(const std::string& text) {
    std::vector<int> parts;
    size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
      size_t used = 0;
      int v;
      try {
        v = std::stoi(text.substr(pos), &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("Index::parse: bad integer in '" + text + "'");
      }
      parts.push_back(v);
      pos += used;
      skip_ws();
      if (pos == text.size()) break;
      if (text[pos] != ',') throw std::invalid_argument("Index::parse: expected ',' in '" + text + "'");
      ++pos;
      skip_ws();
      if (pos == text.size()) throw std::invalid_argument("Index::parse: trailing ',' in '" + text + "'");
    }
    return Index(std::move(parts));
  }

 private:
  void validate() const {
    for (int p : parts_)
      if (p < 1) throw std::invalid_argument("Index parts must be positive");
  }
  void check_cut(int i) const {
    if (i < 0 || i > depth()) throw std::out_of_range("Index cut out of range");
  }

  std::vector<int> parts_;
};

// (k_1,...,k_{r-1}, k_r + l_1, l_2,...,l_s): the circled join of two nonempty
// indices, gluing the touching parts.
inline Index odot(const Index& k, const Index& l) {
  if (k.empty() || l.empty()) throw std::invalid_argument("odot needs nonempty indices");
  std::vector<int> p(k.parts().begin(), k.parts().end() - 1);
  p.push_back(k.last() + l[0]);
  p.insert(p.end(), l.parts().begin() + 1, l.parts().end());
  return Index(std::move(p));
}

// All 2^(depth-1) ways of turning each comma of k into either a comma or a
// plus.  Term order: boundary-merge bitmask ascending, so k itself is first
// and the full sum (weight) is last.  Distinct masks give distinct indices
// (the surviving partial sums recover the mask), so this is a multiplicity-
// free enumeration.
inline std::vector<Index> star_expand(const Index& k) {
  if (k.empty()) throw std::invalid_argument("star_expand needs a nonempty index");
  const int r = k.depth();
  std::vector<Index> out;
  out.reserve(size_t(1) << (r - 1));
  for (uint32_t mask = 0; mask < (uint32_t(1) << (r - 1)); ++mask) {
    std::vector<int> p;
    p.push_back(k[0]);
    for (int i = 1; i < r; ++i) {
      if (mask & (uint32_t(1) << (i - 1)))
        p.back() += k[i];  // merge across boundary i
      else
        p.push_back(k[i]);
    }
    out.push_back(Index(std::move(p)));
  }
  return out;
}

// Hoffman dual: complement the set of proper partial sums inside {1,...,w-1}
// and read the resulting composition of the same weight w.
inline Index hoffman_dual(const Index& k) {
  if (k.empty()) throw std::invalid_argument("hoffman_dual needs a nonempty index");
  const int w = k.weight();
  std::vector<bool> is_sum(static_cast<size_t>(w), false);  // is_sum[t] for t in 1..w-1
  int acc = 0;
  for (int i = 0; i + 1 < k.depth(); ++i) {
    acc += k[i];
    is_sum[static_cast<size_t>(acc)] = true;
  }
  std::vector<int> p;
  int prev = 0;
  for (int t = 1; t < w; ++t) {
    if (!is_sum[static_cast<size_t>(t)]) {  // complement: t is a boundary of the dual
      p.push_back(t - prev);
      prev = t;
    }
  }
  p.push_back(w - prev);
  return Index(std::move(p));
}

// All compositions of w in lexicographic order; w = 0 yields just the empty
// index.  Lexicographic means (1,1,1) < (1,2) < (2,1) < (3).
inline std::vector<Index> compositions(int w) {
  std::vector<Index> out;
  if (w < 0) throw std::invalid_argument("compositions of negative weight");
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem) -> void {
    if (rem == 0) {
      out.push_back(Index(cur));
      return;
    }
    for (int first = 1; first <= rem; ++first) {
      cur.push_back(first);
      self(self, rem - first);
      cur.pop_back();
    }
  };
  rec(rec, w);
  return out;
}

}  // namespace mzv
