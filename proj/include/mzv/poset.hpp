#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lincomb.hpp"

namespace mzv {

// A finite poset with a {0,1} labeling, at most 32 elements.  The strict
// order is stored transitively closed as per-element bitmasks, so closure
// queries and order extensions are mask arithmetic.
class Poset2 {
 public:
  Poset2() = default;  // empty poset

  // relations are arbitrary (a,b) pairs meaning a < b; the constructor takes
  // the transitive closure and rejects cycles.
  Poset2(int n, const std::vector<std::pair<int, int>>& relations, const std::vector<int>& labels) : n_(n) {
    if (n < 0 || n > 32) throw std::invalid_argument("Poset2: size must be 0..32");
    if (static_cast<int>(labels.size()) != n) throw std::invalid_argument("Poset2: label count mismatch");
    above_.assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      if (labels[static_cast<size_t>(i)] != 0 && labels[static_cast<size_t>(i)] != 1)
        throw std::invalid_argument("Poset2: labels must be 0 or 1");
      if (labels[static_cast<size_t>(i)]) labels_ |= bit(i);
    }
    for (auto [a, b] : relations) {
      check_elem(a);
      check_elem(b);
      above_[static_cast<size_t>(a)] |= bit(b);
    }
    close();
    for (int i = 0; i < n_; ++i)
      if (above_[static_cast<size_t>(i)] & bit(i)) throw std::invalid_argument("Poset2: relation has a cycle");
  }

  int size() const { return n_; }
  int label(int i) const {
    check_elem(i);
    return (labels_ >> i) & 1;
  }
  bool less(int a, int b) const {
    check_elem(a);
    check_elem(b);
    return above_[static_cast<size_t>(a)] & bit(b);
  }
  bool comparable(int a, int b) const { return less(a, b) || less(b, a); }

  uint32_t above_mask(int i) const {
    check_elem(i);
    return above_[static_cast<size_t>(i)];
  }
  uint32_t below_mask(int i) const {
    check_elem(i);
    uint32_t m = 0;
    for (int j = 0; j < n_; ++j)
      if (above_[static_cast<size_t>(j)] & bit(i)) m |= bit(j);
    return m;
  }

  bool is_minimal(int i) const { return below_mask(i) == 0; }
  bool is_maximal(int i) const { return above_mask(i) == 0; }

  // Admissible: every maximal element is a circle (0), every minimal element
  // a bullet (1).  The empty poset is admissible.
  bool admissible() const {
    for (int i = 0; i < n_; ++i) {
      if (is_maximal(i) && label(i) == 1) return false;
      if (is_minimal(i) && label(i) == 0) return false;
    }
    return true;
  }

  // Order reversed, labels complemented; element ids are preserved.
  Poset2 transposed() const {
    Poset2 t;
    t.n_ = n_;
    t.labels_ = (~labels_) & mask_all();
    t.above_.assign(static_cast<size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) t.above_[static_cast<size_t>(i)] = below_mask(i);
    return t;
  }

  // Other poset appended after this one's elements, no relations between.
  Poset2 disjoint_union(const Poset2& o) const {
    if (n_ + o.n_ > 32) throw std::invalid_argument("Poset2: union exceeds 32 elements");
    Poset2 u;
    u.n_ = n_ + o.n_;
    u.labels_ = labels_ | (o.labels_ << n_);
    u.above_.assign(static_cast<size_t>(u.n_), 0);
    for (int i = 0; i < n_; ++i) u.above_[static_cast<size_t>(i)] = above_[static_cast<size_t>(i)];
    for (int i = 0; i < o.n_; ++i) u.above_[static_cast<size_t>(n_ + i)] = o.above_[static_cast<size_t>(i)] << n_;
    return u;
  }

  // Copy with a < b adjoined (and closed).  a,b must be incomparable.
  Poset2 with_relation(int a, int b) const {
    if (comparable(a, b) || a == b) throw std::invalid_argument("Poset2::with_relation: already comparable");
    Poset2 p = *this;
    uint32_t lower = below_mask(a) | bit(a);
    uint32_t upper = p.above_[static_cast<size_t>(b)] | bit(b);
    for (int x = 0; x < n_; ++x)
      if (lower & bit(x)) p.above_[static_cast<size_t>(x)] |= upper;
    return p;
  }

  bool is_total() const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (!comparable(i, j)) return false;
    return true;
  }

  // Lexicographically first incomparable pair, if any.
  std::optional<std::pair<int, int>> first_incomparable() const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (!comparable(i, j)) return std::make_pair(i, j);
    return std::nullopt;
  }

  // Label word of a totally ordered poset, minimum read first.
  Word total_order_word() const {
    std::vector<int> order(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) order[static_cast<size_t>(std::popcount(below_mask(i)))] = i;
    Word w;
    for (int id : order) w.push_back(label(id));
    return w;
  }

  std::vector<std::pair<int, int>> covers() const {
    std::vector<std::pair<int, int>> cs;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        if (!(i != j && less(i, j))) continue;
        bool direct = true;
        for (int k = 0; k < n_ && direct; ++k)
          if (less(i, k) && less(k, j)) direct = false;
        if (direct) cs.emplace_back(i, j);
      }
    std::sort(cs.begin(), cs.end());
    return cs;
  }

  // "labels=1,1,0,1,0; covers=(0<1),(1<2),(3<2),(3<4)"
  std::string debug_str() const {
    std::string s = "labels=";
    for (int i = 0; i < n_; ++i) {
      if (i) s += ',';
      s += char('0' + label(i));
    }
    s += "; covers=";
    auto cs = covers();
    for (size_t i = 0; i < cs.size(); ++i) {
      if (i) s += ',';
      s += "(" + std::to_string(cs[i].first) + "<" + std::to_string(cs[i].second) + ")";
    }
    return s;
  }

  // Canonical serialization used as a memo key by the generic W resolver.
  std::vector<uint64_t> memo_key() const {
    std::vector<uint64_t> k;
    k.reserve(above_.size() + 2);
    k.push_back(static_cast<uint64_t>(n_));
    k.push_back(labels_);
    for (uint32_t m : above_) k.push_back(m);
    return k;
  }

 private:
  static uint32_t bit(int i) { return uint32_t(1) << i; }
  uint32_t mask_all() const { return n_ == 32 ? ~uint32_t(0) : (bit(n_) - 1); }
  void check_elem(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("Poset2: element out of range");
  }
  void close() {
    // Warshall closure over the masks.
    for (int k = 0; k < n_; ++k)
      for (int i = 0; i < n_; ++i)
        if (above_[static_cast<size_t>(i)] & bit(k)) above_[static_cast<size_t>(i)] |= above_[static_cast<size_t>(k)];
  }

  int n_ = 0;
  std::vector<uint32_t> above_;  // above_[i] bit j set  <=>  i < j
  uint32_t labels_ = 0;

  friend class PosetBuilder;
};

// --- builders ----------------------------------------------------------

// Totally ordered poset whose bottom-to-top labels spell the word of k.
inline Poset2 chain_poset(const Index& k) {
  Word w = Word::of_index(k);
  int n = static_cast<int>(w.size());
  std::vector<int> labels(static_cast<size_t>(n));
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i) labels[static_cast<size_t>(i)] = w.letter_at(static_cast<uint32_t>(i));
  for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return Poset2(n, rel, labels);
}

// The fence of l = (l_1,...,l_s), drawn left to right: one block per part,
// taken in the order l_s,...,l_1.  A block is a valley vertex followed by
// (l_i - 1) ascending circles; each later block hangs its valley below the
// previous block's top.  The leftmost valley is the distinguished base
// (element 0) and carries base_label; all other valleys are bullets.
// An empty l gives the empty poset.
inline Poset2 zigzag_poset(const Index& l, int base_label) {
  if (l.empty()) return Poset2();
  const int s = l.depth();
  std::vector<int> labels;
  std::vector<std::pair<int, int>> rel;
  int prev_top = -1;
  for (int bi = s - 1; bi >= 0; --bi) {
    int valley = static_cast<int>(labels.size());
    labels.push_back(prev_top < 0 ? base_label : 1);
    if (prev_top >= 0) rel.emplace_back(valley, prev_top);
    int top = valley;
    for (int j = 1; j < l[bi]; ++j) {
      labels.push_back(0);
      rel.emplace_back(top, top + 1);
      ++top;
    }
    prev_top = top;
  }
  return Poset2(static_cast<int>(labels.size()), rel, labels);
}

// Chain of k grafted below the base of the fence of l: the integral-side
// poset of the integral-series identity.  Chain elements come first, fence
// elements after, so element |k-word| is the fence base.
inline Poset2 mu_poset(const Index& k, const Index& l) {
  if (k.empty() || l.empty()) throw std::invalid_argument("mu_poset needs nonempty indices");
  Poset2 chain = chain_poset(k);
  Poset2 fence = zigzag_poset(l, 0);
  Poset2 u = chain.disjoint_union(fence);
  return u.with_relation(chain.size() - 1, chain.size());
}

// m extra circles chained above the body's element `base`: new elements
// 0..m-1 come first (element 0 on top), body elements are shifted by m.
inline Poset2 graft_poset(int m, const Poset2& body, int base = 0) {
  if (m < 0) throw std::invalid_argument("graft_poset: negative chain length");
  if (m == 0) return body;
  if (body.size() == 0) throw std::invalid_argument("graft_poset: empty body");
  int n = body.size() + m;
  if (n > 32) throw std::invalid_argument("graft_poset: exceeds 32 elements");
  std::vector<int> labels(static_cast<size_t>(n), 0);
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < body.size(); ++i) labels[static_cast<size_t>(m + i)] = body.label(i);
  for (int i = 0; i < body.size(); ++i)
    for (int j = 0; j < body.size(); ++j)
      if (i != j && body.less(i, j)) rel.emplace_back(m + i, m + j);
  for (int g = 0; g + 1 < m; ++g) rel.emplace_back(g + 1, g);
  rel.emplace_back(m + base, m - 1);
  return Poset2(n, rel, labels);
}

// --- W: posets to shuffle-algebra words --------------------------------

using PairPicker = std::function<std::pair<int, int>(const Poset2&)>;

namespace detail {

inline LinComb wmap_rec(const Poset2& p, const PairPicker& pick,
                        std::map<std::vector<uint64_t>, LinComb>& memo) {
  if (p.size() == 0) return LinComb::one();
  auto key = p.memo_key();
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  LinComb r;
  if (p.is_total()) {
    r = LinComb(p.total_order_word());
  } else {
    auto [a, b] = pick(p);
    if (a == b || p.comparable(a, b)) throw std::logic_error("wmap: picker returned a comparable pair");
    r = wmap_rec(p.with_relation(a, b), pick, memo);
    r += wmap_rec(p.with_relation(b, a), pick, memo);
  }
  memo.emplace(std::move(key), r);
  return r;
}

}  // namespace detail

// The homomorphism W, resolved by repeatedly splitting one incomparable pair
// x,y into the two extensions x<y and y<x.  The result is independent of the
// choice (property-tested); the default picker takes the lexicographically
// first incomparable pair.
inline LinComb wmap(const Poset2& p, const PairPicker& pick) {
  std::map<std::vector<uint64_t>, LinComb> memo;
  return detail::wmap_rec(p, pick, memo);
}

inline LinComb wmap(const Poset2& p) {
  return wmap(p, [](const Poset2& q) { return *q.first_incomparable(); });
}

// Same map computed by peeling minimal elements: W(X) equals the sum over
// minimal m of label(m) prepended to W(X minus m).  States are the up-closed
// subsets reachable from the full set, memoized by bitmask; this is the fast
// path for the fence-shaped posets the relation generator feeds it.
inline LinComb wmap_fast(const Poset2& p) {
  const int n = p.size();
  if (n == 0) return LinComb::one();
  std::vector<uint32_t> below(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) below[static_cast<size_t>(i)] = p.below_mask(i);
  std::unordered_map<uint32_t, LinComb> memo;
  memo.reserve(256);
  auto rec = [&](auto&& self, uint32_t mask) -> const LinComb& {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    LinComb r;
    if (mask == 0) {
      r = LinComb::one();
    } else {
      for (int i = 0; i < n; ++i) {
        if (!(mask & (uint32_t(1) << i))) continue;
        if (below[static_cast<size_t>(i)] & mask) continue;  // not minimal in the remainder
        r += self(self, mask & ~(uint32_t(1) << i)).prepended(p.label(i));
      }
    }
    return memo.emplace(mask, std::move(r)).first->second;
  };
  uint32_t full = (n == 32) ? ~uint32_t(0) : ((uint32_t(1) << n) - 1);
  return rec(rec, full);
}

// W of the mu poset; the workhorse of relation generation.
inline LinComb mu(const Index& k, const Index& l) { return wmap_fast(mu_poset(k, l)); }

}  // namespace mzv
