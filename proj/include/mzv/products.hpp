#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "lincomb.hpp"

namespace mzv {

namespace detail {

// Word-level recursions, memoized on canonically ordered word pairs.  Caches
// are thread_local: workers build private tables instead of sharing a lock.

inline LinComb shuffle_words(const Word& a, const Word& b) {
  if (a.empty()) return LinComb(b);
  if (b.empty()) return LinComb(a);
  if (a.size() + b.size() > Word::kMaxLen) throw std::length_error("shuffle: result exceeds 64 letters");
  thread_local std::map<std::pair<Word, Word>, LinComb> cache;
  const bool swapped = b < a;
  const Word& u = swapped ? b : a;
  const Word& v = swapped ? a : b;
  auto it = cache.find({u, v});
  if (it != cache.end()) return it->second;
  // x u' sh y v' = x (u' sh y v') + y (x u' sh v')
  LinComb r = shuffle_words(u.drop_front(1), v).prepended(u.letter_at(0));
  r += shuffle_words(u, v.drop_front(1)).prepended(v.letter_at(0));
  cache.emplace(std::make_pair(u, v), r);
  return r;
}

// First generator of an H1 word: w = e_k w' with k = 1 + (run of e0 after the
// leading e1).
inline std::pair<int, Word> split_first_generator(const Word& w) {
  uint32_t i = 1;
  while (i < w.size() && w.letter_at(i) == 0) ++i;
  return {static_cast<int>(i), w.drop_front(i)};
}

// Last generator of a word in e1*H: w = w' e_k.
inline std::pair<Word, int> split_last_generator(const Word& w) {
  uint32_t start = w.size() - 1;
  while (w.letter_at(start) == 0) --start;  // terminates: some letter is e1
  return {w.prefix(start), static_cast<int>(w.size() - start)};
}

inline Word prepend_generator(int k, const Word& w) {
  Word g;
  g.push_back(1);
  for (int i = 1; i < k; ++i) g.push_back(0);
  return concat(g, w);
}

inline LinComb prepend_generator(int k, const LinComb& x) {
  Word g;
  g.push_back(1);
  for (int i = 1; i < k; ++i) g.push_back(0);
  return x.concat_left(g);
}

// sign = +1 gives the harmonic product, -1 the bar variant where the merged
// term e_{k+l}(u' * v') enters negatively.
template <int Sign>
inline LinComb harmonic_words(const Word& a, const Word& b) {
  if (a.empty()) return LinComb(b);
  if (b.empty()) return LinComb(a);
  if (!a.in_h1() || !b.in_h1()) throw std::domain_error("harmonic product needs H1 operands");
  if (a.size() + b.size() > Word::kMaxLen) throw std::length_error("harmonic: result exceeds 64 letters");
  thread_local std::map<std::pair<Word, Word>, LinComb> cache;
  const bool swapped = b < a;
  const Word& u = swapped ? b : a;
  const Word& v = swapped ? a : b;
  auto it = cache.find({u, v});
  if (it != cache.end()) return it->second;
  auto [k, ur] = split_first_generator(u);
  auto [l, vr] = split_first_generator(v);
  LinComb r = prepend_generator(k, harmonic_words<Sign>(ur, v));
  r += prepend_generator(l, harmonic_words<Sign>(u, vr));
  LinComb merged = prepend_generator(k + l, harmonic_words<Sign>(ur, vr));
  if constexpr (Sign > 0)
    r += merged;
  else
    r -= merged;
  cache.emplace(std::make_pair(u, v), r);
  return r;
}

}  // namespace detail

// Bilinear extensions.  All four products are commutative; shuffle and
// harmonic are associative (property-tested), the circled product is neither
// claimed nor used as such.

inline LinComb shuffle(const LinComb& x, const LinComb& y) {
  LinComb r;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) r += detail::shuffle_words(a, b) * (ca * cb);
  return r;
}

inline LinComb harmonic(const LinComb& x, const LinComb& y) {
  LinComb r;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) r += detail::harmonic_words<+1>(a, b) * (ca * cb);
  return r;
}

inline LinComb bar_harmonic(const LinComb& x, const LinComb& y) {
  LinComb r;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) r += detail::harmonic_words<-1>(a, b) * (ca * cb);
  return r;
}

// v e_k ⊛ w e_l = (v * w) e_{k+l}, defined on nonempty words of e1*H.
inline LinComb circled_harmonic(const LinComb& x, const LinComb& y) {
  LinComb r;
  for (const auto& [a, ca] : x.terms()) {
    if (a.empty() || !a.in_h1()) throw std::domain_error("circled product needs nonempty e1*H operands");
    auto [v, k] = detail::split_last_generator(a);
    for (const auto& [b, cb] : y.terms()) {
      if (b.empty() || !b.in_h1()) throw std::domain_error("circled product needs nonempty e1*H operands");
      auto [w, l] = detail::split_last_generator(b);
      Word tail;
      tail.push_back(1);
      for (int i = 1; i < k + l; ++i) tail.push_back(0);
      r += detail::harmonic_words<+1>(v, w).concat_right(tail) * (ca * cb);
    }
  }
  return r;
}

inline LinComb dagger(const LinComb& x) { return x.dagger(); }

// k ⊛ l*: the circled product of to-word(k) against the star expansion of l.
// This is the series side of the integral-series identity.
inline LinComb circled_star(const Index& k, const Index& l) {
  if (k.empty() || l.empty()) throw std::invalid_argument("circled_star needs nonempty indices");
  return circled_harmonic(LinComb(Word::of_index(k)), star_word(l));
}

// Iterated harmonic power of e1 (used by regularization and its tests).
inline LinComb e1_harmonic_power(int n) {
  LinComb r = LinComb::one();
  LinComb e1(Word::e1());
  for (int i = 0; i < n; ++i) r = harmonic(r, e1);
  return r;
}

}  // namespace mzv
