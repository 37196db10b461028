#pragma once

#include <array>
#include <atomic>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "parallel.hpp"
#include "poset.hpp"
#include "products.hpp"
#include "qmatrix.hpp"

namespace mzv {

// ---------------------------------------------------------------------
// The integral-series identity zeta(mu(k,l)) = zeta(k (x) l*), recorded as
// an exact relation between admissible words of weight |k|+|l|.
// ---------------------------------------------------------------------

struct RelationRecord {
  std::string family = "intser";
  Index k, l;
  int weight = 0;
  LinComb lhs;     // expansion of W(mu(k,l))
  LinComb rhs;     // expansion of k (x) l*
  SparseRow vec;   // lhs - rhs on the WeightBasis columns

  nlohmann::json to_json() const {
    WeightBasis basis(weight);
    LinComb v;
    for (const auto& [c, q] : vec) v.add(basis.word_at(c), q);
    return nlohmann::json{{"family", family}, {"k", k.str()},   {"l", l.str()},
                          {"weight", weight}, {"lhs", lhs.to_json()}, {"rhs", rhs.to_json()},
                          {"vector", v.to_json()}};
  }

  static RelationRecord from_json(const nlohmann::json& j) {
    RelationRecord r;
    r.family = j.at("family").get<std::string>();
    r.k = Index::parse(j.at("k").get<std::string>());
    r.l = Index::parse(j.at("l").get<std::string>());
    r.weight = j.at("weight").get<int>();
    r.lhs = LinComb::from_json(j.at("lhs"));
    r.rhs = LinComb::from_json(j.at("rhs"));
    WeightBasis basis(r.weight);
    r.vec = sparse_row_of(LinComb::from_json(j.at("vector")), basis);
    return r;
  }
};

inline RelationRecord intser_relation(const Index& k, const Index& l) {
  if (k.empty() || l.empty()) throw std::invalid_argument("intser_relation needs nonempty indices");
  RelationRecord r;
  r.k = k;
  r.l = l;
  r.weight = k.weight() + l.weight();
  r.lhs = mu(k, l);
  r.rhs = circled_star(k, l);
  r.vec = sparse_row_of(r.lhs - r.rhs, WeightBasis(r.weight));
  return r;
}

// All ordered pairs (k,l) of nonempty indices with |k|+|l| = weight, k and l
// each running through compositions in lexicographic order, |k| ascending.
// skip_trivial omits depth(l) = 1, whose relations are identically zero.
inline std::vector<std::pair<Index, Index>> relation_pairs(int weight, bool skip_trivial) {
  if (weight < 2) throw std::invalid_argument("relation_pairs: weight must be >= 2");
  std::vector<std::pair<Index, Index>> out;
  for (int a = 1; a < weight; ++a) {
    auto ks = compositions(a);
    auto ls = compositions(weight - a);
    for (const Index& k : ks)
      for (const Index& l : ls) {
        if (skip_trivial && l.depth() == 1) continue;
        out.emplace_back(k, l);
      }
  }
  return out;
}

inline void enumerate_relations(int weight, bool skip_trivial,
                                const std::function<void(const RelationRecord&)>& sink) {
  for (const auto& [k, l] : relation_pairs(weight, skip_trivial)) sink(intser_relation(k, l));
}

inline std::vector<RelationRecord> enumerate_relations(int weight, bool skip_trivial = false) {
  std::vector<RelationRecord> out;
  enumerate_relations(weight, skip_trivial, [&](const RelationRecord& r) { out.push_back(r); });
  return out;
}

// Rank of the integral-series relation span at the given weight, streamed
// into the exact eliminator.  Generation parallelizes across `jobs` workers;
// consumption stays in enumeration order, so the outcome is deterministic
// (and in exact arithmetic the rank would not care anyway).
inline DimensionReport dimension_report(int weight, int jobs = 1,
                                        const std::function<void(const RelationRecord&)>& tap = {}) {
  WeightBasis basis(weight);
  RrefAccumulator acc(basis.size());
  DimensionReport rep;
  rep.weight = weight;
  rep.basis_size = basis.size();
  auto pairs = relation_pairs(weight, true);
  rep.rows = static_cast<long>(pairs.size());
  if (jobs <= 1 || pairs.size() < 64) {
    for (const auto& [k, l] : pairs) {
      RelationRecord r = intser_relation(k, l);
      if (tap) tap(r);
      acc.consume(r.vec);
    }
  } else {
    const size_t n = pairs.size();
    std::vector<std::optional<RelationRecord>> slot(n);
    std::vector<std::atomic<bool>> ready(n);
    std::atomic<size_t> consumed{0};
    std::atomic<size_t> next{0};
    const size_t window = 2048;
    const size_t workers = std::min<size_t>(static_cast<size_t>(jobs), n);
    std::vector<std::thread> pool;
    for (size_t t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= n) return;
          while (i - consumed.load(std::memory_order_acquire) > window) std::this_thread::yield();
          slot[i] = intser_relation(pairs[i].first, pairs[i].second);
          ready[i].store(true, std::memory_order_release);
        }
      });
    }
    for (size_t i = 0; i < n; ++i) {
      while (!ready[i].load(std::memory_order_acquire)) std::this_thread::yield();
      if (tap) tap(*slot[i]);
      acc.consume(slot[i]->vec);
      slot[i].reset();
      consumed.store(i + 1, std::memory_order_release);
    }
    for (auto& th : pool) th.join();
  }
  rep.rank = acc.rank();
  rep.dim = rep.basis_size - rep.rank;
  return rep;
}

// ---------------------------------------------------------------------
// The four word-level identities behind the regularization theorems.
// Each returns the defect, which must be identically zero.
// ---------------------------------------------------------------------

inline LinComb zigzag_w(const Index& k) { return wmap_fast(zigzag_poset(k, 1)); }

inline std::array<LinComb, 4> lemma_identity_defects(const Index& k, const Index& l) {
  if (k.empty() || l.empty()) throw std::invalid_argument("lemma_identity_defects needs nonempty indices");
  const int r = k.depth(), s = l.depth();
  std::array<LinComb, 4> d;

  // (A_sh):  sum_i (-1)^i mu(k, l^i) sh rev(l_i)  +  (-1)^s k (.) rev(l)
  for (int i = 0; i < s; ++i) {
    LinComb t = shuffle(mu(k, l.suffix(i)), LinComb(Word::of_index(l.prefix(i).reversed())));
    d[0] += (i % 2) ? -t : t;
  }
  d[0] += LinComb(Word::of_index(odot(k, l.reversed()))) * Rat(s % 2 ? -1 : 1);

  // (A_sh*): sum_i (-1)^i mu(k^i, l) sh W(fence(rev(k_i)))  +  (-1)^r W(fence(l (.) rev(k)))
  for (int i = 0; i < r; ++i) {
    LinComb fence = i == 0 ? LinComb::one() : zigzag_w(k.prefix(i).reversed());
    LinComb t = shuffle(mu(k.suffix(i), l), fence);
    d[1] += (i % 2) ? -t : t;
  }
  d[1] += zigzag_w(odot(l, k.reversed())) * Rat(r % 2 ? -1 : 1);

  // (A_*):   sum_i (-1)^i (k (x) (l^i)*) * rev(l_i)  +  (-1)^s k (.) rev(l)
  for (int i = 0; i < s; ++i) {
    LinComb t = harmonic(circled_star(k, l.suffix(i)), LinComb(Word::of_index(l.prefix(i).reversed())));
    d[2] += (i % 2) ? -t : t;
  }
  d[2] += LinComb(Word::of_index(odot(k, l.reversed()))) * Rat(s % 2 ? -1 : 1);

  // (A_**):  sum_i (-1)^i (k^i (x) l*) * (rev(k_i))*  +  (-1)^r (l (.) rev(k))*
  for (int i = 0; i < r; ++i) {
    LinComb t = harmonic(circled_star(k.suffix(i), l), star_word(k.prefix(i).reversed()));
    d[3] += (i % 2) ? -t : t;
  }
  d[3] += star_word(odot(l, k.reversed())) * Rat(r % 2 ? -1 : 1);

  return d;
}

// ---------------------------------------------------------------------
// Kawashima support: Hoffman duals, the R involution and the grafted
// posets whose W images drive the proof.
// ---------------------------------------------------------------------

inline Word ones_word(int n) {
  Word w;
  for (int i = 0; i < n; ++i) w.push_back(1);
  return w;
}

// R(k) = (-1)^depth rev(k), extended linearly along the index basis.
inline LinComb r_operator(const LinComb& x) {
  LinComb out;
  for (const auto& [w, c] : x.terms()) {
    Index k = w.to_index();
    Rat sign = (k.depth() % 2) ? Rat(-1) : Rat(1);
    out.add(Word::of_index(k.reversed()), sign * c);
  }
  return out;
}

// W images of the two grafted posets: a_m hangs m circles over the base of
// the bullet-based fence of k, b_m over the bottom of the chain of k.
inline LinComb w_a_poset(int m, const Index& k) {
  if (k.empty()) throw std::invalid_argument("w_a_poset needs a nonempty index");
  return wmap_fast(graft_poset(m, zigzag_poset(k, 1)));
}

inline LinComb w_b_poset(int m, const Index& k) {
  if (k.empty()) return m == 0 ? LinComb::one() : LinComb::zero();
  return wmap_fast(graft_poset(m, chain_poset(k)));
}

// Linear extension over an H1 combination of index words.
inline LinComb w_b_poset(int m, const LinComb& x) {
  LinComb out;
  for (const auto& [w, c] : x.terms()) out += w_b_poset(m, w.to_index()) * c;
  return out;
}

// Defect of sum_{p+q=m} W(B_p(k)) * W(B_q(l)) = W(B_m(k*l)), the harmonic
// compatibility of the grafted chains.
inline LinComb kawashima_b_defect(int m, const Index& k, const Index& l) {
  if (k.empty() || l.empty()) throw std::invalid_argument("kawashima_b_defect needs nonempty indices");
  LinComb lhs;
  for (int p = 0; p <= m; ++p) lhs += harmonic(w_b_poset(p, k), w_b_poset(m - p, l));
  LinComb rhs = w_b_poset(m, harmonic(LinComb(Word::of_index(k)), LinComb(Word::of_index(l))));
  return lhs - rhs;
}

// Defect of sum_i (-1)^i W(A_m(k^i)) sh rev(k_i)  +  (-1)^r W(B_m(rev k)) = 0.
inline LinComb kawashima_ab_defect(int m, const Index& k) {
  if (k.empty()) throw std::invalid_argument("kawashima_ab_defect needs a nonempty index");
  if (m < 1) throw std::invalid_argument("kawashima_ab_defect needs m >= 1");
  const int r = k.depth();
  LinComb d;
  for (int i = 0; i < r; ++i) {
    LinComb t = shuffle(w_a_poset(m, k.suffix(i)), LinComb(Word::of_index(k.prefix(i).reversed())));
    d += (i % 2) ? -t : t;
  }
  d += w_b_poset(m, k.reversed()) * Rat(r % 2 ? -1 : 1);
  return d;
}

// Defect of R(k bar* l) = R(k) * R(l).
inline LinComb kawashima_r_defect(const Index& k, const Index& l) {
  LinComb lhs = r_operator(bar_harmonic(LinComb(Word::of_index(k)), LinComb(Word::of_index(l))));
  LinComb rhs = harmonic(r_operator(LinComb(Word::of_index(k))), r_operator(LinComb(Word::of_index(l))));
  return lhs - rhs;
}

// Defect of the primed multiplicativity sum_{p+q=m} B'_p(k) * B'_q(l)
// = B'_m(k bar* l) at the word level, B'_m = B_m after R.
inline LinComb kawashima_bprime_defect(int m, const Index& k, const Index& l) {
  if (k.empty() || l.empty()) throw std::invalid_argument("kawashima_bprime_defect needs nonempty indices");
  auto wbprime = [&](int mm, const LinComb& x) { return w_b_poset(mm, r_operator(x)); };
  LinComb lhs;
  for (int p = 0; p <= m; ++p)
    lhs += harmonic(wbprime(p, LinComb(Word::of_index(k))), wbprime(m - p, LinComb(Word::of_index(l))));
  LinComb rhs = wbprime(m, bar_harmonic(LinComb(Word::of_index(k)), LinComb(Word::of_index(l))));
  return lhs - rhs;
}

// The two sides of Kawashima's relation as evaluable combinations: factors
// of the left product sum and the (un-negated) right side.  All words are
// admissible by construction of the circled product.
struct KawashimaSides {
  std::vector<std::pair<LinComb, LinComb>> lhs_factors;  // one pair per (p,q), p+q = m
  LinComb rhs;                                           // Z applies with a leading minus
};

inline KawashimaSides kawashima_sides(int m, const Index& k, const Index& l) {
  if (m < 1) throw std::invalid_argument("kawashima_sides needs m >= 1");
  if (k.empty() || l.empty()) throw std::invalid_argument("kawashima_sides needs nonempty indices");
  KawashimaSides s;
  for (int p = 1; p < m; ++p) {
    int q = m - p;
    s.lhs_factors.emplace_back(
        circled_harmonic(LinComb(ones_word(p)), star_word(hoffman_dual(k))),
        circled_harmonic(LinComb(ones_word(q)), star_word(hoffman_dual(l))));
  }
  LinComb bar = bar_harmonic(LinComb(Word::of_index(k)), LinComb(Word::of_index(l)));
  s.rhs = circled_harmonic(LinComb(ones_word(m)), star_lincomb(hoffman_dual(bar)));
  return s;
}

// ---------------------------------------------------------------------
// Consequences used as cross-checks: restricted sum formula, Hoffman's
// relation, duality.
// ---------------------------------------------------------------------

// Compositions of total into exactly `parts` positive parts, lexicographic.
inline std::vector<Index> compositions_exact(int total, int parts) {
  std::vector<Index> out;
  if (parts < 0 || total < parts) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int left) -> void {
    if (left == 0) {
      if (rem == 0) out.push_back(Index(cur));
      return;
    }
    for (int first = 1; first + (left - 1) <= rem; ++first) {
      cur.push_back(first);
      self(self, rem - first, left - 1);
      cur.pop_back();
    }
  };
  rec(rec, total, parts);
  return out;
}

// S(k,p,q) and T(k,p,q): both sides of the restricted sum formula, as
// combinations of admissible words of weight k.
inline std::pair<LinComb, LinComb> restricted_sum_sides(int k, int p, int q) {
  if (p < 1 || q < 1 || k < p + q) throw std::invalid_argument("restricted_sum_sides needs k >= p+q, p,q >= 1");
  LinComb s, t;
  for (const Index& c : compositions_exact(k - p, q)) {
    std::vector<int> parts(static_cast<size_t>(p - 1), 1);
    parts.insert(parts.end(), c.parts().begin(), c.parts().end());
    parts.back() += 1;
    s.add(Word::of_index(Index(parts)), 1);
  }
  for (const Index& c : compositions_exact(p + q - 1, p)) {
    std::vector<int> parts = c.parts();
    parts.back() += k - p - q + 1;
    t.add(Word::of_index(Index(parts)), 1);
  }
  return {s, t};
}

// Hoffman's relation for an admissible index: raise one entry on the left,
// split one entry on the right.
inline std::pair<LinComb, LinComb> hoffman_sides(const Index& k) {
  if (!k.admissible() || k.empty()) throw std::invalid_argument("hoffman_sides needs a nonempty admissible index");
  LinComb lhs, rhs;
  const int r = k.depth();
  for (int i = 0; i < r; ++i) {
    std::vector<int> parts = k.parts();
    parts[static_cast<size_t>(i)] += 1;
    lhs.add(Word::of_index(Index(parts)), 1);
  }
  for (int i = 0; i < r; ++i) {
    if (k[i] < 2) continue;
    for (int j = 1; j <= k[i] - 1; ++j) {
      std::vector<int> parts(k.parts().begin(), k.parts().begin() + i);
      parts.push_back(j);
      parts.push_back(k[i] - j + 1);
      parts.insert(parts.end(), k.parts().begin() + i + 1, k.parts().end());
      rhs.add(Word::of_index(Index(parts)), 1);
    }
  }
  return {lhs, rhs};
}

// The same relation as the integral-series instance it springs from:
// mu(kt, (1,1)) - kt (x) (1,1)* with kt = k with its last entry lowered.
inline LinComb hoffman_via_intser(const Index& k) {
  if (!k.admissible() || k.empty()) throw std::invalid_argument("hoffman_via_intser needs admissible input");
  std::vector<int> parts = k.parts();
  parts.back() -= 1;
  Index kt(parts);
  return mu(kt, Index{1, 1}) - circled_star(kt, Index{1, 1});
}

inline LinComb duality_defect(const Index& k) {
  if (!k.admissible() || k.empty()) throw std::invalid_argument("duality_defect needs admissible input");
  Word w = Word::of_index(k);
  return LinComb(w) - LinComb(w.dagger());
}

}  // namespace mzv
