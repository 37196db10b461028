#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "poset.hpp"
#include "products.hpp"

namespace mzv {

// Polynomial in the formal variable T with word-algebra coefficients: the
// codomain of the regularization maps (T plays the role of the divergent
// single sum / integral carried by a symbol).
class SymTPoly {
 public:
  SymTPoly() = default;
  explicit SymTPoly(LinComb constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
  }

  static SymTPoly monomial(int deg, LinComb coeff) {
    SymTPoly p;
    if (!coeff.is_zero()) {
      p.c_.assign(static_cast<size_t>(deg) + 1, LinComb());
      p.c_[static_cast<size_t>(deg)] = std::move(coeff);
    }
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

  LinComb coeff(int i) const {
    if (i < 0 || i > degree()) return LinComb();
    return c_[static_cast<size_t>(i)];
  }

  const std::vector<LinComb>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }

  void add_term(int deg, const LinComb& x) {
    if (x.is_zero()) return;
    if (deg >= static_cast<int>(c_.size())) c_.resize(static_cast<size_t>(deg) + 1);
    c_[static_cast<size_t>(deg)] += x;
    trim();
  }

  SymTPoly& operator+=(const SymTPoly& o) {
    if (static_cast<size_t>(o.c_.size()) > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  SymTPoly& operator-=(const SymTPoly& o) {
    if (static_cast<size_t>(o.c_.size()) > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  SymTPoly& operator*=(const Rat& s) {
    for (auto& x : c_) x *= s;
    if (s == 0) c_.clear();
    return *this;
  }
  friend SymTPoly operator+(SymTPoly a, const SymTPoly& b) { return a += b; }
  friend SymTPoly operator-(SymTPoly a, const SymTPoly& b) { return a -= b; }
  friend SymTPoly operator*(SymTPoly a, const Rat& s) { return a *= s; }

  // Multiplication by T.
  SymTPoly shifted() const {
    if (is_zero()) return SymTPoly();
    SymTPoly p;
    p.c_.assign(c_.size() + 1, LinComb());
    for (size_t i = 0; i < c_.size(); ++i) p.c_[i + 1] = c_[i];
    return p;
  }

  friend bool operator==(const SymTPoly&, const SymTPoly&) = default;

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (int i = 0; i <= degree(); ++i) {
      if (c_[static_cast<size_t>(i)].is_zero()) continue;
      nlohmann::json e = c_[static_cast<size_t>(i)].to_json();
      e["T_degree"] = i;
      arr.push_back(std::move(e));
    }
    return nlohmann::json{{"coeffs", arr}};
  }

  static SymTPoly from_json(const nlohmann::json& j) {
    SymTPoly p;
    for (const auto& e : j.at("coeffs")) p.add_term(e.at("T_degree").get<int>(), LinComb::from_json(e));
    return p;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const LinComb& x = c_[static_cast<size_t>(i)];
      if (x.is_zero()) continue;
      if (!first) s += " + ";
      s += "(" + x.str() + ")";
      if (i == 1) s += "·T";
      if (i > 1) s += "·T^" + std::to_string(i);
      first = false;
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<LinComb> c_;
};

enum class ProductKind { Shuffle, Harmonic };

namespace detail {

inline LinComb apply_product(ProductKind kind, const LinComb& a, const LinComb& b) {
  return kind == ProductKind::Shuffle ? shuffle(a, b) : harmonic(a, b);
}

inline SymTPoly coeffwise_product(ProductKind kind, const LinComb& a, const SymTPoly& p) {
  SymTPoly r;
  for (int i = 0; i <= p.degree(); ++i) r.add_term(i, apply_product(kind, a, p.coeff(i)));
  return r;
}

inline SymTPoly reg_word(ProductKind kind, const Word& w);

inline SymTPoly reg_lincomb(ProductKind kind, const LinComb& x) {
  SymTPoly r;
  for (const auto& [w, c] : x.terms()) {
    SymTPoly t = reg_word(kind, w);
    r += t * c;
  }
  return r;
}

// reg of the pure power e1^m.  Under shuffle this is T^m/m! on the nose; under
// the harmonic product it follows from peeling one e1:
//   e1 * e1^(m-1) = m e1^m + (terms with an inner 2),
// so reg(e1^m) = (T reg(e1^(m-1)) - reg(rest)) / m.
inline const SymTPoly& reg_ones(ProductKind kind, int m) {
  thread_local std::map<std::pair<ProductKind, int>, SymTPoly> cache;
  auto key = std::make_pair(kind, m);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  SymTPoly r;
  if (m == 0) {
    r = SymTPoly(LinComb::one());
  } else if (kind == ProductKind::Shuffle) {
    r = SymTPoly::monomial(m, LinComb::one() * Rat(Int(1), factorial(static_cast<unsigned long>(m))));
  } else {
    Word ones;
    for (int i = 0; i < m; ++i) ones.push_back(1);
    LinComb p = harmonic(LinComb(Word::e1()), LinComb(ones.drop_front(1)));
    p.add(ones, -Rat(m));  // remove the m·e1^m head, leaving fewer trailing ones
    r = (reg_ones(kind, m - 1).shifted() - reg_lincomb(kind, p)) * Rat(1, m);
  }
  return cache.emplace(std::move(key), std::move(r)).first->second;
}

// The H1 = H0[e1] structure theorem, made algorithmic: strip the trailing run
// of e1's, multiply the admissible head back against reg(e1^m) and correct by
// the strictly smaller remainder.  The head coefficient is exactly 1 because
// the head ends in e0, so each step is an exact division.
inline SymTPoly reg_word(ProductKind kind, const Word& w) {
  if (!w.in_h1()) throw std::domain_error("regularization needs H1 input");
  if (w.in_h0()) return SymTPoly(LinComb(w));
  thread_local std::map<std::pair<ProductKind, Word>, SymTPoly> cache;
  auto key = std::make_pair(kind, w);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  const uint32_t m = w.trailing_ones();
  const Word u = w.prefix(w.size() - m);
  SymTPoly r;
  if (u.empty()) {
    r = reg_ones(kind, static_cast<int>(m));
  } else {
    Word ones;
    for (uint32_t i = 0; i < m; ++i) ones.push_back(1);
    LinComb p = apply_product(kind, LinComb(u), LinComb(ones));
    p.add(w, -1);  // all surviving terms have fewer trailing e1's
    r = coeffwise_product(kind, LinComb(u), reg_ones(kind, static_cast<int>(m)));
    r -= reg_lincomb(kind, p);
  }
  return cache.emplace(std::move(key), std::move(r)).first->second;
}

}  // namespace detail

// The two regularization maps H1 -> H0[T].  Both are algebra homomorphisms
// for their respective products, restrict to the identity on H0, and send
// e1 to T.
inline SymTPoly reg_shuffle(const LinComb& x) { return detail::reg_lincomb(ProductKind::Shuffle, x); }
inline SymTPoly reg_shuffle(const Word& w) { return detail::reg_word(ProductKind::Shuffle, w); }
inline SymTPoly reg_harmonic(const LinComb& x) { return detail::reg_lincomb(ProductKind::Harmonic, x); }
inline SymTPoly reg_harmonic(const Word& w) { return detail::reg_word(ProductKind::Harmonic, w); }

// Star regularizations of an index: harmonic side goes through the star
// expansion, shuffle side through W of the k-fence with bullet base.
inline SymTPoly reg_star_harmonic(const Index& k) { return reg_harmonic(star_word(k)); }
inline SymTPoly reg_star_shuffle(const Index& k) {
  if (k.empty()) throw std::invalid_argument("reg_star_shuffle needs a nonempty index");
  return reg_shuffle(wmap_fast(zigzag_poset(k, 1)));
}

// Substitute T = e1 back, multiplying coefficients with the chosen product:
// the left inverse used by the round-trip tests.  T^i becomes the i-fold
// product power of e1, which is i!·e1...e1 under the shuffle.
inline LinComb tpoly_substitute_e1(const SymTPoly& p, ProductKind kind) {
  LinComb r;
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i).is_zero()) continue;
    LinComb power;
    if (kind == ProductKind::Shuffle) {
      Word ones;
      for (int j = 0; j < i; ++j) ones.push_back(1);
      power = LinComb(ones) * Rat(factorial(static_cast<unsigned long>(i)));
    } else {
      power = e1_harmonic_power(i);
    }
    r += detail::apply_product(kind, p.coeff(i), power);
  }
  return r;
}

inline SymTPoly tpoly_product(ProductKind kind, const SymTPoly& a, const SymTPoly& b) {
  SymTPoly r;
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j) {
      if (b.coeff(j).is_zero()) continue;
      r.add_term(i + j, detail::apply_product(kind, a.coeff(i), b.coeff(j)));
    }
  }
  return r;
}

}  // namespace mzv
