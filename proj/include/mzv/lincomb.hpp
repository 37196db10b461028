#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "arith.hpp"
#include "word.hpp"

namespace mzv {

// Finite Q-linear combination of words, the working element type of the word
// algebra H.  Terms are kept in lexicographic word order and zero
// coefficients are erased eagerly, so iteration order and equality are
// canonical.
class LinComb {
 public:
  using Terms = std::map<Word, Rat>;

  LinComb() = default;

  explicit LinComb(const Word& w, Rat c = Rat(1)) {
    if (c != 0) terms_.emplace(w, std::move(c));
  }

  static LinComb zero() { return LinComb(); }
  static LinComb one() { return LinComb(Word()); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  Rat coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add(const Word& w, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  LinComb& operator*=(const Rat& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(LinComb a, const Rat& s) { return a *= s; }
  friend LinComb operator*(const Rat& s, LinComb a) { return a *= s; }
  LinComb operator-() const {
    LinComb r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
  }

  friend bool operator==(const LinComb&, const LinComb&) = default;

  bool in_h1() const {
    for (const auto& [w, c] : terms_)
      if (!w.in_h1()) return false;
    return true;
  }
  bool in_h0() const {
    for (const auto& [w, c] : terms_)
      if (!w.in_h0()) return false;
    return true;
  }

  // Weight (= letter count) when all terms agree on it; empty for mixed or
  // zero combinations.
  std::optional<int> homogeneous_weight() const {
    std::optional<int> w;
    for (const auto& [word, c] : terms_) {
      if (!w)
        w = static_cast<int>(word.size());
      else if (*w != static_cast<int>(word.size()))
        return std::nullopt;
    }
    return w;
  }

  LinComb dagger() const {
    LinComb r;
    for (const auto& [w, c] : terms_) r.add(w.dagger(), c);
    return r;
  }

  // Prepend / append a letter run to every term.
  LinComb prepended(int bit) const {
    LinComb r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w.prepended(bit), c);
    return r;
  }
  LinComb concat_left(const Word& u) const {
    LinComb r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(concat(u, w), c);
    return r;
  }
  LinComb concat_right(const Word& v) const {
    LinComb r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(concat(w, v), c);
    return r;
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [w, c] : terms_) arr.push_back({{"word", w.str()}, {"coeff", rat_str(c)}});
    return nlohmann::json{{"terms", arr}};
  }

  static LinComb from_json(const nlohmann::json& j) {
    if (!j.contains("terms") || !j["terms"].is_array())
      throw std::invalid_argument("LinComb::from_json: missing terms array");
    LinComb r;
    for (const auto& t : j["terms"])
      r.add(Word::from_string(t.at("word").get<std::string>()), rat_parse(t.at("coeff").get<std::string>()));
    return r;
  }

  // "2·e1 e1 e0 - 1/2·e1 e0"; zero prints as "0".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      Rat a = c;
      if (first) {
        if (a < 0) {
          s += "-";
          a = -a;
        }
      } else {
        s += (a < 0) ? " - " : " + ";
        if (a < 0) a = -a;
      }
      s += rat_str(a) + "·" + w.letters_str();
      first = false;
    }
    return s;
  }

  // Same combination written multiplicatively in the e_k generators:
  // "2·z(1,2) - 1·z(3)".  Only valid on H1 combinations.
  std::string zeta_str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      Rat a = c;
      if (first) {
        if (a < 0) {
          s += "-";
          a = -a;
        }
      } else {
        s += (a < 0) ? " - " : " + ";
        if (a < 0) a = -a;
      }
      s += rat_str(a) + "·z(" + w.to_index().str() + ")";
      first = false;
    }
    return s;
  }

 private:
  Terms terms_;
};

// The star expansion of an index, as a combination of H1 words (all
// coefficients 1, one term per comma/plus choice).  The empty index stars
// to the empty word, matching 1* = 1 on H1.
inline LinComb star_word(const Index& k) {
  if (k.empty()) return LinComb::one();
  LinComb r;
  for (const Index& t : star_expand(k)) r.add(Word::of_index(t), 1);
  return r;
}

// Termwise star expansion of an H1 combination (indices linearly).
inline LinComb star_lincomb(const LinComb& x) {
  LinComb r;
  for (const auto& [w, c] : x.terms()) r += star_word(w.to_index()) * c;
  return r;
}

// Q-linear extension of the Hoffman dual along the index basis of H1.
inline LinComb hoffman_dual(const LinComb& x) {
  LinComb r;
  for (const auto& [w, c] : x.terms()) {
    if (w.empty())
      r.add(w, c);
    else
      r.add(Word::of_index(hoffman_dual(w.to_index())), c);
  }
  return r;
}

}  // namespace mzv
