#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "index.hpp"

namespace mzv {

// A word in the two letters e0, e1, at most 64 letters long.  Packing is
// MSB-aligned: letter i (0-based from the left) lives at bit (63 - i), with
// 1 = e1.  With that layout the unsigned comparison of (bits, length) pairs
// is exactly lexicographic word order with e0 < e1 and prefixes first, which
// keeps ordered containers cheap.
class Word {
 public:
  static constexpr uint32_t kMaxLen = 64;

  Word() = default;  // the empty word, the monomial 1

  static Word letter(int bit) {
    Word w;
    w.push_back(bit);
    return w;
  }
  static Word e0() { return letter(0); }
  static Word e1() { return letter(1); }

  static Word from_string(std::string_view s) {
    Word w;
    for (char c : s) {
      if (c != '0' && c != '1') throw std::invalid_argument("Word::from_string: expected only 0/1");
      w.push_back(c - '0');
    }
    return w;
  }

  // e_k = e1 e0^(k-1), concatenated over the parts.
  static Word of_index(const Index& k) {
    Word w;
    for (int part : k) {
      w.push_back(1);
      for (int i = 1; i < part; ++i) w.push_back(0);
    }
    return w;
  }

  uint32_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  int letter_at(uint32_t i) const {
    if (i >= len_) throw std::out_of_range("Word::letter_at");
    return static_cast<int>((bits_ >> (63 - i)) & 1u);
  }

  void push_back(int bit) {
    if (len_ >= kMaxLen) throw std::length_error("Word: exceeded 64 letters");
    if (bit) bits_ |= (uint64_t(1) << (63 - len_));
    ++len_;
  }

  Word prepended(int bit) const {
    if (len_ >= kMaxLen) throw std::length_error("Word: exceeded 64 letters");
    Word w;
    w.bits_ = (bit ? (uint64_t(1) << 63) : 0) | (bits_ >> 1);
    w.len_ = len_ + 1;
    return w;
  }

  Word appended(int bit) const {
    Word w = *this;
    w.push_back(bit);
    return w;
  }

  friend Word concat(const Word& a, const Word& b) {
    if (b.len_ == 0) return a;
    if (a.len_ + b.len_ > kMaxLen) throw std::length_error("Word: exceeded 64 letters");
    Word w;
    w.bits_ = a.bits_ | (b.bits_ >> a.len_);
    w.len_ = a.len_ + b.len_;
    return w;
  }

  // First n letters.
  Word prefix(uint32_t n) const {
    if (n > len_) throw std::out_of_range("Word::prefix");
    Word w;
    w.bits_ = (n == 0) ? 0 : (bits_ & (~uint64_t(0) << (64 - n)));
    w.len_ = n;
    return w;
  }

  // Word with the first n letters removed.
  Word drop_front(uint32_t n) const {
    if (n > len_) throw std::out_of_range("Word::drop_front");
    Word w;
    w.bits_ = (n == 64) ? 0 : (bits_ << n);
    w.len_ = len_ - n;
    return w;
  }

  uint32_t ones() const { return static_cast<uint32_t>(std::popcount(bits_)); }

  uint32_t trailing_ones() const {
    if (len_ == 0) return 0;
    uint64_t rev = bits_ >> (64 - len_);  // last letter now at bit 0
    return static_cast<uint32_t>(std::countr_one(rev));
  }

  // Membership in the subalgebras: H1 = Q + e1*H, H0 = Q + e1*H*e0.  Words of
  // H0 are the admissible ones.
  bool in_h1() const { return len_ == 0 || letter_at(0) == 1; }
  bool in_h0() const { return len_ == 0 || (letter_at(0) == 1 && letter_at(len_ - 1) == 0); }

  // Anti-automorphism: reverse the letters and swap e0 <-> e1.
  Word dagger() const {
    Word w;
    for (uint32_t i = 0; i < len_; ++i) w.push_back(1 - letter_at(len_ - 1 - i));
    return w;
  }

  // Words of H1 factor uniquely as e_{k_1} ... e_{k_r}.
  Index to_index() const {
    if (!in_h1()) throw std::domain_error("Word::to_index: word not in H1");
    std::vector<int> parts;
    for (uint32_t i = 0; i < len_; ++i) {
      if (letter_at(i) == 1)
        parts.push_back(1);
      else
        ++parts.back();
    }
    return Index(std::move(parts));
  }

  std::string str() const {
    std::string s;
    s.reserve(len_);
    for (uint32_t i = 0; i < len_; ++i) s += char('0' + letter_at(i));
    return s;
  }

  // "e1 e0 e1"; the empty word prints as "1".
  std::string letters_str() const {
    if (len_ == 0) return "1";
    std::string s;
    for (uint32_t i = 0; i < len_; ++i) {
      if (i) s += ' ';
      s += letter_at(i) ? "e1" : "e0";
    }
    return s;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.bits_ != b.bits_) return a.bits_ < b.bits_ ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.len_ <=> b.len_;
  }

  uint64_t raw_bits() const { return bits_; }

 private:
  uint64_t bits_ = 0;
  uint32_t len_ = 0;
};

}  // namespace mzv
