#include <catch_amalgamated.hpp>

#include <mzv/regularize.hpp>

using namespace mzv;

namespace {
Word w(const std::string& s) { return Word::from_string(s); }
}  // namespace

TEST_CASE("admissible words are their own regularization") {
  for (const std::string& s : {"10", "100", "110", "1100", "1010"}) {
    SymTPoly p = reg_shuffle(w(s));
    CHECK(p.degree() == 0);
    CHECK(p.coeff(0) == LinComb(w(s)));
    SymTPoly q = reg_harmonic(w(s));
    CHECK(q.degree() == 0);
    CHECK(q.coeff(0) == LinComb(w(s)));
  }
}

TEST_CASE("pure e1 powers") {
  // Shuffle: T^m / m!.
  SymTPoly p = reg_shuffle(w("111"));
  CHECK(p.degree() == 3);
  CHECK(p.coeff(3) == LinComb::one() * Rat(1, 6));
  CHECK(p.coeff(2).is_zero());
  CHECK(p.coeff(1).is_zero());
  CHECK(p.coeff(0).is_zero());
  // Harmonic: z(1)^2 = T^2 - z(2), so reg(e1e1) = T^2/2 - z(2)/2.
  SymTPoly q = reg_harmonic(w("11"));
  CHECK(q.degree() == 2);
  CHECK(q.coeff(2) == LinComb::one() * Rat(1, 2));
  CHECK(q.coeff(1).is_zero());
  CHECK(q.coeff(0) == LinComb(Word::of_index(Index{2})) * Rat(-1, 2));
}

TEST_CASE("known mixed regularizations") {
  // reg_sh(e1e0e1) = T z(2) - 2 z(1,2).
  SymTPoly p = reg_shuffle(w("101"));
  CHECK(p.coeff(1) == LinComb(w("10")));
  CHECK(p.coeff(0) == LinComb(w("110")) * Rat(-2));
  // reg_*(e1e0e1) = T z(2) - z(1,2) - z(3).
  SymTPoly q = reg_harmonic(w("101"));
  CHECK(q.coeff(1) == LinComb(w("10")));
  LinComb c0 = q.coeff(0);
  CHECK(c0.coeff(w("110")) == Rat(-1));
  CHECK(c0.coeff(w("100")) == Rat(-1));
  CHECK(c0.size() == 2);
}

TEST_CASE("regularization is the inverse of substituting e1 back") {
  for (int wt = 1; wt <= 8; ++wt)
    for (const Index& k : compositions(wt)) {
      Word word = Word::of_index(k);
      CHECK(tpoly_substitute_e1(reg_shuffle(word), ProductKind::Shuffle) == LinComb(word));
      CHECK(tpoly_substitute_e1(reg_harmonic(word), ProductKind::Harmonic) == LinComb(word));
    }
}

TEST_CASE("regularized coefficients are admissible") {
  for (int wt = 1; wt <= 8; ++wt)
    for (const Index& k : compositions(wt)) {
      Word word = Word::of_index(k);
      SymTPoly psh = reg_shuffle(word);
      for (const auto& c : psh.coeffs()) CHECK(c.in_h0());
      SymTPoly pst = reg_harmonic(word);
      for (const auto& c : pst.coeffs()) CHECK(c.in_h0());
    }
}

TEST_CASE("regularization maps are algebra maps") {
  // reg(u product v) = reg(u) reg(v) with the matching product on
  // coefficients, checked on small pairs.
  std::vector<Word> words = {w("1"), w("10"), w("11"), w("110"), w("101")};
  for (const auto& a : words)
    for (const auto& b : words) {
      SymTPoly lhs_sh = reg_shuffle(shuffle(LinComb(a), LinComb(b)));
      SymTPoly rhs_sh = tpoly_product(ProductKind::Shuffle, reg_shuffle(a), reg_shuffle(b));
      CHECK(lhs_sh == rhs_sh);
      SymTPoly lhs_st = reg_harmonic(harmonic(LinComb(a), LinComb(b)));
      SymTPoly rhs_st = tpoly_product(ProductKind::Harmonic, reg_harmonic(a), reg_harmonic(b));
      CHECK(lhs_st == rhs_st);
    }
}

TEST_CASE("star regularizations at small indices") {
  // Harmonic star of (1,1): z*(1,1) = z(1,1) + z(2) regularizes to
  // T^2/2 + z(2)/2.
  SymTPoly q = reg_star_harmonic(Index{1, 1});
  CHECK(q.coeff(2) == LinComb::one() * Rat(1, 2));
  CHECK(q.coeff(0) == LinComb(w("10")) * Rat(1, 2));
  // Admissible star stays T-free.
  CHECK(reg_star_harmonic(Index{1, 2}).degree() == 0);
  CHECK(reg_star_shuffle(Index{2}).degree() == 0);
  CHECK(reg_star_shuffle(Index{2}).coeff(0) == LinComb(w("10")));
  CHECK_THROWS_AS(reg_star_shuffle(Index{}), std::invalid_argument);
}

TEST_CASE("t-poly arithmetic and json") {
  SymTPoly p = SymTPoly::monomial(2, LinComb::one());
  p.add_term(0, LinComb(w("10"), Rat(3)));
  CHECK(p.degree() == 2);
  CHECK(SymTPoly::from_json(p.to_json()) == p);
  SymTPoly z;
  CHECK(z.degree() == -1);
  CHECK(SymTPoly::from_json(z.to_json()) == z);
}
