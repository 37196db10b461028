#include <catch_amalgamated.hpp>

#include <mzv/lincomb.hpp>
#include <mzv/word.hpp>

using namespace mzv;

TEST_CASE("word construction and letters") {
  Word w = Word::from_string("110");
  CHECK(w.size() == 3);
  CHECK(w.letter_at(0) == 1);
  CHECK(w.letter_at(1) == 1);
  CHECK(w.letter_at(2) == 0);
  CHECK(w.str() == "110");
  CHECK(w.letters_str() == "e1 e1 e0");
  CHECK(Word().empty());
  CHECK(Word().letters_str() == "1");
  CHECK_THROWS_AS(Word::from_string("12"), std::invalid_argument);
}

TEST_CASE("words of indices") {
  CHECK(Word::of_index(Index{1, 2}) == Word::from_string("110"));
  CHECK(Word::of_index(Index{3}) == Word::from_string("100"));
  CHECK(Word::of_index(Index{}) == Word());
  CHECK(Word::from_string("110").to_index() == Index{1, 2});
  for (int w = 1; w <= 12; ++w)
    for (const Index& k : compositions(w)) {
      Word word = Word::of_index(k);
      CHECK(static_cast<int>(word.size()) == k.weight());
      CHECK(word.in_h1());
      CHECK(word.to_index() == k);
      CHECK(word.in_h0() == k.admissible());
      CHECK(word.ones() == static_cast<uint32_t>(k.depth()));
    }
}

TEST_CASE("prefix, drop_front, concat round trip") {
  Word w = Word::from_string("110100");
  for (uint32_t i = 0; i <= w.size(); ++i) {
    CHECK(concat(w.prefix(i), w.drop_front(i)) == w);
  }
  CHECK(w.prefix(0) == Word());
  CHECK(w.drop_front(6) == Word());
  CHECK(w.trailing_ones() == 0);
  CHECK(Word::from_string("1011").trailing_ones() == 2);
  CHECK(Word::from_string("111").trailing_ones() == 3);
}

TEST_CASE("dagger reverses and swaps letters") {
  // z(1,2) and z(3) are dual: 110 <-> 100.
  CHECK(Word::from_string("110").dagger() == Word::from_string("100"));
  CHECK(Word::from_string("1100").dagger() == Word::from_string("1100"));
  for (int w = 2; w <= 12; ++w)
    for (const Index& k : compositions(w)) {
      Word word = Word::of_index(k);
      CHECK(word.dagger().dagger() == word);
      if (k.admissible()) CHECK(word.dagger().in_h0());
    }
}

TEST_CASE("64 letter capacity") {
  std::string s;
  for (int i = 0; i < 64; ++i) s += (i % 2) ? '0' : '1';
  Word w = Word::from_string(s);
  CHECK(w.size() == 64);
  CHECK(w.str() == s);
  CHECK(w.dagger().dagger() == w);
  CHECK_THROWS_AS(w.push_back(0), std::length_error);
}

TEST_CASE("linear combinations collect and cancel") {
  LinComb a(Word::from_string("10"));
  a += LinComb(Word::from_string("10"), Rat(2));
  CHECK(a.coeff(Word::from_string("10")) == Rat(3));
  a -= LinComb(Word::from_string("10"), Rat(3));
  CHECK(a.is_zero());
  LinComb b(Word::from_string("110"), Rat(1, 2));
  LinComb c = b * Rat(4);
  CHECK(c.coeff(Word::from_string("110")) == Rat(2));
  CHECK((b - b).is_zero());
}

TEST_CASE("lincomb json round trip") {
  LinComb x(Word::from_string("110"), Rat(3, 2));
  x.add(Word::from_string("100"), Rat(-7));
  CHECK(LinComb::from_json(x.to_json()) == x);
  CHECK(LinComb::from_json(LinComb().to_json()).is_zero());
}

TEST_CASE("star words expand with plus merges") {
  LinComb s = star_word(Index{1, 1});
  CHECK(s.coeff(Word::of_index(Index{1, 1})) == Rat(1));
  CHECK(s.coeff(Word::of_index(Index{2})) == Rat(1));
  CHECK(s.size() == 2);
  CHECK(star_word(Index{}) == LinComb::one());
  CHECK(star_word(Index{2, 1}).size() == 2);
}

TEST_CASE("hoffman dual extends linearly") {
  LinComb x(Word::of_index(Index{2}), Rat(5));
  LinComb d = hoffman_dual(x);
  CHECK(d.coeff(Word::of_index(Index{1, 1})) == Rat(5));
  CHECK(d.size() == 1);
}
