#include <catch_amalgamated.hpp>

#include <mzv/relations.hpp>

using namespace mzv;

namespace {

LinComb lc(std::initializer_list<std::pair<Index, long>> terms) {
  LinComb x;
  for (const auto& [k, c] : terms) x.add(Word::of_index(k), Rat(c));
  return x;
}

int ones_in(const Word& w) {
  int n = 0;
  for (uint32_t i = 0; i < w.size(); ++i) n += w.letter_at(i);
  return n;
}

std::vector<Index> admissible_of_weight(int w) {
  std::vector<Index> out;
  for (const Index& k : compositions(w))
    if (k.admissible()) out.push_back(k);
  return out;
}

}  // namespace

TEST_CASE("integral-series relation at the worked pair") {
  RelationRecord r = intser_relation(Index{1, 1}, Index{2, 1});
  CHECK(r.family == "intser");
  CHECK(r.weight == 5);
  CHECK(r.lhs == lc({{Index{1, 1, 3}, 6}, {Index{1, 2, 2}, 2}, {Index{2, 1, 2}, 1}}));
  CHECK(r.rhs == lc({{Index{1, 2, 2}, 1}, {Index{2, 1, 2}, 1}, {Index{3, 2}, 1}, {Index{1, 4}, 1}}));
  WeightBasis basis(5);
  LinComb back;
  for (const auto& [c, q] : r.vec) back.add(basis.word_at(c), q);
  CHECK(back == r.lhs - r.rhs);
  CHECK_THROWS_AS(intser_relation(Index{}, Index{2}), std::invalid_argument);
}

TEST_CASE("relation pair enumeration counts") {
  size_t total = 0;
  for (int w = 2; w <= 7; ++w) {
    auto pairs = relation_pairs(w, false);
    CHECK(pairs.size() == (static_cast<size_t>(w - 1) << (w - 2)));
    total += pairs.size();
  }
  CHECK(total == 321);
  CHECK(relation_pairs(12, true).size() == 9217);
  CHECK_THROWS_AS(relation_pairs(1, false), std::invalid_argument);
}

TEST_CASE("depth-one second arguments give identical sides") {
  for (int w = 2; w <= 6; ++w)
    for (const auto& [k, l] : relation_pairs(w, false)) {
      if (l.depth() != 1) continue;
      RelationRecord r = intser_relation(k, l);
      CHECK(r.lhs == r.rhs);
      CHECK(r.vec.empty());
    }
}

TEST_CASE("deeper second arguments give genuine relations") {
  for (int w = 2; w <= 8; ++w)
    for (const auto& [k, l] : relation_pairs(w, true)) {
      RelationRecord r = intser_relation(k, l);
      CHECK_FALSE(r.vec.empty());
    }
}

TEST_CASE("one-letter counts stratify the two sides") {
  for (int w = 2; w <= 7; ++w)
    for (const auto& [k, l] : relation_pairs(w, false)) {
      RelationRecord r = intser_relation(k, l);
      const int expect = k.depth() + l.depth() - 1;
      for (const auto& [word, c] : r.lhs.terms()) CHECK(ones_in(word) == expect);
      bool below = false;
      for (const auto& [word, c] : r.rhs.terms()) {
        CHECK(ones_in(word) <= expect);
        if (ones_in(word) < expect) below = true;
      }
      if (l.depth() > 1) CHECK(below);
    }
}

TEST_CASE("relation records survive json round trips") {
  RelationRecord r = intser_relation(Index{2, 1}, Index{1, 2});
  nlohmann::json j = r.to_json();
  RelationRecord s = RelationRecord::from_json(nlohmann::json::parse(j.dump()));
  CHECK(s.family == r.family);
  CHECK(s.k == r.k);
  CHECK(s.l == r.l);
  CHECK(s.weight == r.weight);
  CHECK(s.lhs == r.lhs);
  CHECK(s.rhs == r.rhs);
  CHECK(s.vec == r.vec);
}

TEST_CASE("regularization lemma defects vanish on small indices") {
  for (int w = 2; w <= 6; ++w)
    for (int a = 1; a < w; ++a)
      for (const Index& k : compositions(a))
        for (const Index& l : compositions(w - a)) {
          auto d = lemma_identity_defects(k, l);
          for (int i = 0; i < 4; ++i) {
            INFO("identity " << i << " at k=(" << k.str() << ") l=(" << l.str() << ")");
            CHECK(d[static_cast<size_t>(i)].is_zero());
          }
        }
}

TEST_CASE("grafted poset images") {
  CHECK(w_b_poset(0, Index{}) == LinComb::one());
  CHECK(w_b_poset(2, Index{}) == LinComb::zero());
  CHECK(w_b_poset(0, Index{2, 1}) == LinComb(Word::of_index(Index{2, 1})));
  CHECK(w_a_poset(1, Index{1}) == LinComb(Word::from_string("10")));
  CHECK_THROWS_AS(w_a_poset(1, Index{}), std::invalid_argument);
}

TEST_CASE("grafted chains multiply harmonically") {
  std::vector<Index> small;
  for (int w = 1; w <= 3; ++w)
    for (const Index& k : compositions(w)) small.push_back(k);
  for (int m = 0; m <= 2; ++m)
    for (const Index& k : small)
      for (const Index& l : small) {
        INFO("m=" << m << " k=(" << k.str() << ") l=(" << l.str() << ")");
        CHECK(kawashima_b_defect(m, k, l).is_zero());
      }
}

TEST_CASE("grafted fences collapse to grafted chains") {
  for (int m = 1; m <= 2; ++m)
    for (int w = 1; w <= 4; ++w)
      for (const Index& k : compositions(w)) {
        INFO("m=" << m << " k=(" << k.str() << ")");
        CHECK(kawashima_ab_defect(m, k).is_zero());
      }
}

TEST_CASE("the sign-reversal operator intertwines the two harmonic products") {
  CHECK(r_operator(LinComb(Word::of_index(Index{1, 2}))) == LinComb(Word::of_index(Index{2, 1})));
  for (int w = 2; w <= 5; ++w)
    for (int a = 1; a < w; ++a)
      for (const Index& k : compositions(a))
        for (const Index& l : compositions(w - a)) CHECK(kawashima_r_defect(k, l).is_zero());
  // R is an involution.
  for (const Index& k : compositions(4)) {
    LinComb x(Word::of_index(k));
    CHECK(r_operator(r_operator(x)) == x);
  }
}

TEST_CASE("primed grafted chains multiply along the bar product") {
  for (int m = 0; m <= 2; ++m)
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b)
        for (const Index& k : compositions(a))
          for (const Index& l : compositions(b)) {
            INFO("m=" << m << " k=(" << k.str() << ") l=(" << l.str() << ")");
            CHECK(kawashima_bprime_defect(m, k, l).is_zero());
          }
}

TEST_CASE("kawashima sides at the smallest instance") {
  KawashimaSides s = kawashima_sides(1, Index{1}, Index{1});
  CHECK(s.lhs_factors.empty());
  LinComb expect = LinComb(Word::from_string("100")) - LinComb(Word::from_string("110"));
  CHECK(s.rhs == expect);
  for (const auto& [w, c] : s.rhs.terms()) CHECK(w.in_h0());
  KawashimaSides s2 = kawashima_sides(2, Index{1}, Index{1});
  CHECK(s2.lhs_factors.size() == 1);
  CHECK_THROWS_AS(kawashima_sides(0, Index{1}, Index{1}), std::invalid_argument);
}

TEST_CASE("exact-length compositions") {
  CHECK(compositions_exact(6, 3).size() == 10);
  CHECK(compositions_exact(3, 5).empty());
  auto none = compositions_exact(0, 0);
  REQUIRE(none.size() == 1);
  CHECK(none[0].empty());
  for (const Index& c : compositions_exact(5, 2)) CHECK(c.weight() == 5);
}

TEST_CASE("restricted sum formula sides") {
  auto [s, t] = restricted_sum_sides(5, 2, 2);
  CHECK(s == lc({{Index{1, 1, 3}, 1}, {Index{1, 2, 2}, 1}}));
  CHECK(t == lc({{Index{1, 4}, 1}, {Index{2, 3}, 1}}));
  // p = 1 degenerates to the classical sum formula.
  auto [s1, t1] = restricted_sum_sides(5, 1, 2);
  CHECK(s1 == lc({{Index{1, 4}, 1}, {Index{2, 3}, 1}, {Index{3, 2}, 1}}));
  CHECK(t1 == lc({{Index{5}, 1}}));
  CHECK_THROWS_AS(restricted_sum_sides(2, 1, 2), std::invalid_argument);
}

TEST_CASE("hoffman relation shapes and its integral-series source") {
  auto [lhs, rhs] = hoffman_sides(Index{2});
  CHECK(lhs == lc({{Index{3}, 1}}));
  CHECK(rhs == lc({{Index{1, 2}, 1}}));
  for (int w = 2; w <= 6; ++w)
    for (const Index& k : admissible_of_weight(w)) {
      auto [a, b] = hoffman_sides(k);
      LinComb defect = (a - b) + hoffman_via_intser(k);
      INFO("k=(" << k.str() << ")");
      CHECK(defect.is_zero());
    }
  CHECK_THROWS_AS(hoffman_sides(Index{1, 2, 1}), std::invalid_argument);
}

TEST_CASE("duality defects") {
  CHECK(duality_defect(Index{2}).is_zero());
  LinComb d3 = duality_defect(Index{3});
  CHECK(d3 == lc({{Index{3}, 1}, {Index{1, 2}, -1}}));
  CHECK(duality_defect(Index{1, 2, 3}).is_zero() ==
        (Word::of_index(Index{1, 2, 3}).dagger() == Word::of_index(Index{1, 2, 3})));
}
