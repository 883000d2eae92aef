#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacquet/classical.hpp"
#include "jacquet/errors.hpp"

using namespace jacquet;

namespace {
const HalfInt h = HalfInt::half();
}

TEST_CASE("symmetrize") {
  // [-2,1] and its mirror [-1,2] are the same class
  CHECK(symmetrize(2, 1) == std::pair<HalfInt, HalfInt>(1, 2));
  CHECK(symmetrize(1, 2) == std::pair<HalfInt, HalfInt>(1, 2));
  CHECK(symmetrize(2, -1) == std::pair<HalfInt, HalfInt>(-1, 2));
  CHECK(symmetrize(1, -2) == std::pair<HalfInt, HalfInt>(1, -2));  // empty, untouched
  CHECK(symmetrize(0, 0) == std::pair<HalfInt, HalfInt>(0, 0));
  CHECK(symmetrize(-1, 1) == std::pair<HalfInt, HalfInt>(-1, 1));
  for (int c = -3; c <= 3; ++c)
    for (int d = -3; d <= 3; ++d) {
      auto [c1, d1] = symmetrize(c, d);
      CHECK(symmetrize(c1, d1) == std::pair(c1, d1));
    }
}

TEST_CASE("regimes") {
  CHECK(classify(0, 0, 1) == Regime::irreducible);
  CHECK(classify(0, 1, 1) == Regime::A);
  CHECK(classify(1, 1, 1) == Regime::B);
  CHECK(classify(0, 0, 0) == Regime::C);
  CHECK(classify(-2, 1, 1) == Regime::empty);
  CHECK(classify(-h, HalfInt::from_doubled(3), h) == Regime::A);
  CHECK_THROWS_AS(classify(h, h, 1), LineMismatch);
  CHECK_THROWS_AS(classify(0, h, h), BadInput);
}

TEST_CASE("resolve symbols") {
  auto full00 = resolve_symbol(Label::plus, 0, 0, 1);
  REQUIRE(full00);
  CHECK(full00->kind() == Kind::full);
  CHECK_FALSE(resolve_symbol(Label::minus, 0, 1, 1));
  CHECK_FALSE(resolve_symbol(Label::lang, 1, 1, 1));
  CHECK(resolve_symbol(Label::lang, 0, 1, 1)->kind() == Kind::lang);
  CHECK(resolve_symbol(Label::plus, 0, 1, 1)->kind() == Kind::plus);
  CHECK(resolve_symbol(Label::minus, 1, 2, 1)->kind() == Kind::minus);
  CHECK(resolve_symbol(Label::tau_minus, 0, 0, 0)->sign() == -1);
  CHECK_FALSE(resolve_symbol(Label::plus, 0, 0, 0));
  // irreducible, away from the reducibility point
  CHECK(resolve_symbol(Label::lang, -2, 3, 1)->kind() == Kind::full);
  CHECK_FALSE(resolve_symbol(Label::plus, -2, 3, 1));
  CHECK_THROWS_AS(resolve_symbol(Label::plus, h, h, 1), LineMismatch);
}

TEST_CASE("constituents") {
  CHECK(constituents(0, 0, 1).size() == 1);
  CHECK(constituents(0, 1, 1).size() == 2);
  CHECK(constituents(1, 1, 1).size() == 2);  // symmetric: lang vanishes
  CHECK(constituents(1, 2, 1).size() == 3);
  CHECK(constituents(0, 1, 0).size() == 3);
  CHECK(constituents(0, 0, 0).size() == 2);
  auto empty = constituents(-2, 1, 1);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].x == ClassicalIrred::sigma(1));
  CHECK(labels_for(0).size() == 3);
  CHECK(labels_for(1).size() == 3);
}

TEST_CASE("lower_block") {
  AdmissibleTriple t{1, {3, 5}, {{{3, 5}, 1}}, {}};
  auto low = lower_block(t, 5);
  CHECK(low.jord == std::vector<int>{3, 3});
  CHECK_FALSE(low.multiplicity_free());

  AdmissibleTriple two{h, {2}, {}, {{2, 1}}};
  CHECK(lower_block(two, 2).jord.empty());

  AdmissibleTriple gap{1, {5}, {}, {}};
  CHECK(lower_block(gap, 5).jord == std::vector<int>{3});

  CHECK_FALSE(block_eligible(gap, 3));
  CHECK_THROWS_AS(lower_block(gap, 3), IneligibleBlock);
}

TEST_CASE("cuspidal triples") {
  CHECK(cuspidal_triple(0).jord.empty());
  CHECK(cuspidal_triple(1).jord == std::vector<int>{1});
  CHECK(cuspidal_triple(2).jord == std::vector<int>{1, 3});
  CHECK(cuspidal_triple(2).eps_pair.at({1, 3}) == -1);
  CHECK(cuspidal_triple(HalfInt::from_doubled(3)).jord == std::vector<int>{2});
}

TEST_CASE("strongly positive data from Jordan blocks") {
  CHECK(sp_from_jordan({3}, 1) == ClassicalIrred::sp({1}, 1));
  CHECK(sp_from_jordan({2}, h) == ClassicalIrred::sp({h}, h));
  CHECK(sp_from_jordan({1, 5}, 2) == ClassicalIrred::sp({0, 2}, 2));
  CHECK(sp_from_jordan({1}, 1) == ClassicalIrred::sigma(1));
  CHECK_THROWS_AS(sp_from_jordan({2}, 1), BadInput);
  CHECK_THROWS_AS(sp_from_jordan({3}, h), BadInput);
  CHECK_THROWS_AS(sp_from_jordan({3, 5}, 1), BadInput);
  CHECK_THROWS_AS(sp_from_jordan({5, 3}, 2), BadInput);
  CHECK(jordan_from_sp(ClassicalIrred::sp({0, 2}, 2)) == std::vector<int>{1, 5});
  CHECK(identify_sp(ClassicalIrred::sp({2}, 1)) == ClassicalIrred::raw(Kind::plus, -1, 2, 1));
}

TEST_CASE("triples of segment symbols round-trip") {
  for (HalfInt alpha : {HalfInt(0), h, HalfInt(1), HalfInt::from_doubled(3), HalfInt(2)})
    for (std::int64_t tc = -4; tc <= 6; ++tc)
      for (std::int64_t td = 0; td <= 8; ++td) {
        HalfInt c = HalfInt::from_doubled(tc), d = HalfInt::from_doubled(td);
        if (!same_line(d, alpha) || !same_line(c, d) || d < c || d < -c) continue;
        for (const auto& [label, x] : constituents(c, d, alpha)) {
          if (x.kind() == Kind::lang || x.kind() == Kind::full || x.kind() == Kind::sigma) continue;
          // positive segments not starting at alpha are not discrete series
          if (c < 0 && c != -alpha) continue;
          // translated: ladders, the doubled tempered block, regimes B and C
          if (classify(c, d, alpha) == Regime::A && c != -alpha && c != alpha - 1) continue;
          CAPTURE(alpha.str());
          CAPTURE(c.str());
          CAPTURE(d.str());
          auto back = symbol_of(triple_of(x));
          REQUIRE(back);
          CHECK(*back == x);
        }
      }
  CHECK_THROWS_AS(triple_of(ClassicalIrred::raw(Kind::lang, 0, 1, 1)), BadInput);
}
