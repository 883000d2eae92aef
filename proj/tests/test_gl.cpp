#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacquet/errors.hpp"
#include "jacquet/gl_ring.hpp"

using namespace jacquet;

namespace {

GLIrred d(HalfInt a, HalfInt b) { return GLIrred(Segment(a, b)); }
GLIrred L(std::vector<Segment> s) { return GLIrred(std::move(s)); }
const GLIrred one{};

GLTensorSum T(std::initializer_list<std::tuple<std::int64_t, GLIrred, GLIrred>> terms) {
  GLTensorSum out;
  for (const auto& [c, a, b] : terms) out.add({a, b}, c);
  return out;
}

}  // namespace

TEST_CASE("products of two segments") {
  CHECK(normalize_product_pair(Segment(0, 0), Segment(2, 2)) == GLSum(L({{0, 0}, {2, 2}})));
  CHECK(normalize_product_pair(Segment(0, 1), Segment(0, 1)) == GLSum(L({{0, 1}, {0, 1}})));
  GLSum linked_pair = GLSum(L({{0, 1}, {1, 2}})) + GLSum(L({{0, 2}, {1, 1}}));
  CHECK(normalize_product_pair(Segment(0, 1), Segment(1, 2)) == linked_pair);
  CHECK(normalize_product_pair(Segment(1, 2), Segment(0, 1)) == linked_pair);
  CHECK(normalize_product_pair(Segment(), Segment(1, 2)) == GLSum(d(1, 2)));
  CHECK(product(one, d(0, 1)) == GLSum(d(0, 1)));
}

TEST_CASE("m* of a segment") {
  CHECK(mstar_segment(Segment(0, 1)) == T({{1, d(0, 1), one}, {1, d(1, 1), d(0, 0)}, {1, one, d(0, 1)}}));
  CHECK(mstar_segment(Segment()) == T({{1, one, one}}));
  CHECK(mstar_segment(Segment(1, 1)) == T({{1, d(1, 1), one}, {1, one, d(1, 1)}}));
  CHECK(mstar_segment(Segment(-2, 3)).size() == 7);
}

TEST_CASE("m* of Langlands data") {
  const GLIrred lad = L({{1, 1}, {2, 2}});
  CHECK(lad.is_ladder());
  const GLTensorSum expect = T({{1, lad, one}, {1, d(1, 1), d(2, 2)}, {1, one, lad}});
  CHECK(mstar_irred(lad) == expect);
  CHECK(mstar_ladder(lad) == expect);
  CHECK(mstar_linked_inclusion_exclusion(Segment(1, 1), Segment(2, 2)) == expect);
  CHECK(mstar_irred(d(0, 1)) == mstar_segment(Segment(0, 1)));

  const GLTensorSum unlinked = mstar_irred(L({{0, 0}, {2, 2}}));
  CHECK(unlinked.size() == 4);
  CHECK(unlinked.nonnegative());

  for (int a = -2; a <= 1; ++a)
    for (int b = a; b <= 2; ++b)
      for (int e = a + 1; e <= b + 1; ++e)
        for (int f = std::max(e, b); f <= 3; ++f) {
          Segment s1(a, b), s2(e, f);
          if (!linked(s1, s2)) continue;
          GLIrred x = L({s1, s2});
          CAPTURE(s1.str());
          CAPTURE(s2.str());
          CHECK(mstar_irred(x).nonnegative());
          if (x.is_ladder()) CHECK(mstar_ladder(x) == mstar_linked_inclusion_exclusion(s1, s2));
        }
}

TEST_CASE("unsupported shapes are rejected") {
  CHECK_THROWS_AS(mstar_irred(L({{0, 0}, {1, 1}, {2, 2}, {0, 2}})), UnsupportedShape);
  CHECK_THROWS_AS(product(L({{0, 0}, {2, 2}}), L({{4, 4}})), UnsupportedShape);
}

TEST_CASE("first layer keeps cuspidal left factors") {
  const GLTensorSum first = mstar_irred(d(0, 2), MstarLayer::first);
  CHECK(first == T({{1, d(2, 2), d(0, 1)}}));
  for (const auto& [k, c] : mstar_irred(L({{0, 1}, {1, 2}}), MstarLayer::first))
    CHECK(k.first.cuspidal_length() == 1);
}

TEST_CASE("M* closed and composite forms") {
  CHECK(Mstar(Segment()) == T({{1, one, one}}));
  CHECK(Mstar(Segment(0, 0)) == T({{2, d(0, 0), one}, {1, one, d(0, 0)}}));
  const GLTensorSum m01 = T({{2, d(0, 1), one},
                             {1, d(1, 1), d(0, 0)},
                             {1, one, d(0, 1)},
                             {1, L({{0, 0}, {1, 1}}), one},
                             {1, d(0, 0), d(1, 1)},
                             {1, d(-1, 0), one}});
  CHECK(Mstar(Segment(0, 1)) == m01);
  CHECK(sum_equal(Mstar(Segment(0, 1), MstarForm::closed), Mstar(Segment(0, 1), MstarForm::composite)));
  CHECK_FALSE(sum_equal(mstar_segment(Segment(0, 1)), T({{1, one, one}})));
  CHECK(sum_equal(m01, m01));
  for (int t = -4; t <= 4; ++t)
    for (int u = t; u <= 4; ++u) {
      if ((u - t) % 2 != 0) continue;
      Segment s(HalfInt::from_doubled(t), HalfInt::from_doubled(u));
      CAPTURE(s.str());
      CHECK(Mstar(s, MstarForm::closed) == Mstar(s, MstarForm::composite));
      CHECK(Mstar(s, MstarForm::closed_alt) == Mstar(s, MstarForm::composite));
    }
}

TEST_CASE("kappa and coassociativity on a segment") {
  const GLTensorSum x = mstar_segment(Segment(0, 2));
  CHECK(kappa(kappa(x)) == x);
  CHECK(mstar_left(x) == mstar_right(x));
}
