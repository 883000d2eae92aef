#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacquet/errors.hpp"
#include "jacquet/render.hpp"
#include "jacquet/transforms.hpp"

using namespace jacquet;

namespace {

std::string show(const TensorClsSum& x) { return render(x, Format::text); }
ClassicalIrred sym(const char* s, HalfInt alpha) { return parse_symbol(s, alpha); }

}  // namespace

TEST_CASE("mu* of induced representations") {
  Engine e;
  CHECK(show(e.mu_star_induced(0, 1, 1)) ==
        "1 ⊗ lang(0,1)\n1 ⊗ plus(0,1)\nL([0,0],[1,1]) ⊗ sigma\nd[-1,0] ⊗ sigma\n"
        "d[0,0] ⊗ lang(-1,1)\nd[0,0] ⊗ plus(-1,1)\n2 d[0,1] ⊗ sigma\nd[1,1] ⊗ full(0,0)\n");
  CHECK(show(e.mu_star_induced(-1, 1, 1)) ==
        "1 ⊗ lang(-1,1)\n1 ⊗ plus(-1,1)\nd[-1,-1] ⊗ sigma\nd[1,1] ⊗ sigma\n");
  CHECK(show(e.mu_star(ClassicalIrred::sigma(1))) == "1 ⊗ sigma\n");
}

TEST_CASE("mu* by term assignment") {
  Engine e;
  CHECK(show(e.mu_star(sym("plus(0,1)", 1))) ==
        "1 ⊗ plus(0,1)\nL([0,0],[1,1]) ⊗ sigma\nd[0,0] ⊗ plus(-1,1)\n2 d[0,1] ⊗ sigma\nd[1,1] ⊗ full(0,0)\n");
  CHECK(show(e.mu_star(sym("lang(0,1)", 1))) == "1 ⊗ lang(0,1)\nd[-1,0] ⊗ sigma\nd[0,0] ⊗ lang(-1,1)\n");
  CHECK(show(e.mu_star(sym("sp(2)", 1))) == "1 ⊗ sp(2)\nd[1,2] ⊗ sigma\nd[2,2] ⊗ sp(1)\n");
  CHECK(show(e.mu_star(sym("tau(0,0,+1)", 0))) == "1 ⊗ tau(0,0,+1)\nd[0,0] ⊗ sigma\n");
  CHECK(show(e.mu_star(sym("tau(0,0,-1)", 0))) == "1 ⊗ tau(0,0,-1)\nd[0,0] ⊗ sigma\n");

  // constituents add up to the induced representation
  for (HalfInt alpha : {HalfInt(0), HalfInt::half(), HalfInt(1), HalfInt(2)})
    for (std::int64_t tc = -4; tc <= 6; ++tc) {
      HalfInt c = HalfInt::from_doubled(tc);
      for (HalfInt d = alpha; d <= alpha + 2; d += 1) {
        if (!same_line(c, d) || d < c || d < -c) continue;
        TensorClsSum parts;
        for (const auto& k : constituents(c, d, alpha)) parts += e.mu_star(k.x);
        CAPTURE(alpha.str());
        CAPTURE(c.str());
        CAPTURE(d.str());
        CHECK(parts == e.mu_star_induced(c, d, alpha));
      }
    }
}

TEST_CASE("closed forms") {
  CHECK(show(s_gl_closed(sym("plus(-1,1)", 1))) == "d[1,1] ⊗ sigma\n");
  CHECK(show(s_gl_closed(sym("lang(-1,1)", 1))) == "d[-1,-1] ⊗ sigma\n");
  CHECK(show(s_gl_closed(sym("minus(1,2)", 1))) == "d[-1,2] ⊗ sigma\n");
  CHECK(show(s_top_closed(sym("plus(-1,1)", 1))) == "d[1,1] ⊗ sigma\n");
  CHECK(show(s_top_closed(sym("tau(0,0,+1)", 0))) == "d[0,0] ⊗ sigma\n");
  CHECK(show(s_top_closed(sym("plus(1,1)", 1))) == "d[1,1] ⊗ lang(0,1)\n2 d[1,1] ⊗ plus(0,1)\n");

  Engine e;
  for (const char* s : {"plus(0,1)", "lang(0,1)", "plus(1,2)", "minus(1,2)", "lang(1,2)", "plus(1,1)"}) {
    CAPTURE(s);
    auto x = sym(s, 1);
    CHECK(s_gl_closed(x) == s_gl_slice(e.mu_star(x)));
    CHECK(s_top_closed(x) == s_top_slice(e.mu_star(x)));
  }
}

TEST_CASE("exponent sequences") {
  Engine e;
  CHECK(render(e.exponent_sequences(sym("plus(-1,1)", 1)), Format::text) == "(1)\n");
  CHECK(render(e.exponent_sequences(sym("full(0,0)", 1)), Format::text) == "2 (0)\n");
  CHECK(render(e.exponent_sequences(sym("lang(-1,1)", 1)), Format::text) == "(-1)\n");
  const auto seqs = e.exponent_sequences(sym("plus(1,2)", 1));
  std::int64_t total = 0;
  for (const auto& [s, c] : seqs) {
    CHECK(s.size() == 4);
    total += c;
  }
  CHECK(total > 0);
}

TEST_CASE("s_top of discrete series") {
  Engine e;
  const auto t = triple_of(sym("plus(1,2)", 1));
  CHECK(t.jord == std::vector<int>{1, 3, 5});
  CHECK(show(s_top_ds_translated(t)) == "d[1,1] ⊗ plus(0,2)\nd[2,2] ⊗ plus(1,1)\n");
  CHECK(s_top_ds_translated(t) == s_top_closed(sym("plus(1,2)", 1)));
  CHECK(s_top_ds(t).size() == 2);

  CHECK(s_top_ds(cuspidal_triple(1)).empty());
  CHECK(s_top_ds(cuspidal_triple(2)).empty());

  AdmissibleTriple gap{1, {5}, {}, {}};
  const auto g = s_top_ds(gap);
  REQUIRE(g.size() == 1);
  const auto& [term, coeff] = *g.begin();
  CHECK(coeff == 1);
  CHECK(term.first == GLIrred(Segment(2, 2)));
  CHECK(term.second.kind() == Kind::ds);
  CHECK(term.second.triple().jord == std::vector<int>{3});
}

TEST_CASE("memoization does not change results") {
  Engine memo(true), plain(false);
  for (const char* s : {"plus(0,1)", "lang(0,1)", "plus(1,2)", "minus(1,2)", "lang(1,3)", "sp(3)", "full(-2,3)"}) {
    CAPTURE(s);
    CHECK(memo.mu_star(sym(s, 1)) == plain.mu_star(sym(s, 1)));
    CHECK(memo.mu_star(sym(s, 1)) == plain.mu_star(sym(s, 1)));
  }
  CHECK(memo.exponent_sequences(sym("plus(1,2)", 1)) == plain.exponent_sequences(sym("plus(1,2)", 1)));
}

TEST_CASE("comodule identity on an example") {
  Engine e;
  const auto m = e.mu_star(sym("plus(1,2)", 1));
  CHECK(comodule_left(m) == comodule_right(e, m));
}
