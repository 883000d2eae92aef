#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "jacquet/cli.hpp"
#include "jacquet/errors.hpp"
#include "jacquet/render.hpp"
#include "jacquet/transforms.hpp"

using namespace jacquet;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("text rendering") {
  CHECK(text(GLIrred{}) == "1");
  CHECK(text(GLIrred(Segment(0, 1))) == "d[0,1]");
  CHECK(text(GLIrred(std::vector<Segment>{{0, 0}, {1, 1}})) == "L([0,0],[1,1])");
  CHECK(text(ClassicalIrred::sigma(1)) == "sigma");
  CHECK(text(parse_symbol("plus(0,1)", 1)) == "plus(0,1)");
  CHECK(text(parse_symbol("tau(0,0,-1)", 0)) == "tau(0,0,-1)");
  CHECK(text(parse_symbol("sp(1/2,5/2)", HalfInt::from_doubled(3))) == "sp(1/2,5/2)");
  // symbols are stored symmetrized
  CHECK(text(parse_symbol("plus(1,0)", 1)) == "plus(0,1)");
}

TEST_CASE("latex rendering") {
  CHECK(latex(HalfInt::from_doubled(-3)) == "-\\frac{3}{2}");
  CHECK(latex(GLIrred(Segment(0, 0))) == "\\rho");
  Engine e;
  CHECK(render(e.mu_star(parse_symbol("lang(0,1)", 1)), Format::latex) ==
        "1 \\otimes L(\\delta([\\rho,\\nu\\rho]);\\sigma) + \\delta([\\nu^{-1}\\rho,\\rho]) \\otimes \\sigma + "
        "\\rho \\otimes L(\\delta([\\nu\\rho,\\nu\\rho]);\\sigma)\n");
}

TEST_CASE("json round trips") {
  Engine e;
  for (const char* s : {"plus(0,1)", "lang(0,1)", "full(0,0)", "sp(2)", "plus(1,2)"}) {
    CAPTURE(s);
    const auto x = parse_symbol(s, 1);
    CHECK(symbol_from_json(to_json(x)) == x);
    const auto m = e.mu_star(x);
    CHECK(tensor_sum_from_json(to_json(m)) == m);
    CHECK(tensor_sum_from_json(nlohmann::json::parse(render(m, Format::json))) == m);
  }
  const auto t = triple_of(parse_symbol("plus(1,2)", 1));
  CHECK(triple_from_json(to_json(t), 1) == t);
  const auto ds = ClassicalIrred::ds(t);
  CHECK(symbol_from_json(to_json(ds)) == ds);
  const auto g = mstar_segment(Segment(-1, 2));
  CHECK(gl_tensor_sum_from_json(to_json(g)) == g);
  CHECK(halfint_from_json(to_json(HalfInt::from_doubled(-5))) == HalfInt::from_doubled(-5));
}

TEST_CASE("symbol parsing errors") {
  CHECK_THROWS_AS(parse_symbol("bogus(0,1)", 1), BadInput);
  CHECK_THROWS_AS(parse_symbol("plus(0,1", 1), BadInput);
  CHECK_THROWS_AS(parse_symbol("full(0,1)", 1), BadInput);       // reducible
  CHECK_THROWS_AS(parse_symbol("minus(0,1)", 1), BadInput);      // zero
  CHECK_THROWS_AS(parse_symbol("lang(1,1)", 1), BadInput);       // zero
  CHECK_THROWS_AS(parse_symbol("plus(1/2,1/2)", 1), LineMismatch);
  CHECK_THROWS_AS(parse_symbol("plus(0,1/3)", 1), MalformedExponent);
  CHECK_THROWS_AS(parse_symbol("sp(1,2)", 1), BadInput);
  CHECK_THROWS(parse_symbol("ds{\"jord\":[1,3,5]", 1));
  CHECK(parse_symbol("ds{\"jord\":[5],\"eps_pair\":{},\"eps_single\":{}}", 1).kind() == Kind::ds);
}

TEST_CASE("format names") {
  CHECK(parse_format("text") == Format::text);
  CHECK(parse_format("json") == Format::json);
  CHECK(parse_format("latex") == Format::latex);
  CHECK_THROWS(parse_format("xml"));
}

TEST_CASE("cli exit codes and output") {
  auto ok = run({"mu", "--alpha", "1", "plus(0,1)", "--format", "text"});
  CHECK(ok.code == 0);
  CHECK(ok.out ==
        "1 ⊗ plus(0,1)\nL([0,0],[1,1]) ⊗ sigma\nd[0,0] ⊗ plus(-1,1)\n2 d[0,1] ⊗ sigma\nd[1,1] ⊗ full(0,0)\n");
  CHECK(run({"sgl", "--alpha", "1", "lang(-1,1)"}).out == "d[-1,-1] ⊗ sigma\n");
  CHECK(run({"seqs", "--alpha", "1", "full(0,0)"}).out == "2 (0)\n");
  CHECK(run({"sp", "1", "5", "--alpha", "2"}).out == "sp(0,2)\n");
  CHECK(run({"topds", "--alpha", "1", "plus(1,2)"}).out == "d[1,1] ⊗ plus(0,2)\nd[2,2] ⊗ plus(1,1)\n");
  // the induced representation may be reducible
  CHECK(run({"mu", "--alpha", "1", "full(0,1)"}).code == 0);

  auto bad = run({"mu", "--alpha", "1", "bogus(0,1)"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("hint:") != std::string::npos);
  CHECK(run({"mu", "--alpha", "1/3", "plus(0,1)"}).code == 2);
  CHECK(run({"mu", "--alpha", "1", "plus(1/2,1/2)"}).code == 2);
  CHECK(run({"nosuch"}).code == 2);
  CHECK(run({}).code == 2);

  auto v = run({"verify", "--suite", "sum-check", "--alpha-max", "1", "--format", "json"});
  CHECK(v.code == 0);
  auto j = nlohmann::json::parse(v.out);
  CHECK(j.at("pass") == true);
  CHECK(run({"verify", "--suite", "nosuch"}).code == 2);
}
