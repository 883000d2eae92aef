#include "jacquet/cli.hpp"

#include <algorithm>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "jacquet/errors.hpp"
#include "jacquet/render.hpp"
#include "jacquet/transforms.hpp"
#include "jacquet/verify.hpp"

namespace jacquet {

namespace {

// A named symbol, or the induced representation full(c,d) which may reduce.
struct Target {
  std::optional<ClassicalIrred> symbol;
  HalfInt c, d, alpha;

  std::vector<ClassicalIrred> pieces() const {
    if (symbol) return {*symbol};
    std::vector<ClassicalIrred> out;
    for (const auto& p : constituents(c, d, alpha)) out.push_back(p.x);
    return out;
  }
};

Target parse_target(const std::string& s, HalfInt alpha) {
  std::string t;
  for (char ch : s)
    if (ch != ' ') t += ch;
  if (t.rfind("full(", 0) == 0 && t.back() == ')') {
    auto body = t.substr(5, t.size() - 6);
    auto comma = body.find(',');
    if (comma == std::string::npos || body.find(',', comma + 1) != std::string::npos)
      throw BadInput("cannot parse symbol '" + s + "': expected full(c,d)");
    Target out{std::nullopt, parse_halfint(body.substr(0, comma)), parse_halfint(body.substr(comma + 1)), alpha};
    classify(out.c, out.d, alpha);
    std::tie(out.c, out.d) = symmetrize(out.c, out.d);
    return out;
  }
  Target out{parse_symbol(t, alpha), 0, 0, alpha};
  return out;
}

constexpr const char* kHint = "hint: jacquet mu --alpha 1 'plus(0,1)' --format text";

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jacquet modules of segment-type and strongly positive representations", "jacquet"};
  app.require_subcommand(1);

  std::string symbol_text, alpha_text = "0", format_text = "text";
  auto add_common = [&](CLI::App* sub, bool with_symbol) {
    if (with_symbol) sub->add_option("symbol", symbol_text, "symbol, e.g. plus(0,1), lang(-1,1), tau(0,0,+1), sp(1,2)")->required();
    sub->add_option("--alpha", alpha_text, "reducibility exponent (k or m/2)")->required();
    sub->add_option("--format", format_text, "text | json | latex")->check(CLI::IsMember({"text", "json", "latex"}));
  };
  auto* mu = app.add_subcommand("mu", "mu* (full Jacquet module)");
  auto* sgl = app.add_subcommand("sgl", "s_GL (closed form)");
  auto* stop = app.add_subcommand("stop", "s_top (closed form)");
  auto* seqs = app.add_subcommand("seqs", "exponent sequences of the minimal Jacquet module");
  for (auto* s : {mu, sgl, stop, seqs}) add_common(s, true);

  std::vector<int> jordan;
  auto* sp = app.add_subcommand("sp", "strongly positive symbol from Jordan blocks");
  sp->add_option("blocks", jordan, "ascending Jordan blocks k_1 < ... < k_ceil(alpha)");
  add_common(sp, false);

  auto* topds = app.add_subcommand("topds", "s_top from the admissible triple");
  topds->add_option("symbol", symbol_text, "symbol or ds{\"jord\":[...],\"eps_pair\":{...},\"eps_single\":{...}}")->required();
  add_common(topds, false);

  std::string suite = "all", alpha_max = "5/2", case_text;
  int d_offset = 3;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_option("--alpha-max", alpha_max, "largest alpha in the sweep");
  verify->add_option("--d-offset", d_offset, "sweep d <= alpha + offset")->check(CLI::NonNegativeNumber);
  verify->add_option("--case", case_text, "single case alpha,c,d");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--format", format_text, "text | json")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code != 0) {
      err << kHint << "\n";
      return 2;
    }
    return 0;
  }

  try {
    const Format fmt = parse_format(format_text);
    if (*verify) {
      SweepSpec spec = SweepSpec::defaults();
      spec.alphas = SweepSpec::alphas_upto(parse_halfint(alpha_max));
      spec.max_d_offset = d_offset;
      spec.jobs = jobs;
      if (!case_text.empty()) {
        std::vector<HalfInt> v;
        std::size_t start = 0;
        while (true) {
          auto comma = case_text.find(',', start);
          v.push_back(parse_halfint(case_text.substr(start, comma - start)));
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
        if (v.size() != 3) throw BadInput("--case expects alpha,c,d");
        classify(v[1], v[2], v[0]);
        auto [c, d] = symmetrize(v[1], v[2]);
        spec.single = SweepCase{v[0], c, d};
        spec.alphas = {v[0]};
      }
      std::vector<std::string> names = suite_names();
      if (suite != "all") {
        if (std::find(names.begin(), names.end(), suite) == names.end()) throw BadInput("unknown suite '" + suite + "'");
        names = {suite};
      }
      bool ok = true;
      nlohmann::json reports = nlohmann::json::array();
      for (const auto& n : names) {
        Report r = run_suite(n, spec);
        ok = ok && r.pass();
        if (fmt == Format::json) reports.push_back(r.to_json());
        else out << r.to_text();
      }
      if (fmt == Format::json) out << nlohmann::json{{"pass", ok}, {"suites", reports}}.dump() << "\n";
      else out << (ok ? "PASS" : "FAIL") << "\n";
      return ok ? 0 : 1;
    }

    const HalfInt alpha = parse_halfint(alpha_text);
    if (alpha < 0) throw BadInput("alpha must be non-negative");
    if (*sp) {
      out << render(sp_from_jordan(jordan, alpha), fmt);
      return 0;
    }
    if (*topds) {
      const ClassicalIrred x = parse_symbol(symbol_text, alpha);
      out << render(s_top_ds_translated(triple_of(x)), fmt);
      return 0;
    }

    const Target t = parse_target(symbol_text, alpha);
    Engine engine;
    if (*mu) {
      out << render(t.symbol ? engine.mu_star(*t.symbol) : engine.mu_star_induced(t.c, t.d, alpha), fmt);
    } else if (*sgl || *stop) {
      TensorClsSum sum;
      for (const auto& x : t.pieces()) sum += *sgl ? s_gl_closed(x) : s_top_closed(x);
      out << render(sum, fmt);
    } else if (*seqs) {
      SeqMultiset all;
      for (const auto& x : t.pieces())
        for (const auto& [s, m] : engine.exponent_sequences(x)) all[s] += m;
      out << render(all, fmt);
    }
    return 0;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n" << kHint << "\n";
    return 2;
  }
}

}  // namespace jacquet
