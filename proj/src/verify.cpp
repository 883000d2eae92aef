#include "jacquet/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "jacquet/errors.hpp"
#include "jacquet/render.hpp"
#include "jacquet/transforms.hpp"

namespace jacquet {

std::string SweepCase::key() const { return "alpha=" + alpha.str() + ",c=" + c.str() + ",d=" + d.str(); }

std::vector<HalfInt> SweepSpec::alphas_upto(HalfInt max) {
  std::vector<HalfInt> out;
  for (HalfInt a = 0; a <= max; a += HalfInt::half()) out.push_back(a);
  return out;
}

SweepSpec SweepSpec::defaults() {
  SweepSpec s;
  s.alphas = alphas_upto(HalfInt::from_doubled(5));
  return s;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"sum-check", "comodule", "mstar-equiv", "coassoc",
                                                 "closed-forms", "sp", "topds-cross", "signs"};
  return names;
}

std::vector<SweepCase> sweep_cases(const SweepSpec& spec) {
  if (spec.single) return {*spec.single};
  std::vector<SweepCase> out;
  for (HalfInt alpha : spec.alphas) {
    const HalfInt d0 = alpha - alpha.floor();
    for (HalfInt d = d0; d <= alpha + spec.max_d_offset; d += 1)
      for (HalfInt c = -d; c <= d; c += 1) out.push_back({alpha, c, d});
  }
  return out;
}

bool reducible(const SweepCase& k) {
  const Regime r = classify(k.c, k.d, k.alpha);
  return r != Regime::irreducible && r != Regime::empty;
}

nlohmann::json Report::to_json(bool with_timing) const {
  nlohmann::json j;
  j["suite"] = suite;
  j["pass"] = pass();
  j["cases"] = cases;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : failures) j["failures"].push_back({{"case", f.key}, {"what", f.what}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  j["notes"] = notes;
  if (with_timing) j["seconds"] = seconds;
  return j;
}

std::string Report::to_text(bool with_timing) const {
  std::string s = "suite " + suite + ": " + (pass() ? "PASS" : "FAIL") + " (" + std::to_string(cases) + " cases, " +
                  std::to_string(failures.size()) + " failures)";
  if (with_timing) s += " [" + std::to_string(seconds) + " s]";
  s += "\n";
  for (const auto& n : notes) s += "  note: " + n + "\n";
  for (const auto& f : failures) {
    s += "  FAIL " + f.key + ": " + f.what + "\n";
    if (!f.lhs.empty() || !f.rhs.empty()) s += "    lhs:\n" + f.lhs + "    rhs:\n" + f.rhs;
  }
  return s;
}

namespace {

using Failures = std::vector<Failure>;
struct Item {
  std::string key;
  std::function<void(Engine&, Failures&)> check;
};

void run_items(const std::vector<Item>& items, unsigned jobs, Report& r) {
  std::vector<Failures> out(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    Engine e;  // memo table confined to this thread
    for (std::size_t k; (k = next.fetch_add(1)) < items.size();) {
      try {
        items[k].check(e, out[k]);
      } catch (const std::exception& ex) {
        out[k].push_back({items[k].key, std::string("exception: ") + ex.what(), "", ""});
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  r.cases += items.size();
  for (auto& f : out) r.failures.insert(r.failures.end(), f.begin(), f.end());
}

template <class Sum>
void expect_equal(Failures& f, const std::string& key, const std::string& what, const Sum& lhs, const Sum& rhs) {
  if (lhs == rhs) return;
  f.push_back({key, what, render(lhs, Format::text), render(rhs, Format::text)});
}

void expect(Failures& f, const std::string& key, bool ok, const std::string& what) {
  if (!ok) f.push_back({key, what, "", ""});
}

std::string sym_key(const ClassicalIrred& x) { return "alpha=" + x.alpha().str() + "," + text(x); }

// Every non-zero symbol attached to the sweep (constituents + sigma).
std::vector<ClassicalIrred> sweep_symbols(const SweepSpec& spec) {
  std::vector<ClassicalIrred> out;
  if (!spec.single)
    for (HalfInt a : spec.alphas) out.push_back(ClassicalIrred::sigma(a));
  for (const auto& k : sweep_cases(spec))
    for (const auto& p : constituents(k.c, k.d, k.alpha)) out.push_back(p.x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Segment> grid_segments(int bound) {
  std::vector<Segment> out{Segment{}};
  for (std::int64_t a2 = -2 * bound; a2 <= 2 * bound; ++a2)
    for (std::int64_t b2 = a2; b2 <= 2 * bound; b2 += 2)
      out.emplace_back(HalfInt::from_doubled(a2), HalfInt::from_doubled(b2));
  return out;
}

void sp_data_rec(HalfInt alpha, HalfInt top, HalfInt idx, std::vector<HalfInt>& cur,
                 std::vector<std::vector<HalfInt>>& out) {
  if (idx > alpha) {
    out.push_back(cur);
    return;
  }
  HalfInt lo = idx - 1;
  if (!cur.empty()) lo = std::max(lo, cur.back() + 1);
  for (HalfInt n = lo; n <= top; n += 1) {
    cur.push_back(n);
    sp_data_rec(alpha, top, idx + 1, cur, out);
    cur.pop_back();
  }
}

// Non-sigma strongly positive symbols with n_alpha <= alpha + offset.
std::vector<ClassicalIrred> sp_symbols(const SweepSpec& spec) {
  std::vector<ClassicalIrred> out;
  for (HalfInt alpha : spec.alphas) {
    if (alpha == 0) continue;
    if (spec.single && spec.single->alpha != alpha) continue;
    std::vector<std::vector<HalfInt>> data;
    std::vector<HalfInt> cur;
    sp_data_rec(alpha, alpha + spec.max_d_offset, sp_start(alpha), cur, data);
    for (auto& n : data) {
      if (spec.single && n.back() != spec.single->d) continue;
      auto x = ClassicalIrred::sp(n, alpha);
      if (x.kind() == Kind::sp) out.push_back(x);
    }
  }
  return out;
}

TensorClsSum identified(const TensorClsSum& x) {
  TensorClsSum out;
  for (const auto& [t, c] : x) out.add({t.first, identify_sp(t.second)}, c);
  return out;
}

void check_identity_term(Failures& f, const std::string& key, const ClassicalIrred& x, const TensorClsSum& mu) {
  expect(f, key, mu.coefficient({GLIrred{}, x}) == 1, "1 (x) x must occur exactly once");
  expect(f, key, mu.nonnegative(), "negative coefficient in mu*");
}

// ---- suites -------------------------------------------------------------------

void suite_sum_check(const SweepSpec& spec, Report& r) {
  std::vector<Item> items;
  std::size_t reducible_count = 0;
  for (const auto& k : sweep_cases(spec)) {
    if (!reducible(k)) continue;
    ++reducible_count;
    items.push_back({k.key(), [k](Engine& e, Failures& f) {
                       TensorClsSum lhs;
                       for (const auto& p : constituents(k.c, k.d, k.alpha)) lhs += e.mu_star(p.x);
                       expect_equal(f, k.key(), "sum of mu* over constituents != mu* of induced", lhs,
                                    e.mu_star_induced(k.c, k.d, k.alpha));
                     }});
  }
  run_items(items, spec.jobs, r);
  r.notes.push_back(std::to_string(reducible_count) + " reducible cases");
}

void suite_comodule(const SweepSpec& spec, Report& r) {
  std::vector<Item> items;
  for (const auto& x : sweep_symbols(spec))
    items.push_back({sym_key(x), [x](Engine& e, Failures& f) {
                       const TensorClsSum mu = e.mu_star(x);
                       expect_equal(f, sym_key(x), "(m* (x) id) mu* != (id (x) mu*) mu*", comodule_left(mu),
                                    comodule_right(e, mu));
                     }});
  run_items(items, spec.jobs, r);
}

void suite_mstar_equiv(const SweepSpec& spec, Report& r) {
  std::vector<Item> items;
  std::vector<Segment> segs = grid_segments(spec.segment_bound);
  if (spec.single) segs = {Segment{-spec.single->c, spec.single->d}};
  for (const auto& s : segs)
    items.push_back({"segment=" + s.str(), [s](Engine&, Failures& f) {
                       const std::string key = "segment=" + s.str();
                       const GLTensorSum closed = Mstar(s, MstarForm::closed);
                       expect_equal(f, key, "closed M* != composite M*", closed, Mstar(s, MstarForm::composite));
                       expect_equal(f, key, "closed M* != second closed M*", closed, Mstar(s, MstarForm::closed_alt));
                       expect(f, key, closed.nonnegative(), "negative coefficient in M*");
                     }});
  run_items(items, spec.jobs, r);
}

void check_coassoc(Failures& f, const std::string& key, const GLIrred& g) {
  const GLTensorSum m = mstar_irred(g);
  if (mstar_left(m) != mstar_right(m)) f.push_back({key, "(m* (x) id) m* != (id (x) m*) m*", "", ""});
  expect(f, key, m.coefficient({GLIrred{}, g}) == 1 && m.coefficient({g, GLIrred{}}) == 1, "counit terms");
  std::size_t unit_left = 0, unit_right = 0;
  for (const auto& [p, c] : m) {
    unit_left += p.first.is_unit();
    unit_right += p.second.is_unit();
  }
  expect(f, key, unit_left == 1 && unit_right == 1, "counit: more than one term with a unit factor");
  expect(f, key, m.nonnegative(), "negative coefficient in m*");
}

void suite_coassoc(const SweepSpec& spec, Report& r) {
  std::vector<Item> items;
  std::vector<Segment> segs = grid_segments(spec.segment_bound);
  if (spec.single) segs = {Segment{-spec.single->c, spec.single->d}};
  for (const auto& s : segs)
    items.push_back({"segment=" + s.str(), [s](Engine&, Failures& f) { check_coassoc(f, "segment=" + s.str(), GLIrred(s)); }});
  // two-segment data on a smaller grid; linked pairs also against inclusion-exclusion
  if (!spec.single) {
    const int small = std::min(spec.segment_bound, 2);
    auto pairs = grid_segments(small);
    for (std::size_t a = 1; a < pairs.size(); ++a)
      for (std::size_t b = a; b < pairs.size(); ++b) {
        const Segment s1 = pairs[a], s2 = pairs[b];
        if (!same_line(s1.lo(), s2.lo())) continue;
        const GLIrred g({s1, s2});
        const std::string key = "datum=" + text(g);
        items.push_back({key, [=](Engine&, Failures& f) {
                           check_coassoc(f, key, g);
                           if (linked(s1, s2))
                             expect_equal(f, key, "ladder formula != inclusion-exclusion", mstar_irred(g),
                                          mstar_linked_inclusion_exclusion(s1, s2));
                         }});
      }
  }
  // left factors produced by mu* over the sweep
  for (const auto& x : sweep_symbols(spec))
    items.push_back({sym_key(x), [x](Engine& e, Failures& f) {
                       for (const auto& [t, c] : e.mu_star(x)) check_coassoc(f, sym_key(x) + "/" + text(t.first), t.first);
                     }});
  run_items(items, spec.jobs, r);
}

void suite_closed_forms(const SweepSpec& spec, Report& r) {
  std::vector<Item> items;
  for (const auto& x : sweep_symbols(spec))
    items.push_back({sym_key(x), [x](Engine& e, Failures& f) {
                       const TensorClsSum mu = e.mu_star(x);
                       const std::string key = sym_key(x);
                       expect_equal(f, key, "s_GL slice of mu* != closed form", s_gl_slice(mu), s_gl_closed(x));
                       expect_equal(f, key, "s_top slice of mu* != closed form", s_top_slice(mu), s_top_closed(x));
                       check_identity_term(f, key, x, mu);
                     }});
  run_items(items, spec.jobs, r);
}

void suite_sp(const SweepSpec& spec, Report& r) {
  std::vector<Item> items;
  for (const auto& x : sp_symbols(spec))
    items.push_back({sym_key(x), [x](Engine& e, Failures& f) {
                       const std::string key = sym_key(x);
                       const HalfInt alpha = x.alpha();
                       const TensorClsSum mu = e.mu_star(x);
                       const GLIrred lad = sp_ladder(x.sp_params(), alpha);
                       TensorClsSum expected;
                       expected.add({lad, ClassicalIrred::sigma(alpha)});
                       expect_equal(f, key, "s_GL closed form != Lad (x) sigma", s_gl_closed(x), expected);
                       expect_equal(f, key, "s_GL slice of mu* != Lad (x) sigma", s_gl_slice(mu), expected);
                       expect_equal(f, key, "s_top slice of mu* != closed form", s_top_slice(mu), s_top_closed(x));
                       check_identity_term(f, key, x, mu);
                       // s_GL(Lad x| sigma) = sum over m*(Lad) = sum x (x) y of y~ x x; supports only
                       std::size_t positive = 0;
                       bool right_one = false;
                       for (const auto& [p, c] : mstar_ladder(lad)) {
                         auto supp = p.second.dual().support();
                         auto sx = p.first.support();
                         supp.insert(supp.end(), sx.begin(), sx.end());
                         if (std::all_of(supp.begin(), supp.end(), [](HalfInt h) { return h > 0; })) {
                           ++positive;
                           right_one = p.first == lad && p.second.is_unit() && c == 1;
                         }
                       }
                       expect(f, key, positive == 1 && right_one, "Lad (x) sigma is not the unique all-positive term");
                       if (identify_sp(x).kind() == Kind::plus) {
                         const auto plus = identify_sp(x);
                         expect_equal(f, key, "mu*(SP) != mu*(plus(-alpha,n)) after identification", identified(mu),
                                      e.mu_star(plus));
                       }
                       expect(f, key, sp_from_jordan(jordan_from_sp(x), alpha) == x, "Jordan round trip");
                       if (comodule_left(mu) != comodule_right(e, mu))
                         f.push_back({key, "comodule law fails for SP", "", ""});
                     }});
  run_items(items, spec.jobs, r);
}

// Does any eligibility decision for t read a sign attached to a block of sigma?
bool reads_cuspidal_sign(const AdmissibleTriple& t) {
  const auto s = cuspidal_triple(t.alpha).distinct();
  auto in_sigma = [&](int a) { return std::find(s.begin(), s.end(), a) != s.end(); };
  for (int a : t.distinct()) {
    if (a == 2 && in_sigma(2)) return true;
    if (a >= 3 && t.contains(a - 2) && (in_sigma(a) || in_sigma(a - 2))) return true;
  }
  return false;
}

void suite_topds(const SweepSpec& spec, Report& r) {
  std::vector<ClassicalIrred> primary, extra;
  for (const auto& k : sweep_cases(spec)) {
    const Regime reg = classify(k.c, k.d, k.alpha);
    auto [c, d] = symmetrize(k.c, k.d);
    if ((reg == Regime::B || reg == Regime::C) && c < d)
      for (const auto& p : constituents(c, d, k.alpha))
        if (p.x.kind() != Kind::lang) primary.push_back(p.x);
    if (reg == Regime::A && c == -k.alpha) extra.push_back(ClassicalIrred::raw(Kind::plus, c, d, k.alpha));
  }
  for (const auto& x : sp_symbols(spec)) extra.push_back(identify_sp(x));
  std::sort(extra.begin(), extra.end());
  extra.erase(std::unique(extra.begin(), extra.end()), extra.end());

  std::atomic<std::size_t> dependent{0};
  auto make = [&](const ClassicalIrred& x) {
    return Item{sym_key(x), [x, &dependent](Engine&, Failures& f) {
                  const AdmissibleTriple t = triple_of(x);
                  if (reads_cuspidal_sign(t)) ++dependent;
                  expect_equal(f, sym_key(x), "top Jacquet module from the triple != closed form",
                               identified(s_top_ds_translated(t)), identified(s_top_closed(x)));
                  for (const auto& [term, c] : s_top_ds_translated(t))
                    expect(f, sym_key(x), term.second.kind() != Kind::ds, "lowered triple has no symbol: " + text(term.second));
                }};
  };
  std::vector<Item> items;
  for (const auto& x : primary) items.push_back(make(x));
  for (const auto& x : extra) items.push_back(make(x));
  if (!spec.single)
    for (HalfInt a : spec.alphas)
      items.push_back({"alpha=" + a.str() + ",sigma", [a](Engine&, Failures& f) {
                         expect(f, "alpha=" + a.str() + ",sigma", s_top_ds(cuspidal_triple(a)).empty(),
                                "cuspidal triple has a non-empty top Jacquet module");
                       }});
  run_items(items, spec.jobs, r);
  r.notes.push_back(std::to_string(primary.size()) + " segment-type discrete series (regimes B, C with c<d)");
  r.notes.push_back(std::to_string(extra.size()) + " additional strongly positive symbols");
  r.notes.push_back(std::to_string(dependent.load()) +
                    " cases read a sign fixed by the cuspidal convention (eps = -1 on consecutive blocks of sigma)");
}

void suite_signs(const SweepSpec& spec, Report& r) {
  std::vector<Item> items;
  std::size_t mult_cases = 0, symmetric_cases = 0;
  for (const auto& k : sweep_cases(spec)) {
    if (k.alpha == 0) continue;
    auto [c, d] = symmetrize(k.c, k.d);
    const Regime reg = classify(c, d, k.alpha);
    const HalfInt alpha = k.alpha;
    if (reg == Regime::A || reg == Regime::B) {
      items.push_back({k.key(), [=](Engine& e, Failures& f) {
                         auto nonneg = [](const ExponentSeq& s) {
                           return std::all_of(s.begin(), s.end(), [](HalfInt h) { return h >= 0; });
                         };
                         const auto plus = *resolve_symbol(Label::plus, c, d, alpha);
                         bool found = false;
                         for (const auto& [s, m] : e.exponent_sequences(plus)) found = found || nonneg(s);
                         expect(f, k.key(), found, "plus has no all-nonnegative exponent sequence");
                         if (auto minus = resolve_symbol(Label::minus, c, d, alpha)) {
                           for (const auto& [s, m] : e.exponent_sequences(*minus))
                             if (nonneg(s)) {
                               expect(f, k.key(), false, "minus has an all-nonnegative exponent sequence");
                               break;
                             }
                         }
                       }});
    }
    if (reg == Regime::A && -alpha < -c && -c <= 0 && alpha < d) {
      ++mult_cases;
      items.push_back({k.key() + "/multiplicity", [=](Engine& e, Failures& f) {
                         const auto plus = *resolve_symbol(Label::plus, c, d, alpha);
                         const TensorTerm t{GLIrred(Segment{-c, d}), ClassicalIrred::sigma(alpha)};
                         expect(f, k.key(), s_gl_closed(plus).coefficient(t) == 2 && e.mu_star(plus).coefficient(t) == 2,
                                "delta([-c,d]) (x) sigma does not have multiplicity two");
                       }});
    }
    if (c == d && d < alpha) {
      ++symmetric_cases;
      items.push_back({k.key() + "/symmetric", [=](Engine& e, Failures& f) {
                         TensorClsSum as_plus, as_lang;
                         for (const auto& t : structural_terms(c, d)) {
                           if (auto x = resolve_symbol(Label::plus, -(t.i + 1), t.j, alpha))
                             for (const auto& [g, m] : t.left) as_plus.add({g, *x}, m);
                           if (auto x = resolve_symbol(Label::lang, -(t.i + 1), t.j, alpha))
                             for (const auto& [g, m] : t.left) as_lang.add({g, *x}, m);
                         }
                         expect_equal(f, k.key(), "all-plus routing != mu* of the induced", as_plus,
                                      e.mu_star_induced(c, d, alpha));
                         expect(f, k.key(), as_lang.empty(), "Langlands routing is not zero");
                       }});
    }
  }
  run_items(items, spec.jobs, r);
  r.notes.push_back(std::to_string(mult_cases) + " multiplicity-two cases");
  r.notes.push_back(std::to_string(symmetric_cases) + " symmetric irreducible cases");
}

}  // namespace

Report run_suite(const std::string& name, const SweepSpec& spec) {
  Report r;
  r.suite = name;
  const auto t0 = std::chrono::steady_clock::now();
  if (name == "sum-check") suite_sum_check(spec, r);
  else if (name == "comodule") suite_comodule(spec, r);
  else if (name == "mstar-equiv") suite_mstar_equiv(spec, r);
  else if (name == "coassoc") suite_coassoc(spec, r);
  else if (name == "closed-forms") suite_closed_forms(spec, r);
  else if (name == "sp") suite_sp(spec, r);
  else if (name == "topds-cross") suite_topds(spec, r);
  else if (name == "signs") suite_signs(spec, r);
  else throw BadInput("unknown suite '" + name + "'");
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace jacquet
