#include "jacquet/render.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "jacquet/errors.hpp"

namespace jacquet {

using nlohmann::json;

Format parse_format(std::string_view s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "latex") return Format::latex;
  throw BadInput("unknown format '" + std::string(s) + "'");
}

// ---- text --------------------------------------------------------------------

std::string text(const GLIrred& g) {
  if (g.is_unit()) return "1";
  if (g.size() == 1) return "d" + g.segments()[0].str();
  std::string s = "L(";
  for (std::size_t k = 0; k < g.size(); ++k) s += (k ? "," : "") + g.segments()[k].str();
  return s + ")";
}

namespace {

std::string cd(const ClassicalIrred& x) { return "(" + x.c().str() + "," + x.d().str(); }

std::string triple_compact(const AdmissibleTriple& t) {
  json j = to_json(t);
  return j.dump();
}

}  // namespace

std::string text(const ClassicalIrred& x) {
  switch (x.kind()) {
    case Kind::sigma: return "sigma";
    case Kind::full: return "full" + cd(x) + ")";
    case Kind::plus: return "plus" + cd(x) + ")";
    case Kind::minus: return "minus" + cd(x) + ")";
    case Kind::tau: return "tau" + cd(x) + (x.sign() > 0 ? ",+1)" : ",-1)");
    case Kind::lang: return "lang" + cd(x) + ")";
    case Kind::sp: {
      std::string s = "sp(";
      const auto& n = x.sp_params();
      for (std::size_t k = 0; k < n.size(); ++k) s += (k ? "," : "") + n[k].str();
      return s + ")";
    }
    case Kind::ds: return "ds" + triple_compact(x.triple());
  }
  return "?";
}

// ---- latex -------------------------------------------------------------------

std::string latex(HalfInt h) {
  if (h.is_integer()) return h.str();
  const auto m = h.doubled();
  return std::string(m < 0 ? "-" : "") + "\\frac{" + std::to_string(m < 0 ? -m : m) + "}{2}";
}

namespace {

std::string nu(HalfInt e) {
  if (e == 0) return "\\rho";
  if (e == 1) return "\\nu\\rho";
  return "\\nu^{" + latex(e) + "}\\rho";
}

std::string seg_latex(const Segment& s) {
  if (s.lo() == s.hi()) return nu(s.lo());
  return "\\delta([" + nu(s.lo()) + "," + nu(s.hi()) + "])";
}

std::string bracket(const ClassicalIrred& x) { return "[" + nu(-x.c()) + "," + nu(x.d()) + "]"; }

}  // namespace

std::string latex(const GLIrred& g) {
  if (g.is_unit()) return "1";
  if (g.size() == 1) return seg_latex(g.segments()[0]);
  std::string s = "L(";
  for (std::size_t k = 0; k < g.size(); ++k) s += (k ? "," : "") + seg_latex(g.segments()[k]);
  return s + ")";
}

std::string latex(const ClassicalIrred& x) {
  switch (x.kind()) {
    case Kind::sigma: return "\\sigma";
    case Kind::full:
      if (x.c() == -x.d()) return nu(x.d()) + "\\rtimes\\sigma";
      return "\\delta(" + bracket(x) + ")\\rtimes\\sigma";
    case Kind::plus: return "\\delta(" + bracket(x) + "_{+};\\sigma)";
    case Kind::minus: return "\\delta(" + bracket(x) + "_{-};\\sigma)";
    case Kind::tau: return "\\delta(" + bracket(x) + "_{\\tau_{" + (x.sign() > 0 ? "1" : "-1") + "}};\\sigma)";
    case Kind::lang: return "L(\\delta(" + bracket(x) + ");\\sigma)";
    case Kind::sp: {
      // DS(n_alpha, ..., n_eps), top parameter first
      std::string s = "DS_{\\rho;\\sigma}(";
      const auto& n = x.sp_params();
      for (std::size_t k = n.size(); k-- > 0;) s += latex(n[k]) + (k ? "," : "");
      return s + ")";
    }
    case Kind::ds: {
      std::string s = "\\pi_{\\mathrm{Jord}=\\{";
      const auto& j = x.triple().jord;
      for (std::size_t k = 0; k < j.size(); ++k) s += (k ? "," : "") + std::to_string(j[k]);
      return s + "\\}}";
    }
  }
  return "?";
}

// ---- json --------------------------------------------------------------------

json to_json(HalfInt h) { return h.str(); }

json to_json(const Segment& s) {
  if (s.empty()) return json::array();
  return json::array({s.lo().str(), s.hi().str()});
}

json to_json(const GLIrred& g) {
  json a = json::array();
  for (const auto& s : g.segments()) a.push_back(to_json(s));
  return a;
}

json to_json(const AdmissibleTriple& t) {
  json j;
  j["jord"] = t.jord;
  j["eps_pair"] = json::object();
  for (const auto& [k, v] : t.eps_pair) j["eps_pair"][std::to_string(k.first) + "," + std::to_string(k.second)] = v;
  j["eps_single"] = json::object();
  for (const auto& [k, v] : t.eps_single) j["eps_single"][std::to_string(k)] = v;
  return j;
}

namespace {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::sigma: return "sigma";
    case Kind::full: return "full";
    case Kind::plus: return "plus";
    case Kind::minus: return "minus";
    case Kind::tau: return "tau";
    case Kind::lang: return "lang";
    case Kind::sp: return "sp";
    case Kind::ds: return "ds";
  }
  return "?";
}

}  // namespace

json to_json(const ClassicalIrred& x) {
  json j;
  j["kind"] = kind_name(x.kind());
  j["alpha"] = to_json(x.alpha());
  switch (x.kind()) {
    case Kind::sigma: break;
    case Kind::tau: j["sign"] = x.sign(); [[fallthrough]];
    case Kind::full:
    case Kind::plus:
    case Kind::minus:
    case Kind::lang:
      j["c"] = to_json(x.c());
      j["d"] = to_json(x.d());
      break;
    case Kind::sp: {
      j["n"] = json::array();
      for (HalfInt h : x.sp_params()) j["n"].push_back(to_json(h));
      break;
    }
    case Kind::ds: j["triple"] = to_json(x.triple()); break;
  }
  return j;
}

namespace {

template <class Sum, class KeyText, class Emit>
std::vector<std::pair<std::string, json>> sorted_terms(const Sum& x, KeyText key_text, Emit emit) {
  std::vector<std::pair<std::string, json>> rows;
  for (const auto& [k, c] : x) rows.emplace_back(key_text(k), emit(k, c));
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return rows;
}

std::string tensor_key(const TensorTerm& t) { return text(t.first) + " ⊗ " + text(t.second); }
std::string gl_key(const GLPair& p) { return text(p.first) + " ⊗ " + text(p.second); }

}  // namespace

json to_json(const TensorClsSum& x) {
  json a = json::array();
  for (auto& [k, row] : sorted_terms(x, tensor_key, [](const TensorTerm& t, std::int64_t c) {
         return json{{"coeff", c}, {"gl", to_json(t.first)}, {"cls", to_json(t.second)}};
       }))
    a.push_back(std::move(row));
  return a;
}

json to_json(const GLTensorSum& x) {
  json a = json::array();
  for (auto& [k, row] : sorted_terms(x, gl_key, [](const GLPair& p, std::int64_t c) {
         return json{{"coeff", c}, {"left", to_json(p.first)}, {"right", to_json(p.second)}};
       }))
    a.push_back(std::move(row));
  return a;
}

json to_json(const SeqMultiset& x) {
  json a = json::array();
  for (const auto& [seq, c] : x) {
    json s = json::array();
    for (HalfInt h : seq) s.push_back(to_json(h));
    a.push_back(json{{"coeff", c}, {"seq", s}});
  }
  return a;
}

HalfInt halfint_from_json(const json& j) {
  if (j.is_number_integer()) return HalfInt(j.get<std::int64_t>());
  if (!j.is_string()) throw BadInput("exponent must be a string or an integer");
  return parse_halfint(j.get<std::string>());
}

GLIrred glirred_from_json(const json& j) {
  std::vector<Segment> segs;
  for (const auto& s : j) {
    if (s.size() != 2) throw BadInput("segment must be a pair");
    segs.emplace_back(halfint_from_json(s[0]), halfint_from_json(s[1]));
  }
  return GLIrred(std::move(segs));
}

AdmissibleTriple triple_from_json(const json& j, HalfInt alpha) {
  AdmissibleTriple t;
  t.alpha = alpha;
  try {
    t.jord = j.at("jord").get<std::vector<int>>();
    if (j.contains("eps_pair"))
      for (const auto& [k, v] : j.at("eps_pair").items()) {
        auto comma = k.find(',');
        if (comma == std::string::npos) throw BadInput("eps_pair key must be 'a,b'");
        t.eps_pair[{std::stoi(k.substr(0, comma)), std::stoi(k.substr(comma + 1))}] = v.get<int>();
      }
    if (j.contains("eps_single"))
      for (const auto& [k, v] : j.at("eps_single").items()) t.eps_single[std::stoi(k)] = v.get<int>();
  } catch (const json::exception& e) {
    throw BadInput(std::string("malformed triple: ") + e.what());
  } catch (const std::logic_error& e) {  // stoi
    throw BadInput(std::string("malformed triple: ") + e.what());
  }
  for (int a : t.jord)
    if (a <= 0) throw BadInput("Jordan blocks must be positive");
  for (const auto& [k, v] : t.eps_pair)
    if (v != 1 && v != -1) throw BadInput("signs must be +1 or -1");
  for (const auto& [k, v] : t.eps_single)
    if (v != 1 && v != -1) throw BadInput("signs must be +1 or -1");
  t.canonicalize();
  return t;
}

ClassicalIrred symbol_from_json(const json& j) {
  try {
    const std::string kind = j.at("kind");
    const HalfInt alpha = halfint_from_json(j.at("alpha"));
    if (kind == "sigma") return ClassicalIrred::sigma(alpha);
    if (kind == "sp") {
      std::vector<HalfInt> n;
      for (const auto& h : j.at("n")) n.push_back(halfint_from_json(h));
      return ClassicalIrred::sp(std::move(n), alpha);
    }
    if (kind == "ds") return ClassicalIrred::ds(triple_from_json(j.at("triple"), alpha));
    const HalfInt c = halfint_from_json(j.at("c")), d = halfint_from_json(j.at("d"));
    Kind k;
    if (kind == "full") k = Kind::full;
    else if (kind == "plus") k = Kind::plus;
    else if (kind == "minus") k = Kind::minus;
    else if (kind == "lang") k = Kind::lang;
    else if (kind == "tau") k = Kind::tau;
    else throw BadInput("unknown symbol kind '" + kind + "'");
    const int sign = k == Kind::tau ? j.at("sign").get<int>() : 0;
    return ClassicalIrred::raw(k, c, d, alpha, sign);
  } catch (const json::exception& e) {
    throw BadInput(std::string("malformed symbol: ") + e.what());
  }
}

TensorClsSum tensor_sum_from_json(const json& j) {
  TensorClsSum out;
  for (const auto& row : j) out.add({glirred_from_json(row.at("gl")), symbol_from_json(row.at("cls"))}, row.at("coeff"));
  return out;
}

GLTensorSum gl_tensor_sum_from_json(const json& j) {
  GLTensorSum out;
  for (const auto& row : j) out.add({glirred_from_json(row.at("left")), glirred_from_json(row.at("right"))}, row.at("coeff"));
  return out;
}

// ---- sums ----------------------------------------------------------------------

namespace {

std::string coeff_prefix(std::int64_t c) {
  if (c == 1) return "";
  if (c == -1) return "-";
  return std::to_string(c) + " ";
}

std::string latex_join(const std::vector<std::pair<std::string, std::int64_t>>& rows) {
  if (rows.empty()) return "0\n";
  std::string s;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& [body, c] = rows[k];
    const std::int64_t m = c < 0 ? -c : c;
    if (k == 0) s += c < 0 ? "-" : "";
    else s += c < 0 ? " - " : " + ";
    if (m != 1) s += std::to_string(m) + "\\, ";
    s += body;
  }
  return s + "\n";
}

template <class Sum, class Text, class Latex>
std::string render_sum(const Sum& x, Format f, Text text_of, Latex latex_of) {
  std::vector<std::pair<std::string, std::pair<std::string, std::int64_t>>> rows;
  for (const auto& [k, c] : x) rows.push_back({text_of(k), {f == Format::latex ? latex_of(k) : "", c}});
  std::sort(rows.begin(), rows.end());
  if (f == Format::latex) {
    std::vector<std::pair<std::string, std::int64_t>> l;
    for (auto& r : rows) l.push_back(r.second);
    return latex_join(l);
  }
  if (rows.empty()) return "0\n";
  std::string s;
  for (const auto& r : rows) s += coeff_prefix(r.second.second) + r.first + "\n";
  return s;
}

}  // namespace

std::string render(const TensorClsSum& x, Format f) {
  if (f == Format::json) return to_json(x).dump() + "\n";
  return render_sum(x, f, tensor_key,
                    [](const TensorTerm& t) { return latex(t.first) + " \\otimes " + latex(t.second); });
}

std::string render(const GLTensorSum& x, Format f) {
  if (f == Format::json) return to_json(x).dump() + "\n";
  return render_sum(x, f, gl_key, [](const GLPair& p) { return latex(p.first) + " \\otimes " + latex(p.second); });
}

std::string render(const Tensor3ClsSum& x, Format f) {
  if (f == Format::json) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& [t, c] : x)
      a.push_back({{"coeff", c}, {"gl", to_json(t.a)}, {"gl2", to_json(t.b)}, {"cls", to_json(t.x)}});
    return a.dump() + "\n";
  }
  return render_sum(
      x, f, [](const Tensor3Term& t) { return text(t.a) + " ⊗ " + text(t.b) + " ⊗ " + text(t.x); },
      [](const Tensor3Term& t) { return latex(t.a) + " \\otimes " + latex(t.b) + " \\otimes " + latex(t.x); });
}

std::string render(const ClassicalIrred& x, Format f) {
  switch (f) {
    case Format::text: return text(x) + "\n";
    case Format::json: return to_json(x).dump() + "\n";
    case Format::latex: return latex(x) + "\n";
  }
  return "";
}

std::string render(const SeqMultiset& x, Format f) {
  if (f == Format::json) return to_json(x).dump() + "\n";
  if (x.empty()) return "0\n";
  std::string s;
  for (const auto& [seq, c] : x) {
    std::string body;
    for (std::size_t k = 0; k < seq.size(); ++k) {
      if (f == Format::latex)
        body += (k ? " \\otimes " : "") + nu(seq[k]);
      else
        body += (k ? "," : "") + seq[k].str();
    }
    if (f == Format::latex) {
      s += (c == 1 ? "" : std::to_string(c) + "\\, ") + body + (seq.empty() ? "" : " \\otimes ") + "\\sigma\n";
    } else {
      s += coeff_prefix(c) + "(" + body + ")\n";
    }
  }
  return s;
}

// ---- parsing -------------------------------------------------------------------

ClassicalIrred parse_symbol(std::string_view raw_text, HalfInt alpha) {
  std::string t;
  for (char ch : raw_text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  auto bad = [&](const std::string& why) { return BadInput("cannot parse symbol '" + std::string(raw_text) + "': " + why); };
  if (t == "sigma") return ClassicalIrred::sigma(alpha);
  if (t.rfind("ds", 0) == 0) {
    json j;
    try {
      j = json::parse(t.substr(2));
    } catch (const json::exception&) {
      throw bad("triple is not valid JSON");
    }
    return ClassicalIrred::ds(triple_from_json(j, alpha));
  }
  auto open = t.find('(');
  if (open == std::string::npos || t.back() != ')') throw bad("expected name(args)");
  const std::string name = t.substr(0, open);
  std::vector<std::string> args;
  std::string cur;
  for (char ch : t.substr(open + 1, t.size() - open - 2)) {
    if (ch == ',') {
      args.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty() || !args.empty()) args.push_back(cur);
  if (name == "sp") {
    std::vector<HalfInt> n;
    for (const auto& a : args) n.push_back(parse_halfint(a));
    return ClassicalIrred::sp(std::move(n), alpha);
  }
  Label label;
  std::size_t want = 2;
  if (name == "plus") label = Label::plus;
  else if (name == "minus") label = Label::minus;
  else if (name == "lang") label = Label::lang;
  else if (name == "full") label = Label::plus;  // resolved below
  else if (name == "tau") {
    want = 3;
    label = Label::tau_plus;
  } else
    throw bad("unknown symbol '" + name + "'");
  if (args.size() != want) throw bad("expected " + std::to_string(want) + " arguments");
  const HalfInt c = parse_halfint(args[0]), d = parse_halfint(args[1]);
  if (want == 3) {
    if (args[2] == "+1" || args[2] == "1") label = Label::tau_plus;
    else if (args[2] == "-1") label = Label::tau_minus;
    else throw bad("tau sign must be +1 or -1");
  }
  if (name == "full") {
    auto cs = constituents(c, d, alpha);
    if (cs.size() != 1 || cs[0].x.kind() != Kind::full) throw bad("induced representation is reducible");
    return cs[0].x;
  }
  auto x = resolve_symbol(label, c, d, alpha);
  if (!x) throw bad("symbol is zero for alpha = " + alpha.str());
  return *x;
}

}  // namespace jacquet
