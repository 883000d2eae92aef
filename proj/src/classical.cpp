#include "jacquet/classical.hpp"

#include <algorithm>

#include "jacquet/errors.hpp"

namespace jacquet {

// ---- triples ---------------------------------------------------------------

std::vector<int> AdmissibleTriple::distinct() const {
  std::vector<int> d = jord;
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

bool AdmissibleTriple::contains(int a) const { return std::find(jord.begin(), jord.end(), a) != jord.end(); }

bool AdmissibleTriple::multiplicity_free() const { return distinct().size() == jord.size(); }

void AdmissibleTriple::canonicalize() {
  std::sort(jord.begin(), jord.end());
  auto d = distinct();
  std::map<std::pair<int, int>, int> pairs;
  for (std::size_t k = 1; k < d.size(); ++k) {
    std::pair<int, int> key{d[k - 1], d[k]};
    auto s1 = eps_single.find(d[k - 1]), s2 = eps_single.find(d[k]);
    auto p = eps_pair.find(key);
    if (s1 != eps_single.end() && s2 != eps_single.end()) {
      int prod = s1->second * s2->second;
      if (p != eps_pair.end() && p->second != prod) throw BadInput("pair sign disagrees with single signs");
      pairs[key] = prod;
    } else if (p != eps_pair.end()) {
      pairs[key] = p->second;
    }
  }
  eps_pair = std::move(pairs);
  std::erase_if(eps_single, [&](const auto& kv) { return !contains(kv.first); });
}

AdmissibleTriple cuspidal_triple(HalfInt alpha) {
  AdmissibleTriple t;
  t.alpha = alpha;
  const int top = static_cast<int>((alpha + alpha - 1).doubled() / 2);  // 2 alpha - 1
  if (alpha.is_integer()) {
    for (int a = top; a >= 1; a -= 2) t.jord.push_back(a);
    std::sort(t.jord.begin(), t.jord.end());
    for (std::size_t k = 1; k < t.jord.size(); ++k) t.eps_pair[{t.jord[k - 1], t.jord[k]}] = -1;
  } else {
    for (int a = top; a >= 2; a -= 2) {
      t.jord.push_back(a);
      t.eps_single[a] = (a / 2) % 2 == 0 ? 1 : -1;  // eps(2) = -1, eps(4) = +1, ...
    }
  }
  t.canonicalize();
  return t;
}

bool block_eligible(const AdmissibleTriple& t, int a) {
  if (a < 2 || std::count(t.jord.begin(), t.jord.end(), a) != 1) return false;
  if (a == 2) {
    auto it = t.eps_single.find(2);
    return it != t.eps_single.end() && it->second == 1;
  }
  if (!t.contains(a - 2)) return true;
  auto it = t.eps_pair.find({a - 2, a});
  return it != t.eps_pair.end() && it->second == 1;
}

AdmissibleTriple lower_block(const AdmissibleTriple& t, int a) {
  if (!block_eligible(t, a)) throw IneligibleBlock("block " + std::to_string(a) + " cannot be lowered");
  AdmissibleTriple out;
  out.alpha = t.alpha;
  const bool removing = a == 2;
  const bool doubling = a >= 3 && t.contains(a - 2);
  bool done = false;
  for (int b : t.jord) {
    if (b == a && !done) {
      done = true;
      if (!removing) out.jord.push_back(a - 2);
    } else {
      out.jord.push_back(b);
    }
  }
  auto rename = [&](int b) { return b == a ? a - 2 : b; };
  for (const auto& [key, s] : t.eps_pair) {
    if (key.first == a || key.second == a) {
      if (removing || key == std::pair{a - 2, a}) continue;
    }
    out.eps_pair[{rename(key.first), rename(key.second)}] = s;
  }
  for (const auto& [b, s] : t.eps_single) {
    if (b == a) {
      if (removing || doubling) continue;
    }
    out.eps_single[rename(b)] = s;
  }
  out.canonicalize();
  return out;
}

// ---- symbols ---------------------------------------------------------------

ClassicalIrred ClassicalIrred::raw(Kind k, HalfInt c, HalfInt d, HalfInt alpha, int sign) {
  ClassicalIrred x;
  x.kind_ = k;
  x.alpha_ = alpha;
  if (k != Kind::sigma) {
    x.c_ = c;
    x.d_ = d;
  }
  x.sign_ = k == Kind::tau ? sign : 0;
  return x;
}

ClassicalIrred ClassicalIrred::sigma(HalfInt alpha) { return raw(Kind::sigma, 0, 0, alpha); }

HalfInt sp_start(HalfInt alpha) { return alpha.is_integer() ? HalfInt(1) : HalfInt::half(); }

ClassicalIrred ClassicalIrred::sp(std::vector<HalfInt> n, HalfInt alpha) {
  if (alpha < 0) throw BadInput("negative reducibility exponent");
  const HalfInt eps = sp_start(alpha);
  const std::size_t count = static_cast<std::size_t>(alpha.ceil());
  if (n.size() != count)
    throw BadInput("strongly positive datum needs " + std::to_string(count) + " parameters");
  bool degenerate = true;
  HalfInt i = eps;
  for (std::size_t k = 0; k < n.size(); ++k, i += 1) {
    if (!same_line(n[k], alpha)) throw LineMismatch("parameter " + n[k].str() + " is off the line of alpha");
    if (n[k] < i - 1) throw BadInput("parameter " + n[k].str() + " below its index");
    if (k > 0 && !(n[k - 1] < n[k])) throw BadInput("parameters must be strictly increasing");
    if (n[k] != i - 1) degenerate = false;
  }
  if (degenerate) return sigma(alpha);
  ClassicalIrred x = raw(Kind::sp, 0, 0, alpha);
  x.n_ = std::move(n);
  return x;
}

ClassicalIrred ClassicalIrred::ds(AdmissibleTriple t) {
  t.canonicalize();
  ClassicalIrred x = raw(Kind::ds, 0, 0, t.alpha);
  x.triple_ = std::move(t);
  return x;
}

std::pair<HalfInt, HalfInt> symmetrize(HalfInt c, HalfInt d) {
  if (d < -c) return {c, d};  // empty
  return d >= c ? std::pair{c, d} : std::pair{d, c};
}

Regime classify(HalfInt c, HalfInt d, HalfInt alpha) {
  if (alpha < 0) throw BadInput("negative reducibility exponent");
  if (!same_line(c, -d)) throw BadInput("c + d must be integral");
  if (!same_line(d, alpha))
    throw LineMismatch("d - alpha = " + (d - alpha).str() + " is not an integer");
  std::tie(c, d) = symmetrize(c, d);
  if (d < -c) return Regime::empty;
  const Segment s{-c, d};
  if (alpha == 0) return s.contains(HalfInt(0)) ? Regime::C : Regime::irreducible;
  if (!s.contains(alpha) && !s.contains(-alpha)) return Regime::irreducible;
  return s.contains(-alpha) ? Regime::B : Regime::A;
}

std::optional<ClassicalIrred> resolve_symbol(Label label, HalfInt c, HalfInt d, HalfInt alpha) {
  const Regime r = classify(c, d, alpha);
  std::tie(c, d) = symmetrize(c, d);
  const bool lang = label == Label::lang;
  const bool tau = label == Label::tau_plus || label == Label::tau_minus;
  switch (r) {
    case Regime::empty:
      if (lang) return std::nullopt;
      return ClassicalIrred::sigma(alpha);
    case Regime::irreducible: {
      const Segment s{-c, d};
      if (label == Label::plus && Segment(-alpha + 1, alpha - 1).contains(s))
        return ClassicalIrred::raw(Kind::full, c, d, alpha);
      if (lang && seg_intersect(s, Segment(-alpha, alpha)).empty())
        return ClassicalIrred::raw(Kind::full, c, d, alpha);
      return std::nullopt;
    }
    case Regime::A:
      if (label == Label::plus) return ClassicalIrred::raw(Kind::plus, c, d, alpha);
      if (lang) return ClassicalIrred::raw(Kind::lang, c, d, alpha);
      return std::nullopt;
    case Regime::B:
      if (label == Label::plus) return ClassicalIrred::raw(Kind::plus, c, d, alpha);
      if (label == Label::minus) return ClassicalIrred::raw(Kind::minus, c, d, alpha);
      if (lang && c < d) return ClassicalIrred::raw(Kind::lang, c, d, alpha);
      return std::nullopt;
    case Regime::C:
      if (tau) return ClassicalIrred::raw(Kind::tau, c, d, alpha, label == Label::tau_plus ? 1 : -1);
      if (lang && c < d) return ClassicalIrred::raw(Kind::lang, c, d, alpha);
      return std::nullopt;
  }
  return std::nullopt;
}

std::vector<Label> labels_for(HalfInt alpha) {
  if (alpha == 0) return {Label::tau_plus, Label::tau_minus, Label::lang};
  return {Label::plus, Label::minus, Label::lang};
}

std::vector<Constituent> constituents(HalfInt c, HalfInt d, HalfInt alpha) {
  if (classify(c, d, alpha) == Regime::empty) return {{Label::plus, ClassicalIrred::sigma(alpha)}};
  std::vector<Constituent> out;
  for (Label l : labels_for(alpha))
    if (auto x = resolve_symbol(l, c, d, alpha)) out.push_back({l, *x});
  return out;
}

GLIrred sp_ladder(const std::vector<HalfInt>& n, HalfInt alpha) {
  std::vector<Segment> segs;
  HalfInt i = sp_start(alpha);
  for (HalfInt nk : n) {
    segs.emplace_back(i, nk);
    i += 1;
  }
  return GLIrred(std::move(segs));
}

ClassicalIrred sp_from_jordan(const std::vector<int>& k, HalfInt alpha) {
  const bool odd = alpha.is_integer();
  for (std::size_t m = 0; m < k.size(); ++m) {
    if (k[m] < 0 || (k[m] % 2 != 0) != odd)
      throw BadInput("Jordan block " + std::to_string(k[m]) + (odd ? " must be odd" : " must be even"));
    if (m > 0 && k[m - 1] >= k[m]) throw BadInput("Jordan blocks must be strictly increasing");
  }
  std::vector<HalfInt> n;
  for (int km : k) n.push_back(HalfInt::from_doubled(km - 1));
  return ClassicalIrred::sp(std::move(n), alpha);
}

std::vector<int> jordan_from_sp(const ClassicalIrred& x) {
  std::vector<HalfInt> n;
  if (x.kind() == Kind::sp) {
    n = x.sp_params();
  } else if (x.kind() == Kind::sigma) {
    for (HalfInt i = sp_start(x.alpha()); i <= x.alpha(); i += 1) n.push_back(i - 1);
  } else if (x.kind() == Kind::plus && x.c() == -x.alpha()) {
    for (HalfInt i = sp_start(x.alpha()); i < x.alpha(); i += 1) n.push_back(i - 1);
    n.push_back(x.d());
  } else {
    throw BadInput("not a strongly positive symbol");
  }
  std::vector<int> k;
  for (HalfInt v : n) k.push_back(static_cast<int>(v.doubled() + 1));
  return k;
}

ClassicalIrred identify_sp(const ClassicalIrred& x) {
  if (x.kind() != Kind::sp) return x;
  const auto& n = x.sp_params();
  HalfInt i = sp_start(x.alpha());
  for (std::size_t k = 0; k + 1 < n.size(); ++k, i += 1)
    if (n[k] != i - 1) return x;
  return ClassicalIrred::raw(Kind::plus, -x.alpha(), n.back(), x.alpha());
}

// ---- symbol <-> triple -------------------------------------------------------

namespace {

int block(HalfInt x) { return static_cast<int>(x.doubled() + 1); }  // 2x + 1

AdmissibleTriple sp_triple(const std::vector<int>& k, HalfInt alpha) {
  const AdmissibleTriple sigma = cuspidal_triple(alpha);
  AdmissibleTriple t;
  t.alpha = alpha;
  HalfInt i = sp_start(alpha);
  for (int km : k) {
    const int base = block(i - 1);  // sigma's block at this position (0 is virtual)
    if (km > 0) {
      t.jord.push_back(km);
      if (!alpha.is_integer()) t.eps_single[km] = base == 0 ? 1 : sigma.eps_single.at(base);
    }
    i += 1;
  }
  std::sort(t.jord.begin(), t.jord.end());
  if (alpha.is_integer())
    for (std::size_t m = 1; m < t.jord.size(); ++m) t.eps_pair[{t.jord[m - 1], t.jord[m]}] = -1;
  t.canonicalize();
  return t;
}

}  // namespace

AdmissibleTriple triple_of(const ClassicalIrred& x) {
  const HalfInt alpha = x.alpha();
  AdmissibleTriple t = cuspidal_triple(alpha);
  const bool even = !alpha.is_integer();
  switch (x.kind()) {
    case Kind::sigma:
      return t;
    case Kind::ds:
      return x.triple();
    case Kind::sp:
      return sp_triple(jordan_from_sp(x), alpha);
    case Kind::plus:
    case Kind::minus: {
      const Regime r = classify(x.c(), x.d(), alpha);
      const int lo = block(x.c()), hi = block(x.d());
      if (r == Regime::A && x.c() == -alpha) return sp_triple(jordan_from_sp(x), alpha);
      if (r == Regime::A && x.c() == alpha - 1) {
        const int top = block(alpha - 1);  // 2 alpha - 1, doubled
        t.jord.push_back(top);
        t.jord.push_back(hi);
        t.eps_pair[{top, hi}] = 1;
        if (even) t.eps_single[hi] = t.eps_single.at(top);
        t.canonicalize();
        return t;
      }
      if (r != Regime::B) break;
      const int sgn = x.kind() == Kind::plus ? 1 : -1;
      const auto s = t.distinct();
      t.jord.push_back(lo);
      t.jord.push_back(hi);
      if (s.empty()) {
        t.eps_single[lo] = sgn;
      } else if (even) {
        t.eps_single[lo] = sgn * t.eps_single.at(s.back());
      } else {
        t.eps_pair[{s.back(), lo}] = sgn;
      }
      if (even) t.eps_single[hi] = t.eps_single[lo];
      if (lo != hi) t.eps_pair[{lo, hi}] = 1;
      t.canonicalize();
      return t;
    }
    case Kind::tau: {
      AdmissibleTriple u;
      u.alpha = alpha;
      const int lo = block(x.c()), hi = block(x.d());
      u.jord = {lo, hi};
      u.eps_single[lo] = x.sign();
      u.eps_single[hi] = x.sign();
      u.canonicalize();
      return u;
    }
    default:
      break;
  }
  throw BadInput("symbol is not a discrete series or tempered segment-type representation");
}

std::optional<ClassicalIrred> symbol_of(const AdmissibleTriple& target) {
  AdmissibleTriple want = target;
  want.canonicalize();
  const HalfInt alpha = want.alpha;
  auto matches = [&](const ClassicalIrred& x) { return triple_of(x) == want; };
  if (matches(ClassicalIrred::sigma(alpha))) return ClassicalIrred::sigma(alpha);
  if (want.jord.empty()) return std::nullopt;
  const HalfInt dmax = HalfInt::from_doubled(want.jord.back() - 1);  // (max - 1)/2
  std::vector<ClassicalIrred> cands;
  for (HalfInt d = alpha; d <= dmax; d += 1) {
    if (alpha == 0) {
      for (HalfInt c = 0; c <= d; c += 1)
        for (int k : {1, -1}) cands.push_back(ClassicalIrred::raw(Kind::tau, c, d, alpha, k));
      continue;
    }
    cands.push_back(ClassicalIrred::raw(Kind::plus, -alpha, d, alpha));
    if (alpha >= 1) cands.push_back(ClassicalIrred::raw(Kind::plus, alpha - 1, d, alpha));
    for (HalfInt c = alpha; c <= d; c += 1) {
      cands.push_back(ClassicalIrred::raw(Kind::plus, c, d, alpha));
      cands.push_back(ClassicalIrred::raw(Kind::minus, c, d, alpha));
    }
  }
  for (const auto& x : cands)
    if (matches(x)) return x;
  // general strongly positive data: blocks of the target read as Jordan data
  if (want.multiplicity_free() && alpha > 0) {
    std::vector<int> k = want.jord;
    const auto need = static_cast<std::size_t>(alpha.ceil());
    if (!alpha.is_integer() && k.size() + 1 == need) k.insert(k.begin(), 0);
    if (k.size() == need) {
      try {
        auto x = identify_sp(sp_from_jordan(k, alpha));
        if (matches(x)) return x;
      } catch (const BadInput&) {
      }
    }
  }
  return std::nullopt;
}

}  // namespace jacquet
