#include "jacquet/transforms.hpp"

#include <stdexcept>

#include "jacquet/errors.hpp"

namespace jacquet {

namespace {

Label label_of(const ClassicalIrred& x) {
  switch (x.kind()) {
    case Kind::plus: return Label::plus;
    case Kind::minus: return Label::minus;
    case Kind::lang: return Label::lang;
    case Kind::tau: return x.sign() > 0 ? Label::tau_plus : Label::tau_minus;
    default: throw std::logic_error("symbol has no constituent label");
  }
}

GLIrred point(HalfInt x) { return GLIrred(Segment::point(x)); }

void add_tensor(TensorClsSum& out, const GLSum& left, const ClassicalIrred& x, std::int64_t coeff = 1) {
  for (const auto& [g, c] : left) out.add({g, x}, c * coeff);
}

// nu^e (x) R(label, segment [lo, hi])
void add_resolved(TensorClsSum& out, HalfInt e, Label label, HalfInt lo, HalfInt hi, HalfInt alpha,
                  std::int64_t coeff = 1) {
  if (auto x = resolve_symbol(label, -lo, hi, alpha)) out.add({point(e), *x}, coeff);
}

// the two generic top terms: nu^d (x) R([-c,d-1]) + nu^c (x) R([-c+1,d])
void two_term(TensorClsSum& out, Label label, HalfInt c, HalfInt d, HalfInt alpha) {
  add_resolved(out, d, label, -c, d - 1, alpha);
  add_resolved(out, c, label, -c + 1, d, alpha);
}

void sp_rec(const std::vector<HalfInt>& n, HalfInt alpha, std::size_t k, HalfInt idx, std::vector<HalfInt>& cs,
            std::vector<Segment>& left, TensorClsSum& out) {
  if (k == n.size()) {
    out.add({GLIrred(left), ClassicalIrred::sp(cs, alpha)});
    return;
  }
  for (HalfInt ck = idx - 1; ck <= n[k]; ck += 1) {
    if (k > 0 && ck <= cs.back()) continue;
    cs.push_back(ck);
    left.emplace_back(ck + 1, n[k]);
    sp_rec(n, alpha, k + 1, idx + 1, cs, left, out);
    cs.pop_back();
    left.pop_back();
  }
}

}  // namespace

std::vector<StructuralTerm> structural_terms(HalfInt c, HalfInt d) {
  std::vector<StructuralTerm> out;
  for (HalfInt i = -c - 1; i <= d; i += 1)
    for (HalfInt j = i; j <= d; j += 1)
      out.push_back({i, j, normalize_product_pair({-i, c}, {j + 1, d}), Segment{i + 1, j}});
  return out;
}

TensorClsSum Engine::mu_star_induced(HalfInt c, HalfInt d, HalfInt alpha) {
  classify(c, d, alpha);
  std::tie(c, d) = symmetrize(c, d);
  TensorClsSum out;
  for (const auto& t : structural_terms(c, d))
    for (const auto& piece : constituents(-(t.i + 1), t.j, alpha)) add_tensor(out, t.left, piece.x);
  return out;
}

std::map<Label, TensorClsSum> Engine::compute_routes(HalfInt c, HalfInt d, HalfInt alpha) {
  std::map<Label, TensorClsSum> r;
  const bool zero = alpha == 0;
  const std::vector<Label> signed_labels =
      zero ? std::vector<Label>{Label::tau_plus, Label::tau_minus} : std::vector<Label>{Label::plus, Label::minus};
  for (const auto& t : structural_terms(c, d)) {
    const GLSum langlands(GLIrred({Segment{-t.i, c}, Segment{t.j + 1, d}}));
    if (t.middle.empty()) {
      const ClassicalIrred s = ClassicalIrred::sigma(alpha);
      if (zero) {
        if (t.i <= -1)
          for (Label l : signed_labels) add_tensor(r[l], t.left, s);
      } else {
        if (t.i <= alpha - 1) add_tensor(r[Label::plus], t.left, s);
        if (t.i <= -alpha - 1) add_tensor(r[Label::minus], t.left, s);
      }
      if (t.i >= alpha) add_tensor(r[Label::lang], langlands, s);
      continue;
    }
    for (const auto& piece : constituents(-(t.i + 1), t.j, alpha)) {
      if (piece.label != Label::lang) {
        add_tensor(r[piece.label], t.left, piece.x);
        continue;
      }
      const HalfInt ij = t.i + t.j;
      if (ij < -1) {
        for (Label l : signed_labels) add_tensor(r[l], t.left, piece.x);
      } else if (ij >= 0) {
        add_tensor(r[Label::lang], langlands, piece.x);
      } else {
        throw std::logic_error("Langlands piece on a symmetric middle segment");
      }
    }
  }
  return r;
}

const std::map<Label, TensorClsSum>& Engine::routed(HalfInt c, HalfInt d, HalfInt alpha) {
  classify(c, d, alpha);
  std::tie(c, d) = symmetrize(c, d);
  if (!memoize_) {
    scratch_ = compute_routes(c, d, alpha);
    return scratch_;
  }
  Key key{c, d, alpha};
  auto it = routes_.find(key);
  if (it == routes_.end()) it = routes_.emplace(key, compute_routes(c, d, alpha)).first;
  return it->second;
}

TensorClsSum Engine::mu_star(const ClassicalIrred& x) {
  switch (x.kind()) {
    case Kind::sigma: {
      TensorClsSum out;
      out.add({GLIrred{}, x});
      return out;
    }
    case Kind::full:
      return mu_star_induced(x.c(), x.d(), x.alpha());
    case Kind::plus:
    case Kind::minus:
    case Kind::tau:
    case Kind::lang: {
      const auto& r = routed(x.c(), x.d(), x.alpha());
      auto it = r.find(label_of(x));
      return it == r.end() ? TensorClsSum{} : it->second;
    }
    case Kind::sp: {
      TensorClsSum out;
      std::vector<HalfInt> cs;
      std::vector<Segment> left;
      sp_rec(x.sp_params(), x.alpha(), 0, sp_start(x.alpha()), cs, left, out);
      return out;
    }
    case Kind::ds:
      break;
  }
  throw UnsupportedShape("mu* of a general discrete series is not available; use its top Jacquet module");
}

SeqMultiset Engine::exponent_sequences(const ClassicalIrred& x) {
  if (x.kind() == Kind::sigma) return {{ExponentSeq{}, 1}};
  if (memoize_)
    if (auto it = seqs_.find(x); it != seqs_.end()) return it->second;
  SeqMultiset out;
  for (const auto& [term, coeff] : s_top_closed(x)) {
    const HalfInt e = term.first.segments().front().lo();
    for (const auto& [seq, m] : exponent_sequences(term.second)) {
      ExponentSeq s;
      s.reserve(seq.size() + 1);
      s.push_back(e);
      s.insert(s.end(), seq.begin(), seq.end());
      out[s] += coeff * m;
    }
  }
  if (memoize_) seqs_.emplace(x, out);
  return out;
}

TensorClsSum s_gl_slice(const TensorClsSum& x) {
  return x.filtered([](const TensorTerm& t) { return t.second.kind() == Kind::sigma; });
}

TensorClsSum s_top_slice(const TensorClsSum& x) {
  return x.filtered([](const TensorTerm& t) { return t.first.cuspidal_length() == 1; });
}

TensorClsSum s_gl_closed(const ClassicalIrred& x) {
  TensorClsSum out;
  const HalfInt alpha = x.alpha(), c = x.c(), d = x.d();
  const ClassicalIrred s = ClassicalIrred::sigma(alpha);
  auto upto = [&](HalfInt upper) {
    for (HalfInt i = -c - 1; i <= upper; i += 1) add_tensor(out, normalize_product_pair({-i, c}, {i + 1, d}), s);
  };
  switch (x.kind()) {
    case Kind::sigma:
      out.add({GLIrred{}, s});
      break;
    case Kind::full:
      upto(d);
      break;
    case Kind::plus:
      upto(alpha - 1);
      break;
    case Kind::minus:
      upto(-alpha - 1);
      break;
    case Kind::tau:
      upto(-1);
      break;
    case Kind::lang:
      for (HalfInt i = alpha; i <= d; i += 1) out.add({GLIrred({Segment{-i, c}, Segment{i + 1, d}}), s});
      break;
    case Kind::sp:
      out.add({sp_ladder(x.sp_params(), alpha), s});
      break;
    case Kind::ds:
      throw UnsupportedShape("s_GL of a general discrete series is not available");
  }
  return out;
}

TensorClsSum s_top_closed(const ClassicalIrred& x) {
  TensorClsSum out;
  const HalfInt alpha = x.alpha(), c = x.c(), d = x.d();
  const ClassicalIrred s = ClassicalIrred::sigma(alpha);
  switch (x.kind()) {
    case Kind::sigma:
      break;
    case Kind::full:
      for (const auto& p : constituents(c, d - 1, alpha)) out.add({point(d), p.x});
      for (const auto& p : constituents(c - 1, d, alpha)) out.add({point(c), p.x});
      break;
    case Kind::plus:
    case Kind::minus:
    case Kind::tau:
    case Kind::lang: {
      const Label l = label_of(x);
      const Regime r = classify(c, d, alpha);
      if (r == Regime::A && -c == d) {
        // segment [alpha, alpha]
        out.add({point(l == Label::lang ? -alpha : alpha), s});
      } else if (c < d || r == Regime::A) {
        two_term(out, l, c, d, alpha);
      } else if (c == 0) {
        out.add({point(0), s});  // tau at [0,0]
      } else {
        // symmetric tempered case
        add_resolved(out, c, l, -c + 1, c, alpha, 2);
        add_resolved(out, c, Label::lang, -c + 1, c, alpha);
      }
      break;
    }
    case Kind::sp: {
      const auto& n = x.sp_params();
      HalfInt idx = sp_start(alpha);
      for (std::size_t k = 0; k < n.size(); ++k, idx += 1) {
        if (n[k] - 1 < idx - 1) continue;
        if (k > 0 && n[k - 1] >= n[k] - 1) continue;
        auto m = n;
        m[k] -= 1;
        out.add({point(n[k]), ClassicalIrred::sp(m, alpha)});
      }
      break;
    }
    case Kind::ds:
      return s_top_ds(x.triple());
  }
  return out;
}

TensorClsSum s_top_ds(const AdmissibleTriple& t) {
  if (!t.multiplicity_free()) throw BadInput("triple has a doubled block; not a discrete series");
  TensorClsSum out;
  for (int a : t.distinct())
    if (block_eligible(t, a)) out.add({point(HalfInt::from_doubled(a - 1)), ClassicalIrred::ds(lower_block(t, a))});
  return out;
}

TensorClsSum s_top_ds_translated(const AdmissibleTriple& t) {
  TensorClsSum out;
  for (const auto& [term, c] : s_top_ds(t)) {
    auto sym = symbol_of(term.second.triple());
    out.add({term.first, sym ? *sym : term.second}, c);
  }
  return out;
}

Tensor3ClsSum comodule_left(const TensorClsSum& x) {
  Tensor3ClsSum out;
  for (const auto& [t, c] : x)
    for (const auto& [p, cp] : mstar_irred(t.first)) out.add({p.first, p.second, t.second}, c * cp);
  return out;
}

Tensor3ClsSum comodule_right(Engine& e, const TensorClsSum& x) {
  Tensor3ClsSum out;
  for (const auto& [t, c] : x)
    for (const auto& [u, cu] : e.mu_star(t.second)) out.add({t.first, u.first, u.second}, c * cu);
  return out;
}

}  // namespace jacquet
