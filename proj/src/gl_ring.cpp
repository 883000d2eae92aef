#include "jacquet/gl_ring.hpp"

#include <algorithm>

#include "jacquet/errors.hpp"

namespace jacquet {

GLIrred::GLIrred(std::vector<Segment> segs) {
  for (auto& s : segs)
    if (!s.empty()) segs_.push_back(s);
  std::sort(segs_.begin(), segs_.end(), [](const Segment& x, const Segment& y) {
    if (x.twice_center() != y.twice_center()) return x.twice_center() < y.twice_center();
    return x.lo() < y.lo();
  });
}

std::int64_t GLIrred::cuspidal_length() const {
  std::int64_t n = 0;
  for (const auto& s : segs_) n += s.length();
  return n;
}

std::vector<HalfInt> GLIrred::support() const {
  std::vector<HalfInt> out;
  for (const auto& s : segs_)
    for (HalfInt x = s.lo(); x <= s.hi(); x += 1) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

bool GLIrred::is_ladder() const {
  for (std::size_t k = 1; k < segs_.size(); ++k)
    if (!(segs_[k - 1].lo() < segs_[k].lo() && segs_[k - 1].hi() < segs_[k].hi())) return false;
  return true;
}

GLIrred GLIrred::dual() const {
  std::vector<Segment> d;
  for (const auto& s : segs_) d.push_back(s.dual());
  return GLIrred(std::move(d));
}

GLSum normalize_product_pair(const Segment& d1, const Segment& d2) {
  GLSum out(GLIrred({d1, d2}));
  if (linked(d1, d2)) out.add(GLIrred({*seg_union(d1, d2), seg_intersect(d1, d2)}));
  return out;
}

GLSum product(const GLIrred& x, const GLIrred& y) {
  if (x.is_unit()) return GLSum(y);
  if (y.is_unit()) return GLSum(x);
  if (x.size() == 1 && y.size() == 1) return normalize_product_pair(x.segments()[0], y.segments()[0]);
  throw UnsupportedShape("product of multisegments outside the supported fragment");
}

GLSum product(const GLSum& x, const GLSum& y) {
  GLSum out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out += product(a, b).scaled(ca * cb);
  return out;
}

GLTensorSum product(const GLTensorSum& x, const GLTensorSum& y) {
  GLTensorSum out;
  for (const auto& [p, cp] : x)
    for (const auto& [q, cq] : y) {
      GLSum l = product(p.first, q.first), r = product(p.second, q.second);
      for (const auto& [u, cu] : l)
        for (const auto& [v, cv] : r) out.add({u, v}, cp * cq * cu * cv);
    }
  return out;
}

GLTensorSum mstar_segment(const Segment& s) {
  GLTensorSum out;
  if (s.empty()) {
    out.add({});
    return out;
  }
  for (HalfInt i = s.lo() - 1; i <= s.hi(); i += 1)
    out.add({GLIrred(Segment{i + 1, s.hi()}), GLIrred(Segment{s.lo(), i})});
  return out;
}

namespace {

void ladder_rec(const std::vector<Segment>& segs, std::size_t k, HalfInt floor_excl, bool has_floor,
                std::vector<Segment>& left, std::vector<Segment>& right, GLTensorSum& out) {
  if (k == segs.size()) {
    out.add({GLIrred(left), GLIrred(right)});
    return;
  }
  const Segment& s = segs[k];
  for (HalfInt ck = s.lo() - 1; ck <= s.hi(); ck += 1) {
    if (has_floor && ck <= floor_excl) continue;
    left.push_back(Segment{ck + 1, s.hi()});
    right.push_back(Segment{s.lo(), ck});
    ladder_rec(segs, k + 1, ck, true, left, right, out);
    left.pop_back();
    right.pop_back();
  }
}

}  // namespace

GLTensorSum mstar_ladder(const GLIrred& x) {
  if (!x.is_ladder()) throw UnsupportedShape("not a ladder");
  GLTensorSum out;
  std::vector<Segment> left, right;
  ladder_rec(x.segments(), 0, {}, false, left, right, out);
  return out;
}

GLTensorSum mstar_linked_inclusion_exclusion(const Segment& d1, const Segment& d2) {
  if (!linked(d1, d2)) throw UnsupportedShape("segments are not linked");
  GLTensorSum out = product(mstar_segment(d1), mstar_segment(d2));
  out -= product(mstar_segment(*seg_union(d1, d2)), mstar_segment(seg_intersect(d1, d2)));
  return out;
}

GLTensorSum mstar_irred(const GLIrred& x, MstarLayer layer) {
  GLTensorSum out;
  if (x.is_unit())
    out.add({});
  else if (x.size() == 1)
    out = mstar_segment(x.segments()[0]);
  else if (x.is_ladder())
    out = mstar_ladder(x);
  else if (x.size() == 2)
    out = product(mstar_segment(x.segments()[0]), mstar_segment(x.segments()[1]));
  else
    throw UnsupportedShape("m* of a non-ladder datum with more than two segments");
  if (layer == MstarLayer::first) out = out.filtered([](const GLPair& p) { return p.first.cuspidal_length() == 1; });
  return out;
}

GLTensorSum mstar(const GLSum& x) {
  GLTensorSum out;
  for (const auto& [g, c] : x) out += mstar_irred(g).scaled(c);
  return out;
}

GLTensorSum kappa(const GLTensorSum& x) {
  GLTensorSum out;
  for (const auto& [p, c] : x) out.add({p.second, p.first}, c);
  return out;
}

GLTensor3Sum mstar_left(const GLTensorSum& x) {
  GLTensor3Sum out;
  for (const auto& [p, c] : x)
    for (const auto& [q, cq] : mstar_irred(p.first)) out.add({q.first, q.second, p.second}, c * cq);
  return out;
}

GLTensor3Sum mstar_right(const GLTensorSum& x) {
  GLTensor3Sum out;
  for (const auto& [p, c] : x)
    for (const auto& [q, cq] : mstar_irred(p.second)) out.add({p.first, q.first, q.second}, c * cq);
  return out;
}

GLTensorSum Mstar(const Segment& s, MstarForm form) {
  GLTensorSum out;
  if (s.empty()) {
    out.add({});
    return out;
  }
  const HalfInt a = s.lo(), b = s.hi();
  auto put = [&](const Segment& l1, const Segment& l2, const Segment& r) {
    for (const auto& [g, c] : normalize_product_pair(l1, l2)) out.add({g, GLIrred(r)}, c);
  };
  switch (form) {
    case MstarForm::closed:
      for (HalfInt i = a - 1; i <= b; i += 1)
        for (HalfInt j = i; j <= b; j += 1) put({-i, -a}, {j + 1, b}, {i + 1, j});
      break;
    case MstarForm::closed_alt:
      for (HalfInt k = 0; k <= b - a + 1; k += 1)
        for (HalfInt i = a - 1; i <= b - k; i += 1) put({-i, -a}, {k + i + 1, b}, {i + 1, i + k});
      break;
    case MstarForm::composite:
      // (m (x) id) o (~ (x) m*) o kappa o m*
      for (const auto& [p, c] : kappa(mstar_segment(s))) {
        GLIrred yt = p.first.dual();
        for (const auto& [q, cq] : mstar_irred(p.second))
          for (const auto& [g, cg] : product(yt, q.first)) out.add({g, q.second}, c * cq * cg);
      }
      break;
  }
  return out;
}

}  // namespace jacquet
