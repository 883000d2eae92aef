#include "jacquet/segment.hpp"

#include <algorithm>

#include "jacquet/errors.hpp"

namespace jacquet {

Segment::Segment(HalfInt lo, HalfInt hi) {
  if (!same_line(lo, hi)) throw BadInput("segment endpoints " + lo.str() + ", " + hi.str() + " are on different lines");
  if (lo > hi) return;
  empty_ = false;
  lo_ = lo;
  hi_ = hi;
}

std::int64_t Segment::length() const { return empty_ ? 0 : (hi_ - lo_).doubled() / 2 + 1; }

Segment Segment::dual() const { return empty_ ? Segment{} : Segment{-hi_, -lo_}; }

Segment Segment::shifted(HalfInt t) const { return empty_ ? Segment{} : Segment{lo_ + t, hi_ + t}; }

bool Segment::contains(HalfInt x) const { return !empty_ && lo_ <= x && x <= hi_ && same_line(x, lo_); }

bool Segment::contains(const Segment& o) const {
  if (o.empty_) return true;
  return contains(o.lo_) && contains(o.hi_);
}

std::string Segment::str() const { return empty_ ? "[]" : "[" + lo_.str() + "," + hi_.str() + "]"; }

std::optional<Segment> seg_union(const Segment& a, const Segment& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (!same_line(a.lo(), b.lo())) return std::nullopt;
  // overlapping or adjacent
  if (b.lo() > a.hi() + 1 || a.lo() > b.hi() + 1) return std::nullopt;
  return Segment{std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

Segment seg_intersect(const Segment& a, const Segment& b) {
  if (a.empty() || b.empty() || !same_line(a.lo(), b.lo())) return {};
  return {std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi())};
}

bool linked(const Segment& a, const Segment& b) {
  auto u = seg_union(a, b);
  if (!u || a.empty() || b.empty()) return false;
  return !a.contains(b) && !b.contains(a);
}

Segment parse_segment(std::string_view text) {
  auto bad = [&] { return BadInput("malformed segment: '" + std::string(text) + "'"); };
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') throw bad();
  auto body = text.substr(1, text.size() - 2);
  if (body.empty()) return {};
  auto comma = body.find(',');
  if (comma == std::string_view::npos) throw bad();
  Segment s{parse_halfint(body.substr(0, comma)), parse_halfint(body.substr(comma + 1))};
  if (s.empty()) throw bad();  // "[2,1]" is not a canonical spelling
  return s;
}

}  // namespace jacquet
