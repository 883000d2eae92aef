#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "jacquet/half_int.hpp"

namespace jacquet {

/// [nu^lo rho, nu^hi rho]; all empty segments compare equal.
class Segment {
 public:
  Segment() = default;  // empty
  Segment(HalfInt lo, HalfInt hi);  // lo > hi gives the empty segment

  static Segment empty_segment() { return {}; }
  static Segment point(HalfInt x) { return {x, x}; }

  bool empty() const { return empty_; }
  HalfInt lo() const { return lo_; }
  HalfInt hi() const { return hi_; }
  std::int64_t length() const;
  // lo + hi, i.e. twice the central exponent
  HalfInt twice_center() const { return lo_ + hi_; }

  Segment dual() const;
  Segment shifted(HalfInt t) const;
  bool contains(HalfInt x) const;
  bool contains(const Segment& other) const;

  friend auto operator<=>(const Segment&, const Segment&) = default;
  friend bool operator==(const Segment&, const Segment&) = default;

  std::string str() const;

 private:
  bool empty_ = true;
  HalfInt lo_{};
  HalfInt hi_{};
};

// Set-theoretic operations on progressions.  Union is nullopt when the result
// is not a segment (gap or different lines).
std::optional<Segment> seg_union(const Segment& a, const Segment& b);
Segment seg_intersect(const Segment& a, const Segment& b);
bool linked(const Segment& a, const Segment& b);

Segment parse_segment(std::string_view text);

}  // namespace jacquet
