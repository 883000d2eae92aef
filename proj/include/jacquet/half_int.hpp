#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace jacquet {

/// Exact element of (1/2)Z, stored doubled.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(std::int64_t integer) : twice_(2 * integer) {}  // NOLINT: integers are half-integers

  static constexpr HalfInt from_doubled(std::int64_t twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInt half() { return from_doubled(1); }

  constexpr std::int64_t doubled() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  // floor / ceil to an integer
  constexpr std::int64_t floor() const { return twice_ >= 0 ? twice_ / 2 : -((-twice_ + 1) / 2); }
  constexpr std::int64_t ceil() const { return -HalfInt::from_doubled(-twice_).floor(); }

  constexpr HalfInt operator-() const { return from_doubled(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
  friend constexpr bool operator==(HalfInt, HalfInt) = default;

  std::string str() const;

 private:
  std::int64_t twice_ = 0;
};

// "k", "-k", "m/2"; throws MalformedExponent otherwise.
HalfInt parse_halfint(std::string_view text);

// x - y in Z
inline bool same_line(HalfInt x, HalfInt y) { return (x - y).is_integer(); }

}  // namespace jacquet

template <>
struct std::hash<jacquet::HalfInt> {
  std::size_t operator()(jacquet::HalfInt h) const noexcept { return std::hash<std::int64_t>{}(h.doubled()); }
};
