#include "jacquet/half_int.hpp"

#include <charconv>

#include "jacquet/errors.hpp"

namespace jacquet {

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

HalfInt parse_halfint(std::string_view text) {
  auto fail = [&] { return MalformedExponent("malformed exponent: '" + std::string(text) + "'"); };
  std::string_view s = text;
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s, den;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    if (den != "2") throw fail();
  } else {
    den = "1";
  }
  if (num.empty()) throw fail();
  for (char ch : num)
    if (ch < '0' || ch > '9') throw fail();
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
  if (ec != std::errc{} || ptr != num.data() + num.size()) throw fail();
  std::int64_t twice = den == "2" ? v : 2 * v;
  return HalfInt::from_doubled(neg ? -twice : twice);
}

}  // namespace jacquet
