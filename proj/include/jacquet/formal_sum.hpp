#pragma once

#include <cstdint>
#include <map>
#include <utility>

namespace jacquet {

/// Finitely supported Z-linear combination of keys.  Zero coefficients are
/// never stored, so equality of sums is equality of maps.
template <class Key>
class FormalSum {
 public:
  using Map = std::map<Key, std::int64_t>;

  FormalSum() = default;
  explicit FormalSum(const Key& k, std::int64_t coeff = 1) { add(k, coeff); }

  void add(const Key& k, std::int64_t coeff = 1) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, coeff);
    if (!inserted && (it->second += coeff) == 0) terms_.erase(it);
  }

  FormalSum& operator+=(const FormalSum& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }

  FormalSum scaled(std::int64_t s) const {
    FormalSum out;
    if (s != 0)
      for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * s);
    return out;
  }

  std::int64_t coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? 0 : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  bool nonnegative() const {
    for (const auto& [k, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  // keep terms whose key satisfies pred
  template <class Pred>
  FormalSum filtered(Pred pred) const {
    FormalSum out;
    for (const auto& [k, c] : terms_)
      if (pred(k)) out.terms_.emplace(k, c);
    return out;
  }

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  Map terms_;
};

template <class Key>
bool sum_equal(const FormalSum<Key>& x, const FormalSum<Key>& y) {
  return x == y;
}

// Linear extension of f: Key -> FormalSum<Out>.
template <class Out, class Key, class F>
FormalSum<Out> linear_map(const FormalSum<Key>& x, F&& f) {
  FormalSum<Out> out;
  for (const auto& [k, c] : x) out += f(k).scaled(c);
  return out;
}

}  // namespace jacquet
