#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "jacquet/formal_sum.hpp"
#include "jacquet/segment.hpp"

namespace jacquet {

/// Langlands datum L(delta(D1),...,delta(Dk)) on the single line of rho.
/// Empty data is the unit 1 of R.
class GLIrred {
 public:
  GLIrred() = default;
  explicit GLIrred(std::vector<Segment> segs);  // drops empty segments, sorts
  explicit GLIrred(const Segment& s) : GLIrred(std::vector<Segment>{s}) {}

  bool is_unit() const { return segs_.empty(); }
  std::size_t size() const { return segs_.size(); }
  const std::vector<Segment>& segments() const { return segs_; }
  std::int64_t cuspidal_length() const;
  // cuspidal support, sorted ascending
  std::vector<HalfInt> support() const;
  // strictly increasing lo's and hi's (in storage order)
  bool is_ladder() const;
  // contragredient: dual of each segment
  GLIrred dual() const;

  friend auto operator<=>(const GLIrred&, const GLIrred&) = default;
  friend bool operator==(const GLIrred&, const GLIrred&) = default;

 private:
  std::vector<Segment> segs_;
};

using GLSum = FormalSum<GLIrred>;
using GLPair = std::pair<GLIrred, GLIrred>;
using GLTensorSum = FormalSum<GLPair>;
struct GLTriple {
  GLIrred a, b, c;
  friend auto operator<=>(const GLTriple&, const GLTriple&) = default;
  friend bool operator==(const GLTriple&, const GLTriple&) = default;
};
using GLTensor3Sum = FormalSum<GLTriple>;

// Semisimplification of delta(D1) x delta(D2).
GLSum normalize_product_pair(const Segment& d1, const Segment& d2);

// Product in R.  Supported: unit times anything, and two single segments.
GLSum product(const GLIrred& x, const GLIrred& y);
GLSum product(const GLSum& x, const GLSum& y);
// (x1 (x) x2) * (y1 (x) y2) = x1 y1 (x) x2 y2
GLTensorSum product(const GLTensorSum& x, const GLTensorSum& y);

GLTensorSum mstar_segment(const Segment& s);

enum class MstarLayer { full, first };

// m* on the supported shapes: one segment, a ladder, or two segments.
GLTensorSum mstar_irred(const GLIrred& x, MstarLayer layer = MstarLayer::full);
GLTensorSum mstar(const GLSum& x);

// Ladder expansion; precondition x.is_ladder().
GLTensorSum mstar_ladder(const GLIrred& x);
// m*(d1) m*(d2) - m*(d1 u d2) m*(d1 n d2) for linked d1, d2 (test oracle).
GLTensorSum mstar_linked_inclusion_exclusion(const Segment& d1, const Segment& d2);

enum class MstarForm { closed, composite, closed_alt };
// M*(delta(D)) with rho self-dual.
GLTensorSum Mstar(const Segment& s, MstarForm form = MstarForm::closed);

GLTensorSum kappa(const GLTensorSum& x);
// (m* (x) id) and (id (x) m*) into R (x) R (x) R.
GLTensor3Sum mstar_left(const GLTensorSum& x);
GLTensor3Sum mstar_right(const GLTensorSum& x);

}  // namespace jacquet
