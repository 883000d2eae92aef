#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jacquet/formal_sum.hpp"
#include "jacquet/gl_ring.hpp"
#include "jacquet/half_int.hpp"
#include "jacquet/segment.hpp"

namespace jacquet {

/// Admissible triple on the line of rho.  jord is sorted and may hold a
/// block twice (tempered symbols); eps_pair is keyed by consecutive distinct
/// blocks.
struct AdmissibleTriple {
  HalfInt alpha;
  std::vector<int> jord;
  std::map<std::pair<int, int>, int> eps_pair;
  std::map<int, int> eps_single;

  std::vector<int> distinct() const;
  bool contains(int a) const;
  bool multiplicity_free() const;
  // derive pair signs from singles where both are known; drop stale keys
  void canonicalize();

  friend auto operator<=>(const AdmissibleTriple&, const AdmissibleTriple&) = default;
  friend bool operator==(const AdmissibleTriple&, const AdmissibleTriple&) = default;
};

// Conventional triple of the cuspidal sigma with reducibility alpha.
AdmissibleTriple cuspidal_triple(HalfInt alpha);
bool block_eligible(const AdmissibleTriple& t, int a);
// Throws IneligibleBlock when the lowering is not defined.
AdmissibleTriple lower_block(const AdmissibleTriple& t, int a);

enum class Kind { sigma, full, plus, minus, tau, lang, sp, ds };

/// Named irreducible class in R(G).  (c,d) stands for the segment [-c,d],
/// always in symmetrized form.
class ClassicalIrred {
 public:
  static ClassicalIrred sigma(HalfInt alpha);
  // n = (n_eps, ..., n_alpha); all-degenerate data give sigma
  static ClassicalIrred sp(std::vector<HalfInt> n, HalfInt alpha);
  static ClassicalIrred ds(AdmissibleTriple t);
  // Unchecked constructor; callers go through resolve_symbol.
  static ClassicalIrred raw(Kind k, HalfInt c, HalfInt d, HalfInt alpha, int sign = 0);

  Kind kind() const { return kind_; }
  HalfInt alpha() const { return alpha_; }
  HalfInt c() const { return c_; }
  HalfInt d() const { return d_; }
  int sign() const { return sign_; }
  Segment segment() const { return {-c_, d_}; }
  const std::vector<HalfInt>& sp_params() const { return n_; }
  const AdmissibleTriple& triple() const { return *triple_; }

  friend auto operator<=>(const ClassicalIrred&, const ClassicalIrred&) = default;
  friend bool operator==(const ClassicalIrred&, const ClassicalIrred&) = default;

 private:
  Kind kind_ = Kind::sigma;
  HalfInt alpha_;
  HalfInt c_, d_;
  int sign_ = 0;
  std::vector<HalfInt> n_;
  std::optional<AdmissibleTriple> triple_;
};

using ClsSum = FormalSum<ClassicalIrred>;
using TensorTerm = std::pair<GLIrred, ClassicalIrred>;
using TensorClsSum = FormalSum<TensorTerm>;
struct Tensor3Term {
  GLIrred a, b;
  ClassicalIrred x;
  friend auto operator<=>(const Tensor3Term&, const Tensor3Term&) = default;
  friend bool operator==(const Tensor3Term&, const Tensor3Term&) = default;
};
using Tensor3ClsSum = FormalSum<Tensor3Term>;

std::pair<HalfInt, HalfInt> symmetrize(HalfInt c, HalfInt d);

enum class Regime { empty, irreducible, A, B, C };
// (c,d) symmetrized; throws LineMismatch when d - alpha is not integral
Regime classify(HalfInt c, HalfInt d, HalfInt alpha);

// Constituent labels of delta([-c,d]) x| sigma.
enum class Label { plus, minus, tau_plus, tau_minus, lang };

std::optional<ClassicalIrred> resolve_symbol(Label label, HalfInt c, HalfInt d, HalfInt alpha);

struct Constituent {
  Label label;
  ClassicalIrred x;
};
// Non-zero constituents of delta([-c,d]) x| sigma (symmetrizes first).  The
// empty segment gives sigma, reported with label plus.
std::vector<Constituent> constituents(HalfInt c, HalfInt d, HalfInt alpha);

// Labels of the composition series for this alpha (tau's when alpha = 0).
std::vector<Label> labels_for(HalfInt alpha);

// epsilon of the strongly positive ladder: 1 or 1/2
HalfInt sp_start(HalfInt alpha);
// the ladder Lad(n) as a GL datum
GLIrred sp_ladder(const std::vector<HalfInt>& n, HalfInt alpha);
// k ascending (k_1 < ... < k_ceil(alpha)); n_i = (k_i - 1)/2
ClassicalIrred sp_from_jordan(const std::vector<int>& k, HalfInt alpha);
std::vector<int> jordan_from_sp(const ClassicalIrred& x);
// SP datum with only the top segment [alpha, n] identifies with plus(-alpha, n)
ClassicalIrred identify_sp(const ClassicalIrred& x);

// Triple of a discrete series or tempered segment-type symbol under the
// cuspidal convention above; throws BadInput for other symbols.
AdmissibleTriple triple_of(const ClassicalIrred& x);
// Inverse of triple_of on its image (searched); nullopt if not found.
std::optional<ClassicalIrred> symbol_of(const AdmissibleTriple& t);

}  // namespace jacquet
