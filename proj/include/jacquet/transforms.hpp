#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "jacquet/classical.hpp"

namespace jacquet {

using ExponentSeq = std::vector<HalfInt>;
using SeqMultiset = std::map<ExponentSeq, std::int64_t>;

/// Jacquet-module computations with a per-instance memo table.  Not
/// thread-safe; give each thread its own Engine.
class Engine {
 public:
  explicit Engine(bool memoize = true) : memoize_(memoize) {}

  // mu*(delta([-c,d]) x| sigma), constituents expanded
  TensorClsSum mu_star_induced(HalfInt c, HalfInt d, HalfInt alpha);
  TensorClsSum mu_star(const ClassicalIrred& x);
  SeqMultiset exponent_sequences(const ClassicalIrred& x);

  // Pieces of mu_star_induced(c,d,alpha) routed to each constituent label.
  const std::map<Label, TensorClsSum>& routed(HalfInt c, HalfInt d, HalfInt alpha);

 private:
  using Key = std::tuple<HalfInt, HalfInt, HalfInt>;
  std::map<Label, TensorClsSum> compute_routes(HalfInt c, HalfInt d, HalfInt alpha);

  bool memoize_;
  std::map<Key, std::map<Label, TensorClsSum>> routes_;
  std::map<ClassicalIrred, SeqMultiset> seqs_;
  std::map<Label, TensorClsSum> scratch_;
};

// Lemma-style grid: sum over -c-1 <= i <= j <= d of
// delta([-i,c]) x delta([j+1,d]) (x) delta([i+1,j]) x| sigma, unexpanded.
struct StructuralTerm {
  HalfInt i, j;
  GLSum left;
  Segment middle;
};
std::vector<StructuralTerm> structural_terms(HalfInt c, HalfInt d);

// Slices of a tensor sum.
TensorClsSum s_gl_slice(const TensorClsSum& x);   // right factor sigma
TensorClsSum s_top_slice(const TensorClsSum& x);  // left factor cuspidal

// Closed forms transcribed from the theorems.
TensorClsSum s_gl_closed(const ClassicalIrred& x);
TensorClsSum s_top_closed(const ClassicalIrred& x);

// Top Jacquet module of a discrete series given by its triple.
TensorClsSum s_top_ds(const AdmissibleTriple& t);
// Same, with DS symbols translated back to named symbols when possible.
TensorClsSum s_top_ds_translated(const AdmissibleTriple& t);

// (m* (x) id) and (id (x) mu*) applied to a tensor sum.
Tensor3ClsSum comodule_left(const TensorClsSum& x);
Tensor3ClsSum comodule_right(Engine& e, const TensorClsSum& x);

}  // namespace jacquet
