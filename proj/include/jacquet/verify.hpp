#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jacquet/half_int.hpp"

namespace jacquet {

struct SweepCase {
  HalfInt alpha, c, d;
  std::string key() const;
};

struct SweepSpec {
  std::vector<HalfInt> alphas;  // default: 0, 1/2, ..., 5/2
  int max_d_offset = 3;         // d <= alpha + offset
  int segment_bound = 4;        // endpoints in [-bound, bound] for GL suites
  std::optional<SweepCase> single;  // reproduce one case in isolation
  unsigned jobs = 1;

  static SweepSpec defaults();
  static std::vector<HalfInt> alphas_upto(HalfInt max);
};

struct Failure {
  std::string key;
  std::string what;
  std::string lhs, rhs;
};

struct Report {
  std::string suite;
  std::size_t cases = 0;
  std::vector<Failure> failures;
  std::vector<std::string> notes;
  double seconds = 0;
  bool pass() const { return failures.empty(); }
  nlohmann::json to_json(bool with_timing = true) const;
  std::string to_text(bool with_timing = true) const;
};

const std::vector<std::string>& suite_names();

// Symmetrized (c,d) with |c| <= d <= alpha + offset, d - alpha integral.
std::vector<SweepCase> sweep_cases(const SweepSpec& spec);
bool reducible(const SweepCase& k);

// Throws BadInput for an unknown suite.
Report run_suite(const std::string& name, const SweepSpec& spec);

}  // namespace jacquet
