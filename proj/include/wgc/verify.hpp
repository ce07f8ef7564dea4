#pragma once

#include "wgc/linalg.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace wgc {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;
  double millis = 0;
};

struct VerifyOptions {
  // Small-N Gram matrices are singular by design; the suite runs on the span.
  InverseMode mode = InverseMode::PseudoInverse;
  int hyper_n_lo = 3, hyper_n_hi = 7;
  int hyper_l_lo = 1, hyper_l_hi = 5;
  std::size_t max_k = 8;
};

// Criterion ids for a named suite: core, laws, twist, hyperspherical,
// spaces, hypergeom, all.
std::vector<int> suite_criteria(std::string_view suite);

// Runs the selected acceptance criteria (all ten when empty).
std::vector<CheckResult> run_acceptance(const VerifyOptions& opts,
                                        const std::vector<int>& criteria = {});

}  // namespace wgc
