#pragma once

#include <string>

#include "api.hpp"

namespace cosetlab::measure {

// One numerically verified measurement lemma. Slack is the margin by
// which the stated inequality holds (negative = violated); for
// equality-type statements slack is minus the largest deviation.
struct LemmaReport {
  std::string lemma_id;
  int instances;
  double worst_slack;
  bool pass;  // worst_slack >= -1e-7
};

inline constexpr double kLemmaSlackFloor = -1e-7;

// Runs the four lemma checks over `trials` random instances each, with
// register dimensions at most `dims` (clamped to [2, 8]).
//   qub         : union bound for commuting projectors
//   gentle      : gentle measurement lemma
//   impl-indep  : implementation independence of bipartite measurements
//   simul-proj  : simultaneous projection bound
std::vector<LemmaReport> lemma_suite(uint64_t seed, int dims, int trials);

std::string lemma_reports_json(const std::vector<LemmaReport>& reports);

}  // namespace cosetlab::measure
