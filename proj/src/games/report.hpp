#pragma once

#include <string>
#include <utility>

#include "../common/bytestream.hpp"

namespace cosetlab::games {

// Monte Carlo outcome of a security game. Voided trials are protocol
// violations; they are excluded from win_rate but reported.
struct GameReport {
  std::string game_id;
  int trials = 0;
  int wins = 0;
  int voided = 0;
  double win_rate = 0.0;           // wins / (trials - voided)
  std::pair<double, double> ci95;  // exact binomial (Clopper-Pearson)
  std::string trace_json;          // empty unless tracing was requested

  bool ci_contains(double p) const { return ci95.first <= p && p <= ci95.second; }
};

// Exact two-sided binomial confidence interval via bisection on the
// binomial tail. wins = 0 or n pin the corresponding endpoint at 0 or 1.
std::pair<double, double> clopper_pearson(int wins, int n, double confidence = 0.95);

GameReport make_report(std::string game_id, int trials, int wins, int voided,
                       std::string trace_json = {});

std::string report_json(const GameReport& r);

}  // namespace cosetlab::games
