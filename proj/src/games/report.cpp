#include "report.hpp"

#include <cmath>

#include <json.hpp>

#include "../common/errors.hpp"

namespace cosetlab::games {

namespace {

// Pr[Binomial(n, p) >= k].
double binomial_upper_tail(int n, double p, int k) {
  if (k <= 0) return 1.0;
  if (k > n) return 0.0;
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  double total = 0;
  double lp = std::log(p), lq = std::log1p(-p);
  for (int i = k; i <= n; ++i)
    total += std::exp(std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0) +
                      i * lp + (n - i) * lq);
  return std::min(total, 1.0);
}

}  // namespace

std::pair<double, double> clopper_pearson(int wins, int n, double confidence) {
  if (n < 1 || wins < 0 || wins > n) throw ParameterError("invalid binomial counts");
  double alpha = 1.0 - confidence;
  auto solve = [n](auto f, double target) {
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
      double mid = (lo + hi) / 2;
      (f(mid) < target ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
  };
  // Lower bound: Pr[X >= wins | p] = alpha/2; upper: Pr[X <= wins | p] = alpha/2.
  double lo = wins == 0 ? 0.0
                        : solve([&](double p) { return binomial_upper_tail(n, p, wins); },
                                alpha / 2);
  double hi = wins == n ? 1.0
                        : solve([&](double p) { return binomial_upper_tail(n, p, wins + 1); },
                                1.0 - alpha / 2);
  return {lo, hi};
}

GameReport make_report(std::string game_id, int trials, int wins, int voided,
                       std::string trace_json) {
  GameReport r;
  r.game_id = std::move(game_id);
  r.trials = trials;
  r.wins = wins;
  r.voided = voided;
  int counted = trials - voided;
  r.win_rate = counted > 0 ? double(wins) / counted : 0.0;
  r.ci95 = counted > 0 ? clopper_pearson(wins, counted) : std::pair<double, double>{0.0, 1.0};
  r.trace_json = std::move(trace_json);
  return r;
}

std::string report_json(const GameReport& r) {
  nlohmann::json j{{"game_id", r.game_id}, {"trials", r.trials},
                   {"wins", r.wins},       {"voided", r.voided},
                   {"win_rate", r.win_rate},
                   {"ci95", {r.ci95.first, r.ci95.second}}};
  if (!r.trace_json.empty()) j["trace"] = nlohmann::json::parse(r.trace_json);
  return j.dump(2);
}

}  // namespace cosetlab::games
