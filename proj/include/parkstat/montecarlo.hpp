#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "parkstat/formulas.hpp"

namespace parkstat::montecarlo {

struct SimConfig {
  int n = 0;                  // linear street spots
  int m = 0;                  // cars; 0 means m = n
  double p = 0.5;             // heads probability
  std::uint64_t samples = 0;  // >= 1
  std::uint64_t seed = 0;
  int threads = 0;  // 0 means hardware concurrency
};

struct SimReport {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double success_rate = 0.0;
  double success_rate_stderr = 0.0;  // binomial
  // Counts of the last car's preference over succeeding trials; index j-1.
  std::vector<std::uint64_t> histogram;
  double conditional_mean = 0.0;
  double conditional_mean_stderr = 0.0;  // sample sd over sqrt(successes)
};

// splitmix-style finalizer; the whole stream contract reduces to it.
std::uint64_t mix64(std::uint64_t z);

// Counter-based stream: the value is a pure function of
// (seed, trial, draw), so any partition of trials across threads replays
// identical randomness.
std::uint64_t stream_value(std::uint64_t seed, std::uint64_t trial,
                           std::uint64_t draw);

// Draw interface for one trial. Integer draws are rejection-sampled, so
// they are exactly uniform; rejections advance the draw counter.
class TrialStream {
 public:
  TrialStream(std::uint64_t seed, std::uint64_t trial);
  std::uint64_t next_u64();
  double next_unit();            // [0, 1), 53 bits
  int uniform_int(int n);        // 1..n
  bool bernoulli(double p);

 private:
  std::uint64_t key_;
  std::uint64_t draw_ = 0;
};

// Samples preference vectors uniformly from [n]^m on a linear street with
// n spots; coins are flipped lazily, one per unlucky car. Reports are
// exact-count aggregates, so they are independent of the thread count.
SimReport run_simulation(const SimConfig& cfg);

// One run per grid point with a seed derived from (cfg.seed, index).
std::vector<std::pair<double, SimReport>> sweep_p(
    const SimConfig& cfg, const std::vector<double>& p_grid);

// Conditional histogram against the exact law. cfg.p is promoted to the
// exact dyadic rational the sampler actually uses, so the comparison has
// no model bias; requires m == n.
struct HistogramCompare {
  std::vector<double> empirical;  // normalized; empty when no successes
  formulas::RationalDist exact;
  double tv_gap = 0.0;
};
HistogramCompare histogram_vs_exact(const SimConfig& cfg);

}  // namespace parkstat::montecarlo
