#include "parkstat/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "parkstat/protocol.hpp"

namespace parkstat::montecarlo {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kDrawStep = 0xd1b54a32d192ed03ULL;
constexpr std::uint64_t kSweepStep = 0xa0761d6478bd642fULL;

struct Tally {
  std::uint64_t successes = 0;
  std::vector<std::uint64_t> histogram;
  std::uint64_t sum = 0;
  std::uint64_t sum_sq = 0;

  explicit Tally(int n) : histogram(static_cast<std::size_t>(n), 0) {}

  void merge(const Tally& o) {
    successes += o.successes;
    for (std::size_t i = 0; i < histogram.size(); ++i)
      histogram[i] += o.histogram[i];
    sum += o.sum;
    sum_sq += o.sum_sq;
  }
};

void check_config(const SimConfig& cfg, int m) {
  if (cfg.n < 1) throw std::invalid_argument("need n >= 1");
  if (m < 1 || m > cfg.n) throw std::invalid_argument("need 1 <= m <= n");
  if (cfg.samples < 1) throw std::invalid_argument("need samples >= 1");
  if (!(cfg.p >= 0.0 && cfg.p <= 1.0))
    throw std::invalid_argument("p must lie in [0, 1]");
}

}  // namespace

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

std::uint64_t stream_value(std::uint64_t seed, std::uint64_t trial,
                           std::uint64_t draw) {
  const std::uint64_t key = mix64(seed + kGolden * (trial + 1));
  return mix64(key + kDrawStep * (draw + 1));
}

TrialStream::TrialStream(std::uint64_t seed, std::uint64_t trial)
    : key_(mix64(seed + kGolden * (trial + 1))) {}

std::uint64_t TrialStream::next_u64() {
  return mix64(key_ + kDrawStep * (++draw_));
}

double TrialStream::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

int TrialStream::uniform_int(int n) {
  const std::uint64_t span = static_cast<std::uint64_t>(n);
  const std::uint64_t cutoff = (0 - span) % span;  // 2^64 mod n
  for (;;) {
    const std::uint64_t v = next_u64();
    if (v >= cutoff) return static_cast<int>(v % span) + 1;
  }
}

bool TrialStream::bernoulli(double p) { return next_unit() < p; }

SimReport run_simulation(const SimConfig& cfg) {
  const int m = cfg.m == 0 ? cfg.n : cfg.m;
  check_config(cfg, m);
  int threads = cfg.threads;
  if (threads <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    threads = hw > 0 ? static_cast<int>(hw) : 1;
  }
  if (static_cast<std::uint64_t>(threads) > cfg.samples)
    threads = static_cast<int>(cfg.samples);

  auto run_range = [&](std::uint64_t lo, std::uint64_t hi, Tally& tally) {
    protocol::PreferenceVector alpha;
    alpha.street = protocol::linear_street(cfg.n);
    alpha.prefs.resize(static_cast<std::size_t>(m));
    for (std::uint64_t trial = lo; trial < hi; ++trial) {
      TrialStream stream(cfg.seed, trial);
      for (int i = 0; i < m; ++i)
        alpha.prefs[static_cast<std::size_t>(i)] = stream.uniform_int(cfg.n);
      const protocol::ParkingResult result = protocol::park(alpha, [&] {
        return stream.bernoulli(cfg.p) ? protocol::Coin::Heads
                                       : protocol::Coin::Tails;
      });
      if (!result.success) continue;
      ++tally.successes;
      const std::uint64_t last =
          static_cast<std::uint64_t>(alpha.prefs[static_cast<std::size_t>(m) - 1]);
      ++tally.histogram[last - 1];
      tally.sum += last;
      tally.sum_sq += last * last;
    }
  };

  // Contiguous trial ranges per worker; the per-trial streams make the
  // randomness independent of the partition and the integer tallies merge
  // exactly, so any thread count produces the same report.
  std::vector<Tally> parts(static_cast<std::size_t>(threads), Tally(cfg.n));
  if (threads == 1) {
    run_range(0, cfg.samples, parts[0]);
  } else {
    std::vector<std::thread> crew;
    crew.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
      const std::uint64_t lo =
          cfg.samples * static_cast<std::uint64_t>(w) / threads;
      const std::uint64_t hi =
          cfg.samples * (static_cast<std::uint64_t>(w) + 1) / threads;
      crew.emplace_back(run_range, lo, hi, std::ref(parts[static_cast<std::size_t>(w)]));
    }
    for (auto& t : crew) t.join();
  }
  Tally total(cfg.n);
  for (const Tally& part : parts) total.merge(part);

  SimReport report;
  report.trials = cfg.samples;
  report.successes = total.successes;
  report.histogram = std::move(total.histogram);
  const double trials = static_cast<double>(cfg.samples);
  const double rate = static_cast<double>(total.successes) / trials;
  report.success_rate = rate;
  report.success_rate_stderr = std::sqrt(rate * (1.0 - rate) / trials);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (total.successes == 0) {
    report.conditional_mean = nan;
    report.conditional_mean_stderr = nan;
  } else {
    const double k = static_cast<double>(total.successes);
    const double mean = static_cast<double>(total.sum) / k;
    report.conditional_mean = mean;
    if (total.successes == 1) {
      report.conditional_mean_stderr = nan;
    } else {
      const double var =
          (static_cast<double>(total.sum_sq) - k * mean * mean) / (k - 1.0);
      report.conditional_mean_stderr = std::sqrt(std::max(var, 0.0) / k);
    }
  }
  return report;
}

std::vector<std::pair<double, SimReport>> sweep_p(
    const SimConfig& cfg, const std::vector<double>& p_grid) {
  std::vector<std::pair<double, SimReport>> rows;
  rows.reserve(p_grid.size());
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    SimConfig point = cfg;
    point.p = p_grid[i];
    point.seed = mix64(cfg.seed + kSweepStep * (i + 1));
    rows.emplace_back(p_grid[i], run_simulation(point));
  }
  return rows;
}

HistogramCompare histogram_vs_exact(const SimConfig& cfg) {
  const int m = cfg.m == 0 ? cfg.n : cfg.m;
  if (m != cfg.n)
    throw std::invalid_argument("histogram comparison needs m == n");
  HistogramCompare out;
  const SimReport report = run_simulation(cfg);
  // The sampler compares 53-bit uniforms against the double p, so the
  // model it simulates has exactly the dyadic parameter mpq(p).
  out.exact = formulas::last_pref_distribution(cfg.n, BigRat(cfg.p));
  if (report.successes == 0) {
    out.tv_gap = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  out.empirical.resize(report.histogram.size());
  const double k = static_cast<double>(report.successes);
  double gap = 0.0;
  for (std::size_t i = 0; i < report.histogram.size(); ++i) {
    out.empirical[i] = static_cast<double>(report.histogram[i]) / k;
    gap += std::abs(out.empirical[i] - rat_double(out.exact.masses[i]));
  }
  out.tv_gap = gap / 2.0;
  return out;
}

}  // namespace parkstat::montecarlo
