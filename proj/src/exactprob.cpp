#include "parkstat/exactprob.hpp"

#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace parkstat::exactprob {

namespace {

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// n^m, guarded by the enumeration budget.
long long checked_count(int base, int m, long long budget, const char* what) {
  long long total = 1;
  for (int i = 0; i < m; ++i) {
    if (total > budget / base)
      throw SizeLimitError(std::string(what) + ": " + std::to_string(base) +
                           "^" + std::to_string(m) + " exceeds budget " +
                           std::to_string(budget));
    total *= base;
  }
  if (total > budget)
    throw SizeLimitError(std::string(what) + ": " + std::to_string(base) + "^" +
                         std::to_string(m) + " exceeds budget " +
                         std::to_string(budget));
  return total;
}

// Runs body(prefs, acc) for every vector in [base]^m with prefs[0] == lead.
// The suffix odometer walks positions 1..m-1.
template <typename Acc, typename Body>
void enumerate_with_lead(int base, int m, int lead, Acc& acc, Body&& body) {
  std::vector<int> prefs(static_cast<std::size_t>(m), 1);
  prefs[0] = lead;
  for (;;) {
    body(prefs, acc);
    int pos = m - 1;
    while (pos >= 1 && prefs[pos] == base) prefs[pos--] = 1;
    if (pos < 1) break;
    ++prefs[pos];
  }
}

// Partitions [base]^m on the first coordinate: each leading value is a work
// unit, workers pull units from a shared counter, and the per-unit partial
// accumulators are merged in leading-value order. Exact arithmetic plus the
// fixed merge order make the result independent of the thread count.
template <typename Acc, typename Body, typename Merge>
Acc enumerate_partitioned(int base, int m, int threads, Acc zero, Body&& body,
                          Merge&& merge) {
  std::vector<Acc> parts(static_cast<std::size_t>(base), zero);
  std::atomic<int> next_unit{0};
  auto work = [&]() {
    for (;;) {
      const int unit = next_unit.fetch_add(1);
      if (unit >= base) return;
      enumerate_with_lead(base, m, unit + 1, parts[unit], body);
    }
  };
  const int pool = std::min(resolve_threads(threads), base);
  if (pool <= 1) {
    work();
  } else {
    std::vector<std::thread> crew;
    crew.reserve(static_cast<std::size_t>(pool));
    for (int i = 0; i < pool; ++i) crew.emplace_back(work);
    for (auto& t : crew) t.join();
  }
  Acc total = std::move(zero);
  for (auto& part : parts) merge(total, part);
  return total;
}

}  // namespace

CoinWeightGrid::CoinWeightGrid(int max_flips)
    : side_(max_flips + 1),
      counts_(static_cast<std::size_t>(side_) * side_) {}

void CoinWeightGrid::add(int heads, int tails, unsigned long count) {
  counts_[static_cast<std::size_t>(heads) * side_ + tails] += count;
}

void CoinWeightGrid::merge(const CoinWeightGrid& other) {
  if (other.side_ != side_)
    throw std::invalid_argument("merging coin grids of different sizes");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
}

bool CoinWeightGrid::empty() const {
  for (const auto& c : counts_)
    if (c != 0) return false;
  return true;
}

PolyP CoinWeightGrid::to_poly() const {
  // sum over (h,t) of c_{h,t} p^h (1-p)^t, expanded exactly:
  // (1-p)^t contributes C(t,i) (-1)^i p^i.
  std::vector<BigInt> acc(static_cast<std::size_t>(side_), BigInt(0));
  for (int h = 0; h < side_; ++h) {
    for (int t = 0; t + h < side_; ++t) {
      const BigInt& c = counts_[static_cast<std::size_t>(h) * side_ + t];
      if (c == 0) continue;
      for (int i = 0; i <= t; ++i) {
        BigInt term = c * binomial(static_cast<unsigned long>(t),
                                   static_cast<unsigned long>(i));
        if (i % 2) term = -term;
        acc[static_cast<std::size_t>(h + i)] += term;
      }
    }
  }
  std::vector<BigRat> coeffs;
  coeffs.reserve(acc.size());
  for (auto& v : acc) coeffs.emplace_back(v);
  return PolyP(std::move(coeffs));
}

PolyP park_probability(const protocol::PreferenceVector& alpha,
                       const EnumLimits& limits) {
  protocol::validate(alpha);
  const int m = static_cast<int>(alpha.prefs.size());
  if (m > limits.pref_budget)
    throw SizeLimitError("branch enumeration over " + std::to_string(m) +
                         " cars exceeds budget " +
                         std::to_string(limits.pref_budget));
  CoinWeightGrid grid(m);
  protocol::walk_branches(alpha.street, alpha.prefs, /*stop_on_exit=*/true,
                          [&](const protocol::BranchLeaf& leaf) {
                            if (leaf.success) grid.add(leaf.heads, leaf.tails);
                          });
  return grid.to_poly();
}

PolyP total_pf_mass(int n, int m, const EnumLimits& limits, int threads) {
  if (n < 1 || m < 1 || m > n)
    throw std::invalid_argument("need 1 <= m <= n");
  checked_count(n, m, limits.vector_budget, "total mass enumeration");
  const protocol::Street street = protocol::linear_street(n);
  auto body = [&](const std::vector<int>& prefs, CoinWeightGrid& acc) {
    protocol::walk_branches(street, prefs, /*stop_on_exit=*/true,
                            [&](const protocol::BranchLeaf& leaf) {
                              if (leaf.success) acc.add(leaf.heads, leaf.tails);
                            });
  };
  auto merge = [](CoinWeightGrid& into, const CoinWeightGrid& from) {
    into.merge(from);
  };
  CoinWeightGrid total = enumerate_partitioned(n, m, threads,
                                               CoinWeightGrid(m), body, merge);
  return total.to_poly();
}

ConditionalLaw last_pref_distribution_bruteforce(int n,
                                                 const EnumLimits& limits,
                                                 int threads) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  checked_count(n, n, limits.vector_budget, "conditional law enumeration");
  const protocol::Street street = protocol::linear_street(n);
  using Acc = std::vector<CoinWeightGrid>;  // bucket by last preference
  Acc zero(static_cast<std::size_t>(n), CoinWeightGrid(n));
  auto body = [&](const std::vector<int>& prefs, Acc& acc) {
    CoinWeightGrid& bucket = acc[static_cast<std::size_t>(prefs.back()) - 1];
    protocol::walk_branches(street, prefs, /*stop_on_exit=*/true,
                            [&](const protocol::BranchLeaf& leaf) {
                              if (leaf.success)
                                bucket.add(leaf.heads, leaf.tails);
                            });
  };
  auto merge = [](Acc& into, const Acc& from) {
    for (std::size_t i = 0; i < into.size(); ++i) into[i].merge(from[i]);
  };
  Acc total = enumerate_partitioned(n, n, threads, zero, body, merge);
  ConditionalLaw law;
  PolyP denom;
  for (int j = 1; j <= n; ++j) {
    PolyP numer = total[static_cast<std::size_t>(j) - 1].to_poly();
    denom += numer;
    law.numerator.emplace(j, std::move(numer));
  }
  law.denominator = std::move(denom);
  return law;
}

VacancyTable vacancy_table(int n, const EnumLimits& limits, int threads) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  const int spots = n + 1;
  checked_count(spots, n, limits.vacancy_budget, "vacancy enumeration");
  const protocol::Street street = protocol::circular_street(spots);
  // acc[a-1][i-1] collects weights for first preference a, vacant spot i.
  using Acc = std::vector<std::vector<CoinWeightGrid>>;
  Acc zero(static_cast<std::size_t>(spots),
           std::vector<CoinWeightGrid>(static_cast<std::size_t>(spots),
                                       CoinWeightGrid(n)));
  auto body = [&](const std::vector<int>& prefs, Acc& acc) {
    auto& row = acc[static_cast<std::size_t>(prefs.front()) - 1];
    protocol::walk_branches(
        street, prefs, /*stop_on_exit=*/false,
        [&](const protocol::BranchLeaf& leaf) {
          for (int s = 1; s <= spots; ++s) {
            if (!leaf.occupied[s]) {
              row[static_cast<std::size_t>(s) - 1].add(leaf.heads, leaf.tails);
              break;  // n cars on n+1 spots leave exactly one vacancy
            }
          }
        });
  };
  auto merge = [](Acc& into, const Acc& from) {
    for (std::size_t a = 0; a < into.size(); ++a)
      for (std::size_t i = 0; i < into[a].size(); ++i)
        into[a][i].merge(from[a][i]);
  };
  Acc total = enumerate_partitioned(spots, n, threads, zero, body, merge);
  VacancyTable table;
  table.n = n;
  table.entries.assign(static_cast<std::size_t>(spots) + 1, {});
  for (int a = 1; a <= spots; ++a) {
    auto& row = table.entries[static_cast<std::size_t>(a)];
    row.resize(static_cast<std::size_t>(spots) + 1);
    for (int i = 1; i <= spots; ++i)
      row[static_cast<std::size_t>(i)] =
          total[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(i) - 1]
              .to_poly();
  }
  return table;
}

}  // namespace parkstat::exactprob
