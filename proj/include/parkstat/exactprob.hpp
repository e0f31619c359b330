#pragma once

#include <map>
#include <vector>

#include "parkstat/poly.hpp"
#include "parkstat/protocol.hpp"

namespace parkstat::exactprob {

// Budgets for exhaustive enumeration. The CLI lets PARKSTAT_MAX_ENUM and
// --max-enum raise or lower the vector budgets.
struct EnumLimits {
  long long vector_budget = 10'000'000;  // n^m cap for totals and laws
  long long vacancy_budget = 1'000'000;  // (n+1)^n cap for the vacancy table
  int pref_budget = 20;                  // branch-enumeration length cap
};

// Counts coin branches by (heads, tails); h + t never exceeds the car
// count, and expanding sum c_{h,t} p^h (1-p)^t stays exact.
class CoinWeightGrid {
 public:
  explicit CoinWeightGrid(int max_flips);
  void add(int heads, int tails, unsigned long count = 1);
  void merge(const CoinWeightGrid& other);
  PolyP to_poly() const;
  bool empty() const;

 private:
  int side_;
  std::vector<BigInt> counts_;
};

// Exact probability, as a polynomial in the heads probability, that every
// car parks. Enumerates all coin branches of the one-flip protocol.
PolyP park_probability(const protocol::PreferenceVector& alpha,
                       const EnumLimits& limits = {});

// Sum of park_probability over all of [n]^m on a linear street with n
// spots. Work is split across threads on the leading preference; merges
// are exact, so results do not depend on the thread count.
PolyP total_pf_mass(int n, int m, const EnumLimits& limits = {},
                    int threads = 0);

// Exact conditional law of the last preference given that all n cars park
// on a linear street with n spots: P(a_n = j | success) =
// numerator[j] / denominator, both polynomials in p.
struct ConditionalLaw {
  std::map<int, PolyP> numerator;
  PolyP denominator;
};
ConditionalLaw last_pref_distribution_bruteforce(int n,
                                                 const EnumLimits& limits = {},
                                                 int threads = 0);

// entries[a][i] is the total branch weight over preference vectors in
// [n+1]^n with first preference a that leave spot i vacant on the circle
// with n+1 spots. Rows and columns sum to the constant (n+1)^(n-1) and the
// matrix is circulant; both are checked by tests, not assumed here.
struct VacancyTable {
  int n = 0;
  std::vector<std::vector<PolyP>> entries;  // 1-based, [0][*] unused
};
VacancyTable vacancy_table(int n, const EnumLimits& limits = {},
                           int threads = 0);

}  // namespace parkstat::exactprob
