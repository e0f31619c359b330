#include "parkstat/lucky.hpp"

#include <stdexcept>
#include <string>

#include "parkstat/exactprob.hpp"
#include "parkstat/protocol.hpp"

namespace parkstat::lucky {

namespace {

// n! e_k(w_2..w_n) for all k, where e_k are the elementary symmetric
// functions of weights (i-1)/(big - (i-1)). Shared by the circular
// (big = n+1) and one-way (big = n) tables; the common denominator of the
// e_k divides the n! scale, so the scaled values are integers.
std::vector<BigInt> scaled_symmetric_row(int n, int big, const BigInt& scale) {
  std::vector<BigRat> e(static_cast<std::size_t>(n), BigRat(0));
  e[0] = 1;
  for (int i = 2; i <= n; ++i) {
    const BigRat w = make_rat(i - 1, big - (i - 1));
    for (int k = std::min(i - 1, n - 1); k >= 1; --k)
      e[static_cast<std::size_t>(k)] += w * e[static_cast<std::size_t>(k) - 1];
  }
  std::vector<BigInt> row(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const BigRat scaled = BigRat(scale) * e[static_cast<std::size_t>(k)];
    if (scaled.get_den() != 1)
      throw std::logic_error("scaled symmetric value not integral");
    row[static_cast<std::size_t>(k)] = scaled.get_num();
  }
  return row;
}

}  // namespace

std::vector<BigInt> unlucky_row_circular(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  return scaled_symmetric_row(n, n + 1, factorial(static_cast<unsigned long>(n)));
}

BigInt unlucky_expected_circular(int n, int k) {
  if (k < 0 || k >= n) return BigInt(0);
  return unlucky_row_circular(n)[static_cast<std::size_t>(k)];
}

std::vector<BigInt> unlucky_row_linear(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  return scaled_symmetric_row(n, n, factorial(static_cast<unsigned long>(n)));
}

BigInt unlucky_expected_linear(int n, int k) {
  if (k < 0 || k >= n) return BigInt(0);
  return unlucky_row_linear(n)[static_cast<std::size_t>(k)];
}

PolyQ q_generating_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  PolyQ prod(BigInt(1));
  for (int k = 2; k <= n; ++k)
    prod *= PolyQ(std::vector<BigInt>{BigInt(k), BigInt(n + 1 - k)});
  return prod;
}

PolyQ classical_lucky_generating(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  PolyQ prod = PolyQ::variable();
  for (int i = 1; i <= n - 1; ++i)
    prod *= PolyQ(std::vector<BigInt>{BigInt(i), BigInt(n - i + 1)});
  return prod;
}

TriangleTable weighted_pascal(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  TriangleTable t;
  t.rows.reserve(static_cast<std::size_t>(n) + 1);
  t.rows.push_back({BigInt(0)});            // display convention
  t.rows.push_back({BigInt(1), BigInt(0)});
  for (int i = 2; i <= n; ++i) {
    const auto& prev = t.rows.back();
    std::vector<BigInt> row(static_cast<std::size_t>(i) + 1, BigInt(0));
    auto at = [&](int k) -> BigInt {
      if (k < 0 || k >= static_cast<int>(prev.size())) return BigInt(0);
      return prev[static_cast<std::size_t>(k)];
    };
    for (int k = 0; k <= i; ++k)
      row[static_cast<std::size_t>(k)] =
          BigInt((n + 1) - (i - 1)) * at(k) + BigInt(i - 1) * at(k - 1);
    t.rows.push_back(std::move(row));
  }
  return t;
}

TriangleTable a220884_rows(int max_i) {
  if (max_i < 0) throw std::invalid_argument("need max_i >= 0");
  TriangleTable t;
  t.rows.reserve(static_cast<std::size_t>(max_i) + 1);
  t.rows.push_back({BigInt(1)});
  for (int i = 1; i <= max_i; ++i) {
    std::vector<BigInt> row = q_generating_polynomial(i).coeffs();
    row.push_back(BigInt(0));
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::map<int, PolyP> unlucky_distribution_bruteforce(int n, int i,
                                                     bool fixed_first) {
  if (n < 1 || i < 1 || i > n)
    throw std::invalid_argument("need 1 <= i <= n");
  const protocol::Street street = protocol::circular_street(n + 1);
  std::vector<exactprob::CoinWeightGrid> by_unlucky(
      static_cast<std::size_t>(i), exactprob::CoinWeightGrid(i));
  std::vector<int> prefs(static_cast<std::size_t>(i), 1);
  const int lead_max = fixed_first ? 1 : n + 1;
  for (;;) {
    protocol::walk_branches(street, prefs, /*stop_on_exit=*/false,
                            [&](const protocol::BranchLeaf& leaf) {
                              by_unlucky[static_cast<std::size_t>(leaf.unlucky)]
                                  .add(leaf.heads, leaf.tails);
                            });
    int pos = i - 1;
    while (pos >= 0) {
      const int cap = pos == 0 ? lead_max : n + 1;
      if (prefs[static_cast<std::size_t>(pos)] < cap) break;
      prefs[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++prefs[static_cast<std::size_t>(pos)];
  }
  std::map<int, PolyP> out;
  for (int k = 0; k < i; ++k)
    out.emplace(k, by_unlucky[static_cast<std::size_t>(k)].to_poly());
  return out;
}

}  // namespace parkstat::lucky
