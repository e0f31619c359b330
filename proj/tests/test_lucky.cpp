#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "parkstat/lucky.hpp"
#include "parkstat/protocol.hpp"

using namespace parkstat;

namespace {

std::vector<BigInt> big_row(std::initializer_list<long> vals) {
  std::vector<BigInt> out;
  for (long v : vals) out.emplace_back(v);
  return out;
}

// Total branch weight, per count of cars that had to flip, over every
// preference vector in [n]^n on the given street. The totals are claimed
// constant in the heads probability; REQUIRE enforces that before the
// constants are returned.
std::vector<BigInt> street_unlucky_row(const protocol::Street& street, int n) {
  const PolyP heads_w = PolyP::variable();
  const PolyP tails_w(std::vector<BigRat>{BigRat(1), BigRat(-1)});
  std::vector<PolyP> acc(static_cast<std::size_t>(n));
  std::vector<int> prefs(static_cast<std::size_t>(n), 1);
  for (;;) {
    protocol::walk_branches(street, prefs, /*stop_on_exit=*/false,
                            [&](const protocol::BranchLeaf& leaf) {
                              PolyP w(BigRat(1));
                              for (int i = 0; i < leaf.heads; ++i) w *= heads_w;
                              for (int i = 0; i < leaf.tails; ++i) w *= tails_w;
                              acc[static_cast<std::size_t>(leaf.unlucky)] += w;
                            });
    int pos = n - 1;
    while (pos >= 0 && prefs[static_cast<std::size_t>(pos)] == n) {
      prefs[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++prefs[static_cast<std::size_t>(pos)];
  }
  std::vector<BigInt> row;
  for (const PolyP& total : acc) {
    REQUIRE(total.is_constant());
    REQUIRE(total.constant_value().get_den() == 1);
    row.push_back(total.constant_value().get_num());
  }
  return row;
}

// Classical parking: each car takes the first free spot at or beyond its
// preference; a car is lucky when that spot is the preference itself.
// Returns -1 when someone fails to park.
int classical_lucky_count(const std::vector<int>& prefs, int n) {
  std::vector<char> occ(static_cast<std::size_t>(n) + 1, 0);
  int lucky = 0;
  for (int pref : prefs) {
    int s = pref;
    while (s <= n && occ[static_cast<std::size_t>(s)]) ++s;
    if (s > n) return -1;
    occ[static_cast<std::size_t>(s)] = 1;
    if (s == pref) ++lucky;
  }
  return lucky;
}

}  // namespace

TEST_CASE("circular unlucky-count table goldens") {
  CHECK(lucky::unlucky_row_circular(3) == big_row({6, 8, 2}));
  CHECK(lucky::unlucky_row_circular(1) == big_row({1}));
  CHECK(lucky::unlucky_row_circular(2) == big_row({2, 1}));
  CHECK(lucky::unlucky_expected_circular(3, 1) == 8);
  // out-of-range counts carry no mass
  CHECK(lucky::unlucky_expected_circular(3, 3) == 0);
  CHECK(lucky::unlucky_expected_circular(3, -1) == 0);
}

TEST_CASE("circular rows: zero column is n!, rows sum to (n+1)^(n-1)") {
  for (int n = 1; n <= 10; ++n) {
    const auto row = lucky::unlucky_row_circular(n);
    CHECK(row[0] == factorial(static_cast<unsigned long>(n)));
    BigInt sum(0);
    for (const BigInt& v : row) sum += v;
    CHECK(sum == int_pow(BigInt(n + 1), static_cast<unsigned long>(n - 1)));
  }
}

TEST_CASE("one-way rows: goldens and n^n row sums") {
  CHECK(lucky::unlucky_row_linear(3) == big_row({6, 15, 6}));
  for (int n = 1; n <= 10; ++n) {
    const auto row = lucky::unlucky_row_linear(n);
    CHECK(row[0] == factorial(static_cast<unsigned long>(n)));
    BigInt sum(0);
    for (const BigInt& v : row) sum += v;
    CHECK(sum == int_pow(BigInt(n), static_cast<unsigned long>(n)));
  }
}

TEST_CASE("rows match direct elementary-symmetric subset sums") {
  // row[k] = n! * sum over k-subsets of the weights {(i-1)/(big-(i-1))}
  for (int n = 1; n <= 8; ++n) {
    for (bool circular : {true, false}) {
      const int big = circular ? n + 1 : n;
      const auto row = circular ? lucky::unlucky_row_circular(n)
                                : lucky::unlucky_row_linear(n);
      std::vector<BigRat> weights;
      for (int i = 1; i <= n; ++i) weights.push_back(make_rat(i - 1, big - (i - 1)));
      std::vector<BigRat> subset_sum(static_cast<std::size_t>(n), BigRat(0));
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        BigRat prod(1);
        int bits = 0;
        for (int i = 0; i < n; ++i)
          if (mask & (1u << i)) {
            prod *= weights[static_cast<std::size_t>(i)];
            ++bits;
          }
        if (bits < n) subset_sum[static_cast<std::size_t>(bits)] += prod;
      }
      const BigRat scale(factorial(static_cast<unsigned long>(n)));
      for (int k = 0; k < n; ++k) {
        CAPTURE(n);
        CAPTURE(circular);
        CAPTURE(k);
        CHECK(BigRat(row[static_cast<std::size_t>(k)]) ==
              scale * subset_sum[static_cast<std::size_t>(k)]);
      }
    }
  }
}

TEST_CASE("q-polynomial coefficients reproduce the circular rows") {
  CHECK(lucky::q_generating_polynomial(3) ==
        PolyQ(std::vector<BigInt>{BigInt(6), BigInt(8), BigInt(2)}));
  for (int n = 1; n <= 10; ++n) {
    const auto row = lucky::unlucky_row_circular(n);
    const PolyQ gen = lucky::q_generating_polynomial(n);
    for (int k = 0; k < n; ++k)
      CHECK(gen.coeff(k) == row[static_cast<std::size_t>(k)]);
    CHECK(gen.degree() <= n - 1);
  }
}

TEST_CASE("coefficient triangle rows are the published sequence") {
  const auto t = lucky::a220884_rows(5);
  REQUIRE(t.rows.size() == 6);
  CHECK(t.rows[0] == big_row({1}));
  CHECK(t.rows[1] == big_row({1, 0}));
  CHECK(t.rows[2] == big_row({2, 1, 0}));
  CHECK(t.rows[3] == big_row({6, 8, 2, 0}));
  CHECK(t.rows[4] == big_row({24, 58, 37, 6, 0}));
  CHECK(t.rows[5] == big_row({120, 444, 504, 204, 24, 0}));
}

TEST_CASE("weighted Pascal triangle goldens for four cars") {
  const auto t = lucky::weighted_pascal(4);
  REQUIRE(t.rows.size() == 5);
  CHECK(t.rows[0] == big_row({0}));
  CHECK(t.rows[1] == big_row({1, 0}));
  CHECK(t.rows[2] == big_row({4, 1, 0}));
  CHECK(t.rows[3] == big_row({12, 11, 2, 0}));
  CHECK(t.rows[4] == big_row({24, 58, 37, 6, 0}));
  // worked sample: value(3,1) = (5-2)*value(2,1) + 2*value(2,0) = 3 + 8
  CHECK(t.rows[3][1] == 11);
}

TEST_CASE("weighted Pascal rows sum to powers and end in the circular row") {
  for (int n = 2; n <= 8; ++n) {
    const auto t = lucky::weighted_pascal(n);
    REQUIRE(t.rows.size() == static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
      BigInt sum(0);
      for (const BigInt& v : t.rows[static_cast<std::size_t>(i)]) sum += v;
      CHECK(sum == int_pow(BigInt(n + 1), static_cast<unsigned long>(i - 1)));
    }
    const auto& last = t.rows[static_cast<std::size_t>(n)];
    const auto circ = lucky::unlucky_row_circular(n);
    REQUIRE(last.size() == circ.size() + 1);
    for (std::size_t k = 0; k < circ.size(); ++k) CHECK(last[k] == circ[k]);
    CHECK(last.back() == 0);
  }
}

TEST_CASE("protocol brute force confirms the circular table") {
  for (int n = 1; n <= 4; ++n) {
    const auto brute = lucky::unlucky_distribution_bruteforce(n, n, true);
    const auto row = lucky::unlucky_row_circular(n);
    REQUIRE(brute.size() == static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const PolyP& total = brute.at(k);
      REQUIRE(total.is_constant());  // the count is coin-blind
      CHECK(total.constant_value() == BigRat(row[static_cast<std::size_t>(k)]));
    }
  }
}

TEST_CASE("protocol brute force confirms the weighted Pascal rows") {
  const int n = 4;
  const auto t = lucky::weighted_pascal(n);
  for (int i = 1; i <= n; ++i) {
    const auto brute = lucky::unlucky_distribution_bruteforce(n, i, true);
    const auto& row = t.rows[static_cast<std::size_t>(i)];
    for (int k = 0; k <= i; ++k) {
      CAPTURE(i);
      CAPTURE(k);
      const BigRat got = k < i ? brute.at(k).constant_value() : BigRat(0);
      if (k < i) REQUIRE(brute.at(k).is_constant());
      CHECK(got == BigRat(row[static_cast<std::size_t>(k)]));
    }
  }
}

TEST_CASE("one-way row counts the full-circle run, not the exit-truncated line") {
  // On the 3-spot circle every [3]^3 run keeps all cars on the street and
  // the flip counts total (6, 15, 6) == unlucky_row_linear(3). Running the
  // same vectors on a true 3-spot line (cars can exit, later cars still
  // run) shifts one unit of mass: (6, 16, 5).
  const auto circle = street_unlucky_row(protocol::circular_street(3), 3);
  CHECK(circle == lucky::unlucky_row_linear(3));
  const auto line = street_unlucky_row(protocol::linear_street(3), 3);
  CHECK(line == big_row({6, 16, 5}));
  // both accountings cover all 27 preference vectors once
  BigInt total(0);
  for (const BigInt& v : line) total += v;
  CHECK(total == 27);
}

TEST_CASE("classical lucky generating polynomial") {
  // q prod_{i<n} [i + (n-i+1) q] at n=3: 2q + 8q^2 + 6q^3
  CHECK(lucky::classical_lucky_generating(3) ==
        PolyQ(std::vector<BigInt>{BigInt(0), BigInt(2), BigInt(8), BigInt(6)}));
  for (int n = 1; n <= 10; ++n)
    CHECK(lucky::classical_lucky_generating(n).eval(BigInt(1)) ==
          int_pow(BigInt(n + 1), static_cast<unsigned long>(n - 1)));
}

TEST_CASE("classical generating polynomial counts lucky cars exactly") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<BigInt> counts(static_cast<std::size_t>(n) + 1, BigInt(0));
    std::vector<int> prefs(static_cast<std::size_t>(n), 1);
    for (;;) {
      const int lucky = classical_lucky_count(prefs, n);
      if (lucky >= 0) ++counts[static_cast<std::size_t>(lucky)];
      int pos = n - 1;
      while (pos >= 0 && prefs[static_cast<std::size_t>(pos)] == n) {
        prefs[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++prefs[static_cast<std::size_t>(pos)];
    }
    const PolyQ gen = lucky::classical_lucky_generating(n);
    for (int k = 0; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(gen.coeff(k) == counts[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS((void)lucky::unlucky_row_circular(0), std::invalid_argument);
  CHECK_THROWS_AS((void)lucky::unlucky_row_linear(0), std::invalid_argument);
  CHECK_THROWS_AS((void)lucky::q_generating_polynomial(0), std::invalid_argument);
  CHECK_THROWS_AS((void)lucky::classical_lucky_generating(0),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)lucky::weighted_pascal(0), std::invalid_argument);
  CHECK_THROWS_AS((void)lucky::a220884_rows(-1), std::invalid_argument);
  CHECK_THROWS_AS((void)lucky::unlucky_distribution_bruteforce(3, 4, true),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)lucky::unlucky_distribution_bruteforce(3, 0, true),
                  std::invalid_argument);
}
