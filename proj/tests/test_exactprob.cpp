#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "parkstat/errors.hpp"
#include "parkstat/exactprob.hpp"
#include "parkstat/protocol.hpp"
#include "three_car_goldens.hpp"

using namespace parkstat;

namespace {

protocol::PreferenceVector on_line(std::vector<int> prefs, int spots) {
  return {std::move(prefs), protocol::linear_street(spots)};
}

}  // namespace

TEST_CASE("coin weight grids expand to exact polynomials") {
  exactprob::CoinWeightGrid grid(2);
  CHECK(grid.empty());
  grid.add(1, 0);  // p
  grid.add(1, 1);  // p(1-p)
  grid.add(0, 1);  // 1-p
  CHECK_FALSE(grid.empty());
  // p + p(1-p) + (1-p) = 1 + p - p^2
  CHECK(grid.to_poly().coeffs() ==
        std::vector<BigRat>{BigRat(1), BigRat(1), BigRat(-1)});
  exactprob::CoinWeightGrid other(2);
  other.add(2, 0, 3);  // 3 p^2
  grid.merge(other);
  CHECK(grid.to_poly().coeffs() ==
        std::vector<BigRat>{BigRat(1), BigRat(1), BigRat(2)});
}

TEST_CASE("every n=3 parking probability matches the golden table") {
  PolyP sum;
  for (const auto& entry : testdata::three_car_cases()) {
    const PolyP expected = testdata::poly_from(entry.coeffs);
    const PolyP got = exactprob::park_probability(on_line(entry.prefs, 3));
    CAPTURE(entry.prefs[0]);
    CAPTURE(entry.prefs[1]);
    CAPTURE(entry.prefs[2]);
    CHECK(got == expected);
    sum += got;
  }
  CHECK(sum == PolyP{BigRat(16)});  // (3+1)^(3-1), independent of p
}

TEST_CASE("probability polynomials respect the street mirror symmetry") {
  for (const auto& entry : testdata::three_car_cases()) {
    std::vector<int> mirrored;
    for (int s : entry.prefs) mirrored.push_back(3 + 1 - s);
    const PolyP straight = exactprob::park_probability(on_line(entry.prefs, 3));
    const PolyP flipped = exactprob::park_probability(on_line(mirrored, 3));
    CHECK(flipped == straight.reflected());
  }
}

TEST_CASE("total mass is constant in p for full streets") {
  for (int n = 1; n <= 5; ++n) {
    const PolyP mass = exactprob::total_pf_mass(n, n);
    const BigInt expected =
        int_pow(BigInt(n + 1), static_cast<unsigned long>(n - 1));
    CHECK(mass == PolyP{BigRat(expected)});
  }
}

TEST_CASE("total mass for partial streets follows (n+1-m)(n+1)^(m-1)") {
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= n; ++m) {
      const PolyP mass = exactprob::total_pf_mass(n, m);
      const BigInt expected =
          BigInt(n + 1 - m) *
          int_pow(BigInt(n + 1), static_cast<unsigned long>(m - 1));
      CAPTURE(n);
      CAPTURE(m);
      CHECK(mass == PolyP{BigRat(expected)});
    }
  CHECK(exactprob::total_pf_mass(4, 2) == PolyP{BigRat(15)});
}

TEST_CASE("total mass is deterministic across thread counts") {
  const PolyP serial = exactprob::total_pf_mass(4, 4, {}, 1);
  const PolyP threaded = exactprob::total_pf_mass(4, 4, {}, 3);
  CHECK(serial == threaded);
}

TEST_CASE("conditional law of the last preference at n=2") {
  const auto law = exactprob::last_pref_distribution_bruteforce(2);
  // masses (1+p)/3 and (2-p)/3 over denominator 3
  CHECK(law.denominator == PolyP{BigRat(3)});
  CHECK(law.numerator.at(1).coeffs() ==
        std::vector<BigRat>{BigRat(1), BigRat(1)});
  CHECK(law.numerator.at(2).coeffs() ==
        std::vector<BigRat>{BigRat(2), BigRat(-1)});
}

TEST_CASE("conditional law at n=3, p=1/2 gives the 11/32, 10/32, 11/32 split") {
  const auto law = exactprob::last_pref_distribution_bruteforce(3);
  const BigRat half(1, 2);
  const BigRat den = law.denominator.eval(half);
  CHECK(law.numerator.at(1).eval(half) / den == make_rat(11, 32));
  CHECK(law.numerator.at(2).eval(half) / den == make_rat(10, 32));
  CHECK(law.numerator.at(3).eval(half) / den == make_rat(11, 32));
  // numerators sum to the denominator identically in p
  PolyP total;
  for (const auto& [j, poly] : law.numerator) total += poly;
  CHECK(total == law.denominator);
}

TEST_CASE("parking on a circle is certain whenever a spot stays free") {
  std::vector<int> prefs(3);
  for (int spots : {4, 5}) {
    for (prefs[0] = 1; prefs[0] <= spots; ++prefs[0])
      for (prefs[1] = 1; prefs[1] <= spots; ++prefs[1])
        for (prefs[2] = 1; prefs[2] <= spots; ++prefs[2]) {
          const PolyP poly = exactprob::park_probability(
              {prefs, protocol::circular_street(spots)});
          CHECK(poly == PolyP{BigRat(1)});
        }
  }
}

TEST_CASE("vacancy weights on the 3-circle match the golden row") {
  const auto table = exactprob::vacancy_table(2);
  REQUIRE(table.n == 2);
  const PolyP zero;
  const PolyP one_plus_p(std::vector<BigRat>{BigRat(1), BigRat(1)});
  const PolyP two_minus_p(std::vector<BigRat>{BigRat(2), BigRat(-1)});
  CHECK(table.entries[1][1] == zero);
  CHECK(table.entries[1][2] == two_minus_p);
  CHECK(table.entries[1][3] == one_plus_p);
}

TEST_CASE("vacancy tables are circulant with constant line sums") {
  for (int n : {2, 3}) {
    const auto table = exactprob::vacancy_table(n);
    const int spots = n + 1;
    const PolyP row_total{BigRat(
        int_pow(BigInt(spots), static_cast<unsigned long>(n - 1)))};
    for (int a = 1; a <= spots; ++a) {
      PolyP row_sum, col_sum;
      for (int i = 1; i <= spots; ++i) {
        row_sum += table.entries[static_cast<std::size_t>(a)]
                                [static_cast<std::size_t>(i)];
        col_sum += table.entries[static_cast<std::size_t>(i)]
                                [static_cast<std::size_t>(a)];
        // shifting both indices by one spot leaves the weight unchanged
        const int a2 = a % spots + 1;
        const int i2 = i % spots + 1;
        CHECK(table.entries[static_cast<std::size_t>(a)]
                           [static_cast<std::size_t>(i)] ==
              table.entries[static_cast<std::size_t>(a2)]
                           [static_cast<std::size_t>(i2)]);
      }
      CHECK(row_sum == row_total);
      CHECK(col_sum == row_total);
    }
  }
}

TEST_CASE("a full linear street parks exactly when the circle spares the extra spot") {
  // classical circle argument, branch by branch at p-level: summing the
  // vacancy-(n+1) weights over [n+1]^n restricted to prefs in [n]^n equals
  // the total parking mass on the line
  for (int n : {2, 3}) {
    PolyP circle_mass;
    std::vector<int> prefs(static_cast<std::size_t>(n), 1);
    const auto street = protocol::circular_street(n + 1);
    for (;;) {
      // weight of branches leaving n+1 vacant
      exactprob::CoinWeightGrid grid(n);
      protocol::walk_branches(street, prefs, /*stop_on_exit=*/false,
                              [&](const protocol::BranchLeaf& leaf) {
                                if (!leaf.occupied[static_cast<std::size_t>(
                                        n + 1)])
                                  grid.add(leaf.heads, leaf.tails);
                              });
      if (!grid.empty()) circle_mass += grid.to_poly();
      int pos = n - 1;
      while (pos >= 0 && prefs[static_cast<std::size_t>(pos)] == n) {
        prefs[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++prefs[static_cast<std::size_t>(pos)];
    }
    CHECK(circle_mass == exactprob::total_pf_mass(n, n));
  }
}

TEST_CASE("enumeration budgets throw SizeLimitError") {
  exactprob::EnumLimits limits;
  limits.vector_budget = 10;
  CHECK_THROWS_AS((void)exactprob::total_pf_mass(3, 3, limits),
                  SizeLimitError);
  CHECK_THROWS_AS((void)exactprob::last_pref_distribution_bruteforce(3, limits),
                  SizeLimitError);
  limits.vacancy_budget = 10;
  CHECK_THROWS_AS((void)exactprob::vacancy_table(3, limits), SizeLimitError);
  limits.pref_budget = 2;
  CHECK_THROWS_AS(
      (void)exactprob::park_probability(on_line({1, 1, 1}, 3), limits),
      SizeLimitError);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS((void)exactprob::total_pf_mass(3, 4), std::invalid_argument);
  CHECK_THROWS_AS((void)exactprob::total_pf_mass(0, 0), std::invalid_argument);
}
