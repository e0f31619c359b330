#pragma once

#include <vector>

#include "parkstat/rational.hpp"

namespace parkstat::formulas {

// Probability distribution on {1..n} with exact masses: nonnegative,
// summing to exactly 1.
struct RationalDist {
  std::vector<BigRat> masses;  // masses[j-1] = P(X = j)

  int support() const { return static_cast<int>(masses.size()); }
  const BigRat& mass(int j) const { return masses[static_cast<std::size_t>(j) - 1]; }
};

// Validates the mass vector; throws std::invalid_argument.
RationalDist make_dist(std::vector<BigRat> masses);

RationalDist uniform_dist(int n);

// Parameters of the Abel sum
//   A_n(x, y; p, q) = sum_s C(n,s) (x+s)^(s+p) (y+n-s)^(n-s+q).
struct AbelParams {
  BigRat x;
  BigRat y;
  long p_exp = 0;
  long q_exp = 0;
};

// Direct exact evaluation of the Abel sum. Zero bases are rejected only
// under negative exponents (ZeroBaseNegativeExponentError).
BigRat abel_sum(int n, const AbelParams& params);

// Exact law of the last car's preference conditioned on everyone parking,
// for n cars on a linear street with n spots and heads probability p.
RationalDist last_pref_distribution(int n, const BigRat& p);

// Same law at p = 1/2 through the closed form
//   Q(j) = 1/(n+1) + C(n-1, n-j) j^(j-2) (n-j+1)^(n-j-1) / (2 (n+1)^(n-1)).
RationalDist last_pref_distribution_half(int n);

// Exact mean of the conditional law.
BigRat last_pref_mean_exact(int n, const BigRat& p);

// Asymptotic mean (n+1)/2 - (2p-1) (sqrt(2 pi) / 4 sqrt(n) - 7/6).
double last_pref_mean_asymptotic(int n, double p);

// Total variation distance (1/2) sum_j |a(j) - b(j)|, exact. Throws
// SupportMismatchError unless both supports agree.
BigRat tv_distance(const RationalDist& a, const RationalDist& b);

// The conditional law is the p-mix of its two extreme cases:
// Q_p = p Q_1 + (1-p) Q_0. Computes all three and verifies the identity
// exactly (std::logic_error on failure, which would mean a formula bug).
struct ConvexParts {
  RationalDist q_zero;
  RationalDist q_one;
  RationalDist q_p;
};
ConvexParts convexity_decompose(int n, const BigRat& p);

// Sandwich |2p-1| tv(Q_1, U) <= tv(Q_p, U) <= tv(Q_1, U), plus the mirror
// equality tv(Q_1, U) = tv(Q_0, U).
struct TvBounds {
  int n = 0;
  BigRat p;
  BigRat tv;      // tv(Q_p, uniform)
  BigRat tv_one;  // tv(Q_1, uniform)
  BigRat lower;   // |2p-1| * tv_one
  BigRat upper;   // tv_one
  bool sandwich_ok = false;
  bool mirror_ok = false;
};
TvBounds tv_bounds_check(int n, const BigRat& p);

// Expansion terms of the Poisson(n) CDF at its mean: unit variance and
// third moment of the standardized summands, Phi(0) = 1/2, and the
// one-term correction 2 / (3 sqrt(2 pi n)).
struct EdgeworthTerms {
  double sigma = 1.0;
  double mu3 = 1.0;
  double phi0 = 0.5;
  double correction = 0.0;
};
EdgeworthTerms edgeworth_terms(int n);

// P(Poisson(n) <= n) = e^-n sum_{s<=n} n^s/s! evaluated with 256-bit
// floats, against 1/2 + 2/(3 sqrt(2 pi n)). The residual is o(1/sqrt(n)).
struct PoissonCdf {
  double exact = 0.0;
  double edgeworth = 0.0;
  double residual = 0.0;
};
PoissonCdf poisson_cdf_check(int n);

// Dual-form lower bound (1/2)[sum f dU - sum f dQ] with the linear test
// function f(j) = j/n; never exceeds tv(Q_p, U).
double tv_test_function_lb(int n, const BigRat& p);

}  // namespace parkstat::formulas
