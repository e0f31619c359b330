#include "parkstat/formulas.hpp"

#include <mpfr.h>

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

#include "parkstat/errors.hpp"

namespace parkstat::formulas {

namespace {

void require_prob(const BigRat& p) {
  if (p < 0 || p > 1)
    throw std::invalid_argument("p must lie in [0, 1], got " + rat_string(p));
}

// b^e for b >= 1 where a negative exponent only ever hits base 1
// (the boundary convention 1^-1 = 1 of the conditional-law formula).
BigInt unit_safe_pow(unsigned long b, long e) {
  if (e < 0) {
    assert(b == 1);
    return BigInt(1);
  }
  return int_pow(b, static_cast<unsigned long>(e));
}

// T(s) = C(n-1, s) (n-s)^(n-s-2) (s+1)^(s-1); every term is an integer.
std::vector<BigInt> boundary_terms(int n) {
  std::vector<BigInt> t(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    BigInt v = binomial(static_cast<unsigned long>(n - 1),
                        static_cast<unsigned long>(s));
    v *= unit_safe_pow(static_cast<unsigned long>(n - s), n - s - 2);
    v *= unit_safe_pow(static_cast<unsigned long>(s + 1), s - 1);
    t[static_cast<std::size_t>(s)] = std::move(v);
  }
  return t;
}

}  // namespace

RationalDist make_dist(std::vector<BigRat> masses) {
  if (masses.empty()) throw std::invalid_argument("empty distribution");
  BigRat sum(0);
  for (const BigRat& m : masses) {
    if (m < 0)
      throw std::invalid_argument("negative mass " + rat_string(m));
    sum += m;
  }
  if (sum != 1)
    throw std::invalid_argument("masses sum to " + rat_string(sum) +
                                ", not 1");
  return RationalDist{std::move(masses)};
}

RationalDist uniform_dist(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  return RationalDist{
      std::vector<BigRat>(static_cast<std::size_t>(n), make_rat(1, n))};
}

BigRat abel_sum(int n, const AbelParams& params) {
  if (n < 0) throw std::invalid_argument("need n >= 0");
  BigRat total(0);
  for (int s = 0; s <= n; ++s) {
    BigRat term(binomial(static_cast<unsigned long>(n),
                         static_cast<unsigned long>(s)));
    term *= rat_pow(params.x + s, s + params.p_exp);
    term *= rat_pow(params.y + (n - s), (n - s) + params.q_exp);
    total += term;
  }
  return total;
}

RationalDist last_pref_distribution(int n, const BigRat& p) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  require_prob(p);
  const BigInt a = p.get_num();
  const BigInt b = p.get_den();
  const std::vector<BigInt> t = boundary_terms(n);
  // pre[k] = sum of T(s) for s < k
  std::vector<BigInt> pre(static_cast<std::size_t>(n) + 1);
  pre[0] = 0;
  for (int k = 1; k <= n; ++k)
    pre[static_cast<std::size_t>(k)] =
        pre[static_cast<std::size_t>(k) - 1] + t[static_cast<std::size_t>(k) - 1];

  // Everything over the common denominator D = b (n+1)^(n-1):
  //   mass(j) D = 2 b (n+1)^(n-2) ... = base - a S1(j) - (b-a) S2(j)
  // with S1(j) the top j-1 terms and S2(j) the bottom n-j terms.
  const BigInt denom = b * int_pow(static_cast<unsigned long>(n + 1),
                                   static_cast<unsigned long>(n - 1));
  BigInt base = 2 * denom;
  mpz_divexact_ui(base.get_mpz_t(), base.get_mpz_t(),
                  static_cast<unsigned long>(n + 1));

  std::vector<BigRat> masses(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const BigInt s1 = pre[static_cast<std::size_t>(n)] -
                      pre[static_cast<std::size_t>(n - j + 1)];
    const BigInt& s2 = pre[static_cast<std::size_t>(n - j)];
    BigInt numer = base - a * s1 - (b - a) * s2;
    masses[static_cast<std::size_t>(j) - 1] = make_rat(numer, denom);
  }
  return make_dist(std::move(masses));
}

RationalDist last_pref_distribution_half(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  // Q(j) = 1/(n+1) + C(n-1, n-j) j^(j-2) (n-j+1)^(n-j-1) / (2 (n+1)^(n-1))
  const BigInt denom = 2 * int_pow(static_cast<unsigned long>(n + 1),
                                   static_cast<unsigned long>(n - 1));
  BigInt base = denom;
  mpz_divexact_ui(base.get_mpz_t(), base.get_mpz_t(),
                  static_cast<unsigned long>(n + 1));
  std::vector<BigRat> masses(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    BigInt w = binomial(static_cast<unsigned long>(n - 1),
                        static_cast<unsigned long>(n - j));
    w *= unit_safe_pow(static_cast<unsigned long>(j), j - 2);
    w *= unit_safe_pow(static_cast<unsigned long>(n - j + 1), n - j - 1);
    masses[static_cast<std::size_t>(j) - 1] = make_rat(base + w, denom);
  }
  return make_dist(std::move(masses));
}

BigRat last_pref_mean_exact(int n, const BigRat& p) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  require_prob(p);
  // sum_j j mass(j) over the common denominator D = b (n+1)^(n-1), summing
  // numerators as integers so only the final quotient reduces:
  //   sum_j j S1(j) = sum_k (n+1-k) pre[k],   k = n-j+1,
  //   sum_j j S2(j) = sum_k (n-k) pre[k],     k = n-j.
  const BigInt a = p.get_num();
  const BigInt b = p.get_den();
  const std::vector<BigInt> t = boundary_terms(n);
  std::vector<BigInt> pre(static_cast<std::size_t>(n) + 1);
  pre[0] = 0;
  for (int k = 1; k <= n; ++k)
    pre[static_cast<std::size_t>(k)] =
        pre[static_cast<std::size_t>(k) - 1] + t[static_cast<std::size_t>(k) - 1];
  const BigInt denom = b * int_pow(static_cast<unsigned long>(n + 1),
                                   static_cast<unsigned long>(n - 1));
  BigInt base = 2 * denom;
  mpz_divexact_ui(base.get_mpz_t(), base.get_mpz_t(),
                  static_cast<unsigned long>(n + 1));
  const BigInt jsum = BigInt(n) * (n + 1) / 2;
  BigInt top(0), bottom(0);
  for (int k = 1; k <= n; ++k)
    top += BigInt(n + 1 - k) * pre[static_cast<std::size_t>(k)];
  for (int k = 0; k <= n - 1; ++k)
    bottom += BigInt(n - k) * pre[static_cast<std::size_t>(k)];
  const BigInt total =
      base * jsum - a * (pre[static_cast<std::size_t>(n)] * jsum - top) -
      (b - a) * bottom;
  return make_rat(total, denom);
}

double last_pref_mean_asymptotic(int n, double p) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  const double drift =
      std::sqrt(2.0 * M_PI) / 4.0 * std::sqrt(static_cast<double>(n)) -
      7.0 / 6.0;
  return (n + 1) / 2.0 - (2.0 * p - 1.0) * drift;
}

BigRat tv_distance(const RationalDist& a, const RationalDist& b) {
  if (a.support() != b.support())
    throw SupportMismatchError("supports differ: " +
                               std::to_string(a.support()) + " vs " +
                               std::to_string(b.support()));
  BigRat sum(0);
  for (std::size_t i = 0; i < a.masses.size(); ++i)
    sum += abs(a.masses[i] - b.masses[i]);
  return sum / 2;
}

ConvexParts convexity_decompose(int n, const BigRat& p) {
  require_prob(p);
  ConvexParts parts{last_pref_distribution(n, BigRat(0)),
                    last_pref_distribution(n, BigRat(1)),
                    last_pref_distribution(n, p)};
  for (int j = 1; j <= n; ++j) {
    const BigRat mixed =
        p * parts.q_one.mass(j) + (1 - p) * parts.q_zero.mass(j);
    if (mixed != parts.q_p.mass(j))
      throw std::logic_error("convexity identity failed at j = " +
                             std::to_string(j));
  }
  return parts;
}

TvBounds tv_bounds_check(int n, const BigRat& p) {
  require_prob(p);
  const RationalDist uniform = uniform_dist(n);
  TvBounds out;
  out.n = n;
  out.p = p;
  out.tv = tv_distance(last_pref_distribution(n, p), uniform);
  out.tv_one = tv_distance(last_pref_distribution(n, BigRat(1)), uniform);
  const BigRat tv_zero =
      tv_distance(last_pref_distribution(n, BigRat(0)), uniform);
  out.mirror_ok = out.tv_one == tv_zero;
  out.lower = abs(2 * p - 1) * out.tv_one;
  out.upper = out.tv_one;
  out.sandwich_ok = out.lower <= out.tv && out.tv <= out.upper;
  return out;
}

EdgeworthTerms edgeworth_terms(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  EdgeworthTerms terms;
  terms.correction =
      2.0 / (3.0 * std::sqrt(2.0 * M_PI * static_cast<double>(n)));
  return terms;
}

PoissonCdf poisson_cdf_check(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  constexpr mpfr_prec_t kPrec = 256;
  mpfr_t sum, term, factor, corr;
  mpfr_inits2(kPrec, sum, term, factor, corr, static_cast<mpfr_ptr>(nullptr));

  // sum = sum_{s=0..n} n^s / s!, built by term_{s} = term_{s-1} * n / s
  mpfr_set_ui(term, 1, MPFR_RNDN);
  mpfr_set_ui(sum, 1, MPFR_RNDN);
  for (int s = 1; s <= n; ++s) {
    mpfr_mul_ui(term, term, static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_div_ui(term, term, static_cast<unsigned long>(s), MPFR_RNDN);
    mpfr_add(sum, sum, term, MPFR_RNDN);
  }
  // exact = e^-n * sum
  mpfr_set_si(factor, -n, MPFR_RNDN);
  mpfr_exp(factor, factor, MPFR_RNDN);
  mpfr_mul(sum, sum, factor, MPFR_RNDN);

  // corr = 2 / (3 sqrt(2 pi n))
  mpfr_const_pi(corr, MPFR_RNDN);
  mpfr_mul_ui(corr, corr, 2 * static_cast<unsigned long>(n), MPFR_RNDN);
  mpfr_sqrt(corr, corr, MPFR_RNDN);
  mpfr_mul_ui(corr, corr, 3, MPFR_RNDN);
  mpfr_ui_div(corr, 2, corr, MPFR_RNDN);

  PoissonCdf out;
  out.exact = mpfr_get_d(sum, MPFR_RNDN);
  // residual = exact - (1/2 + corr), carried in high precision
  mpfr_sub(factor, sum, corr, MPFR_RNDN);
  mpfr_sub_d(factor, factor, 0.5, MPFR_RNDN);
  out.edgeworth = 0.5 + mpfr_get_d(corr, MPFR_RNDN);
  out.residual = mpfr_get_d(factor, MPFR_RNDN);
  mpfr_clears(sum, term, factor, corr, static_cast<mpfr_ptr>(nullptr));
  return out;
}

double tv_test_function_lb(int n, const BigRat& p) {
  // (1/2) [ sum_j f(j)/n over uniform - sum_j f(j) Q(j) ] with f(j) = j/n:
  // uniform side is (n+1)/(2n), law side is mean/n.
  const BigRat mean = last_pref_mean_exact(n, p);
  const BigRat value = (make_rat(n + 1, 2 * static_cast<long>(n)) -
                        mean / n) / 2;
  return rat_double(value);
}

}  // namespace parkstat::formulas
