#pragma once

#include <map>
#include <vector>

#include "parkstat/poly.hpp"

namespace parkstat::lucky {

// Expected number of preference vectors in [n+1]^n on the circle with n+1
// spots, first preference pinned to spot 1, whose protocol run has exactly
// k cars arrive to an occupied preference. Evaluated by the elementary-
// symmetric-function recurrence over the weights (i-1)/((n+1)-(i-1)),
// scaled by n!; the result is always integral.
BigInt unlucky_expected_circular(int n, int k);
std::vector<BigInt> unlucky_row_circular(int n);  // k = 0..n-1

// One-way analogue over [n]^n with a free first preference: weights
// (i-1)/(n-(i-1)), scale n!. Rows sum to n^n.
BigInt unlucky_expected_linear(int n, int k);
std::vector<BigInt> unlucky_row_linear(int n);

// prod_{k=2..n} [(n+1-k) q + k]; its q^k coefficient equals
// unlucky_expected_circular(n, k).
PolyQ q_generating_polynomial(int n);

// Lucky-car generating polynomial of classical parking functions:
// q prod_{i=1..n-1} [i + (n-i+1) q]; evaluates to (n+1)^(n-1) at q = 1.
PolyQ classical_lucky_generating(int n);

struct TriangleTable {
  std::vector<std::vector<BigInt>> rows;
};

// Weighted Pascal recurrence
//   E(i, k) = ((n+1)-(i-1)) E(i-1, k) + (i-1) E(i-1, k-1)
// with E(0,0) = 0 (display convention), E(1,0) = 1. Row i carries
// k = 0..i; row n reproduces unlucky_row_circular(n).
TriangleTable weighted_pascal(int n);

// Rows 0..max_i where row i lists the q-coefficients of
// q_generating_polynomial(i) padded with one trailing zero (row 0 is bare).
TriangleTable a220884_rows(int max_i);

// Brute-force oracle: enumerates length-i preference vectors on the circle
// with n+1 spots (first preference pinned to 1 when fixed_first) and all
// coin branches, returning for each k the total branch weight of runs with
// exactly k unlucky cars. Each value is a polynomial in p; the claims under
// test say every one of them is constant.
std::map<int, PolyP> unlucky_distribution_bruteforce(int n, int i,
                                                     bool fixed_first);

}  // namespace parkstat::lucky
