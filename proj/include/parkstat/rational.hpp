#pragma once

#include <gmpxx.h>

#include <string>

namespace parkstat {

// Arbitrary-precision integers and rationals. mpq_class values are kept
// canonical: lowest terms, positive denominator, 0/1 for zero.
using BigInt = mpz_class;
using BigRat = mpq_class;

BigInt int_pow(const BigInt& base, unsigned long e);
BigInt int_pow(unsigned long base, unsigned long e);
BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

// base^e for integer e of either sign. Throws ZeroBaseNegativeExponentError
// when base is 0 and e < 0; 0^0 is 1.
BigRat rat_pow(const BigRat& base, long e);

// num/den in canonical form; den must be nonzero.
BigRat make_rat(const BigInt& num, const BigInt& den);

// Accepts "a/b" or a bare integer "a".
BigRat parse_rat(const std::string& text);

// Always "num/den", e.g. "3/4", "-1/2", "5/1".
std::string rat_string(const BigRat& q);

double rat_double(const BigRat& q);

}  // namespace parkstat
