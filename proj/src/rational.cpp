#include "parkstat/rational.hpp"

#include <stdexcept>
#include <utility>

#include "parkstat/errors.hpp"

namespace parkstat {

BigInt int_pow(const BigInt& base, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

BigInt int_pow(unsigned long base, unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigRat rat_pow(const BigRat& base, long e) {
  if (e == 0) return BigRat(1);
  if (base == 0) {
    if (e < 0)
      throw ZeroBaseNegativeExponentError(
          "0 raised to negative exponent " + std::to_string(e));
    return BigRat(0);
  }
  const unsigned long mag =
      e < 0 ? 0UL - static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  BigInt num = int_pow(BigInt(base.get_num()), mag);
  BigInt den = int_pow(BigInt(base.get_den()), mag);
  if (e < 0) std::swap(num, den);
  return make_rat(num, den);
}

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

BigRat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  BigRat q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational: " + text);
  q.canonicalize();
  return q;
}

std::string rat_string(const BigRat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double rat_double(const BigRat& q) { return q.get_d(); }

}  // namespace parkstat
