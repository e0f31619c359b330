#include "parkstat/poly.hpp"

namespace parkstat {

std::string coeff_term_string(const BigRat& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return "(" + c.get_num().get_str() + "/" + c.get_den().get_str() + ")";
}

std::string coeff_term_string(const BigInt& c) { return c.get_str(); }

}  // namespace parkstat
