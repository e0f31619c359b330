#pragma once

#include <string>
#include <vector>

#include "parkstat/rational.hpp"

namespace parkstat {

// Dense univariate polynomial. Coefficients are stored by ascending degree
// and trailing zeros are trimmed, so the zero polynomial is {0}.
template <typename Coeff>
class Polynomial {
 public:
  Polynomial() : coeffs_{Coeff(0)} {}
  explicit Polynomial(Coeff constant) : coeffs_{std::move(constant)} {}
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static Polynomial variable() {
    return Polynomial(std::vector<Coeff>{Coeff(0), Coeff(1)});
  }

  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  bool is_constant() const { return coeffs_.size() == 1; }
  const Coeff& constant_value() const { return coeffs_[0]; }

  Coeff coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return Coeff(0);
    return coeffs_[d];
  }

  Coeff eval(const Coeff& x) const {
    Coeff acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) {
    std::vector<Coeff> out(coeffs_.size() + o.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
        out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
  }
  Polynomial& operator*=(const Coeff& c) {
    for (auto& v : coeffs_) v *= c;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Coeff& c) { return a *= c; }
  friend Polynomial operator*(const Coeff& c, Polynomial a) { return a *= c; }

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Substitutes x -> 1 - x; used for mirror-symmetry checks.
  Polynomial reflected() const {
    Polynomial one_minus(std::vector<Coeff>{Coeff(1), Coeff(-1)});
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= one_minus;
      acc += Polynomial(*it);
    }
    return acc;
  }

  // Canonical human form by ascending degree, e.g. "2p - p^2".
  std::string str(const char* var = "p") const;

 private:
  void trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(Coeff(0));
  }

  std::vector<Coeff> coeffs_;
};

// Polynomial in the heads probability p, exact rational coefficients.
using PolyP = Polynomial<BigRat>;
// Polynomial in the formal marker q, integer coefficients.
using PolyQ = Polynomial<BigInt>;

std::string coeff_term_string(const BigRat& c);
std::string coeff_term_string(const BigInt& c);

template <typename Coeff>
std::string Polynomial<Coeff>::str(const char* var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = 0; d <= degree(); ++d) {
    const Coeff& c = coeffs_[d];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    Coeff a = neg ? Coeff(-c) : c;
    std::string mag = coeff_term_string(a);
    if (d == 0) {
      out += mag;
    } else {
      if (mag != "1") out += mag;
      out += var;
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

}  // namespace parkstat
