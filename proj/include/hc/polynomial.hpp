#pragma once

#include <vector>

#include "hc/rational.hpp"

namespace hc {

// Dense univariate polynomial with integer coefficients. Coefficient k is the
// coefficient of x^k; trailing zeros are trimmed and the zero polynomial has
// an empty coefficient vector.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Int> coeffs);

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one();
  static Polynomial x();
  // (1 + x)^k
  static Polynomial one_plus_x_pow(unsigned long k);

  const std::vector<Int>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Int coeff(size_t k) const { return k < c_.size() ? c_[k] : Int(0); }

  Polynomial derivative() const;
  Rat eval(const Rat& x) const;
  Int eval_int(const Int& x) const;
  Polynomial pow(unsigned long e) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Int& s, const Polynomial& p);
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  // Multiplies by x^k.
  Polynomial shifted(size_t k) const;

 private:
  void trim();
  std::vector<Int> c_;
};

}  // namespace hc
