#include "hc/polynomial.hpp"

#include <utility>

namespace hc {

Polynomial::Polynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::one() { return Polynomial({Int(1)}); }

Polynomial Polynomial::x() { return Polynomial({Int(0), Int(1)}); }

Polynomial Polynomial::one_plus_x_pow(unsigned long k) {
  std::vector<Int> c(k + 1);
  for (unsigned long i = 0; i <= k; ++i)
    mpz_bin_uiui(c[i].get_mpz_t(), k, i);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return zero();
  std::vector<Int> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = Int(static_cast<long>(k)) * c_[k];
  return Polynomial(std::move(d));
}

Rat Polynomial::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t k = c_.size(); k-- > 0;) acc = acc * x + Rat(c_[k]);
  return acc;
}

Int Polynomial::eval_int(const Int& x) const {
  Int acc(0);
  for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

Polynomial Polynomial::pow(unsigned long e) const {
  Polynomial result = one();
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial::zero();
  std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Int& s, const Polynomial& p) {
  std::vector<Int> c(p.c_.size());
  for (size_t k = 0; k < c.size(); ++k) c[k] = s * p.c_[k];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::shifted(size_t k) const {
  if (is_zero()) return zero();
  std::vector<Int> c(c_.size() + k);
  for (size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
  return Polynomial(std::move(c));
}

}  // namespace hc
