#include "hc/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hc/hardcore.hpp"

namespace hc {

Rat TfBound::objective() const { return branch * yi + (branch + 1) * yi1; }

Rat CubicBound::objective() const { return dual_s + big_lambda * dual_b; }

int branch_index(int d, const Rat& lambda) {
  if (d < 2) throw std::invalid_argument("branch index needs d >= 2");
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  Rat growth = 1 + lambda;
  Rat power = growth;  // (1+lambda)^i
  for (int i = 1; i < d - 1; ++i) {
    if ((i + 1) * power >= d) return i;
    power *= growth;
  }
  return d - 1;  // d(1+lambda)^{d-2} >= d always holds
}

double breakpoint(int d, int i) {
  if (i <= 0) return std::numeric_limits<double>::infinity();
  if (i >= d) throw std::invalid_argument("breakpoint index out of range");
  return std::pow(static_cast<double>(d) / (i + 1), 1.0 / i) - 1.0;
}

TfBound tf_bound(int d, const Rat& lambda) {
  int i = branch_index(d, lambda);
  Rat growth = 1 + lambda;
  Rat gi = rat_pow(growth, i);            // (1+lambda)^i
  Rat gi1 = gi * growth;                  // (1+lambda)^{i+1}
  Rat denom = gi1 + lambda * (d + 1 + (d + i + 1) * lambda);
  TfBound b;
  b.d = d;
  b.lambda = lambda;
  b.branch = i;
  b.y0 = lambda * (1 + (i + 1) * lambda) / denom;
  b.yi = growth * ((i + 1) * gi - d) / denom;
  b.yi1 = growth * growth * (d - i * gi / growth) / denom;
  b.dual_s = d * growth * (1 + (i + 1) * lambda) / denom;
  b.dual_m = gi1 * growth / denom;
  b.dual_a = d * growth * (gi1 - (1 + (i + 1) * lambda)) / denom;
  return b;
}

Rat tf_alpha_bound(int d, const Rat& lambda) { return tf_bound(d, lambda).y0; }

Polynomial t3_polynomial() {
  Polynomial core({Int(1), Int(3), Int(1)});  // 1 + 3x + x^2
  return core.pow(3) + Polynomial::x() * Polynomial::one_plus_x_pow(6);
}

CubicBound cubic_bound(const Rat& lambda) {
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  static const Polynomial t3 = t3_polynomial();
  Rat pt3 = t3.eval(lambda);
  Rat growth = 1 + lambda;
  Rat g2 = growth * growth;
  Rat g3 = g2 * growth;
  Rat quad = 1 + 6 * lambda + 6 * lambda * lambda;  // 1 + 6l + 6l^2

  CubicBound b;
  b.lambda = lambda;
  b.big_lambda = g3 / pt3;
  b.y0 = lambda * (1 + 2 * lambda) / quad +
         lambda * lambda * lambda * g2 / (quad * pt3);
  b.y1 = (-1 + lambda + 2 * lambda * lambda) / quad +
         (1 + 7 * lambda + 9 * lambda * lambda + lambda * lambda * lambda) * g2 /
             (quad * pt3);
  b.y2 = 2 * g2 / quad -
         (2 + 14 * lambda + 21 * lambda * lambda + 8 * lambda * lambda * lambda) *
             g2 / (quad * pt3);
  b.y3 = b.big_lambda;
  b.dual_s = 3 * growth * (1 + 2 * lambda) / quad;
  b.dual_m = g3 / quad;
  b.dual_a = 3 * lambda * lambda * growth / quad;
  b.dual_b = 3 * lambda * lambda / quad;
  return b;
}

namespace {

// y0*(t)/t in closed form; finite at t = 0 with value 1.
double integrand(BoundModel model, int d, const Polynomial& t3, const Rat& t) {
  if (t == 0) return 1.0;
  Rat growth = 1 + t;
  if (model == BoundModel::Cubic) {
    Rat quad = 1 + 6 * t + 6 * t * t;
    Rat g2 = growth * growth;
    Rat value = (1 + 2 * t) / quad + t * t * g2 / (quad * t3.eval(t));
    return rat_d(value);
  }
  int i = branch_index(d, t);
  Rat gi1 = rat_pow(growth, i + 1);
  Rat denom = gi1 + t * (d + 1 + (d + i + 1) * t);
  return rat_d((1 + (i + 1) * t) / denom);
}

struct Quadrature {
  BoundModel model;
  int d;
  const Polynomial& t3;
  double tol;

  double f(const Rat& t) const { return integrand(model, d, t3, t); }

  // Adaptive Simpson with Richardson correction; nodes kept exact so the
  // closed forms are evaluated at true dyadic points.
  double refine(const Rat& a, const Rat& b, double fa, double fm, double fb,
                double whole, double eps, int depth) const {
    Rat m = (a + b) / 2;
    Rat lm = (a + m) / 2, rm = (m + b) / 2;
    double flm = f(lm), frm = f(rm);
    double h = rat_d(b - a);
    double left = h / 12 * (fa + 4 * flm + fm);
    double right = h / 12 * (fm + 4 * frm + fb);
    double delta = left + right - whole;
    if (depth >= 48 || std::fabs(delta) <= 15 * eps)
      return left + right + delta / 15;
    return refine(a, m, fa, flm, fm, left, eps / 2, depth + 1) +
           refine(m, b, fm, frm, fb, right, eps / 2, depth + 1);
  }

  double integrate(const Rat& a, const Rat& b) const {
    Rat m = (a + b) / 2;
    double fa = f(a), fm = f(m), fb = f(b);
    double whole = rat_d(b - a) / 6 * (fa + 4 * fm + fb);
    return refine(a, b, fa, fm, fb, whole, tol, 0);
  }
};

}  // namespace

double log_partition_bound(BoundModel model, int d, double lambda_max, double tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  if (lambda_max <= 0 || !std::isfinite(lambda_max))
    throw std::invalid_argument("lambda_max must be positive and finite");
  if (model == BoundModel::Cubic) {
    if (d != 3) throw std::invalid_argument("cubic model forces d = 3");
  } else if (d < 2) {
    throw std::invalid_argument("triangle-free model needs d >= 2");
  }
  Polynomial t3 = model == BoundModel::Cubic ? t3_polynomial() : Polynomial::one();
  Quadrature q{model, d, t3, tol};
  return q.integrate(Rat(0), rat_from_double(lambda_max));
}

Rat reference_occupancy(ReferenceKind kind, int d, const Rat& lambda) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  if (kind == ReferenceKind::Clique) return lambda / (1 + (d + 1) * lambda);
  Rat gd1 = rat_pow(1 + lambda, d - 1);
  return lambda * gd1 / (2 * gd1 * (1 + lambda) - 1);
}

Rat shearer(int d) {
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  Rat f(1);
  for (int k = 1; k <= d; ++k)
    f = (1 + (static_cast<long>(k) * k - k) * f) / (static_cast<long>(k) * k + 1);
  return f;
}

double lambert_w(double x) {
  if (x < 0) throw std::domain_error("lambert_w defined for x >= 0 here");
  if (x == 0) return 0.0;
  double w = std::log1p(x);
  for (int iter = 0; iter < 100; ++iter) {
    double ew = std::exp(w);
    double step = (w * ew - x) / (ew * (w + 1));
    w -= step;
    if (std::fabs(step) <= 1e-12 * std::fabs(w)) break;
  }
  return w;
}

double conjecture_reference(const Rat& lambda) {
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  static const Polynomial p52 = independence_polynomial(generalized_petersen(5, 2));
  static const Polynomial p72 = independence_polynomial(generalized_petersen(7, 2));
  double a = std::pow(rat_d(p52.eval(lambda)), 1.0 / 10);
  double b = std::pow(rat_d(p72.eval(lambda)), 1.0 / 14);
  return std::min(a, b);
}

}  // namespace hc
