#include "hc/graph6.hpp"
#include "hc/hardcore.hpp"
#include "hc/lp.hpp"

namespace hc {

namespace {

void check_lambda(const Rat& lambda) {
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
}

// a_H = 1/P_H(lambda), b_H = (1+lambda) P_H'(lambda) / (d P_H(lambda))
std::pair<Rat, Rat> local_coefficients(const Graph& h, int d, const Rat& lambda) {
  Polynomial poly = independence_polynomial(h);
  Rat value = poly.eval(lambda);
  Rat dvalue = poly.derivative().eval(lambda);
  return {1 / value, (1 + lambda) * dvalue / (d * value)};
}

}  // namespace

std::vector<Graph> lp_general_support(int d) {
  if (d < 1 || d > 5)
    throw std::invalid_argument("general LP supports 1 <= d <= 5");
  return enumerate_nonisomorphic(d);
}

LpProblem build_lp_general(int d, const Rat& lambda) {
  check_lambda(lambda);
  auto graphs = lp_general_support(d);
  LpProblem p;
  p.sense = Sense::Min;
  LpRow mass{"A", RowKind::Eq, {}, Rat(1)};
  LpRow balance{"B", RowKind::Eq, {}, Rat(0)};
  Rat scale = lambda / (2 * (1 + lambda));
  for (const Graph& h : graphs) {
    auto [a, b] = local_coefficients(h, d, lambda);
    p.var_labels.push_back(write_graph6(h));
    p.var_nonneg.push_back(true);
    p.objective.push_back(scale * (a + b));
    mass.coeffs.push_back(Rat(1));
    balance.coeffs.push_back(a - b);
  }
  p.rows = {std::move(mass), std::move(balance)};
  return p;
}

LpProblem build_lp_trianglefree(int d, const Rat& lambda) {
  if (d < 2) throw std::invalid_argument("triangle-free LP needs d >= 2");
  check_lambda(lambda);
  LpProblem p;
  p.sense = Sense::Min;
  LpRow mass{"S", RowKind::Eq, {}, Rat(1)};
  LpRow mean{"M", RowKind::Eq, {}, Rat(0)};
  LpRow alpha{"A", RowKind::Ge, {}, Rat(0)};
  Rat growth = 1 + lambda;
  for (int i = 0; i <= d; ++i) {
    p.var_labels.push_back("y" + std::to_string(i));
    p.var_nonneg.push_back(true);
    p.objective.push_back(Rat(i));
    mass.coeffs.push_back(Rat(1));
    mean.coeffs.push_back(i - d / rat_pow(growth, i));
    alpha.coeffs.push_back(i == 0 ? Rat(1) : -i * lambda / (d * growth));
  }
  p.rows = {std::move(mass), std::move(mean), std::move(alpha)};
  return p;
}

LpProblem build_lp_cubic(const Rat& lambda, const Polynomial& t3poly) {
  check_lambda(lambda);
  Rat t3value = t3poly.eval(lambda);
  if (t3value <= 0) throw std::invalid_argument("t3 polynomial must be positive at lambda");
  LpProblem p = build_lp_trianglefree(3, lambda);
  LpRow tail{"B", RowKind::Ge, {Rat(0), Rat(0), Rat(0), Rat(1)},
             rat_pow(1 + lambda, 3) / t3value};
  p.rows.push_back(std::move(tail));
  return p;
}

std::pair<Rat, Rat> dual_candidate(const Graph& k, int d, const Rat& lambda) {
  if (k.n() == 0) throw std::invalid_argument("dual candidate needs a nonempty graph");
  if (k.n() > d) throw std::invalid_argument("dual candidate needs at most d vertices");
  check_lambda(lambda);
  auto [a, b] = local_coefficients(k, d, lambda);
  Rat denom = 1 - a + b;
  if (denom == 0) throw std::domain_error("dual candidate undefined: 1 - a + b = 0");
  Rat A = 2 * b / denom;
  return {A, 1 - A};
}

}  // namespace hc
