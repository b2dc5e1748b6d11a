#pragma once

#include <set>
#include <string>
#include <vector>

#include "hc/graph.hpp"
#include "hc/polynomial.hpp"
#include "hc/rational.hpp"

namespace hc {

enum class BoundModel { TriangleFree, Cubic };
enum class ReferenceKind { Clique, Biclique };

// Closed-form optimum of the triangle-free LP on branch i (the support is
// {y0, yi, yi+1}).
struct TfBound {
  int d;
  Rat lambda;
  int branch;
  Rat y0, yi, yi1;
  Rat dual_s, dual_m, dual_a;
  Rat objective() const;  // i*yi + (i+1)*yi1 = dual_s
};

struct CubicBound {
  Rat lambda;
  Rat big_lambda;  // (1+lambda)^3 / P_T3(lambda)
  Rat y0, y1, y2, y3;
  Rat dual_s, dual_m, dual_a, dual_b;
  Rat objective() const;  // dual_s + big_lambda * dual_b
};

// The unique i in {1..d-1} with m_i <= lambda < m_{i-1}, where
// m_i = (d/(i+1))^{1/i} - 1, decided by the exact inequality
// (i+1)(1+lambda)^i >= d (monotone in i, so the smallest passing i wins).
int branch_index(int d, const Rat& lambda);

// Breakpoint m_i as a float, for display only.
double breakpoint(int d, int i);

TfBound tf_bound(int d, const Rat& lambda);
Rat tf_alpha_bound(int d, const Rat& lambda);

CubicBound cubic_bound(const Rat& lambda);

// P_T3(lambda) = (1+3lambda+lambda^2)^3 + lambda(1+lambda)^6, expanded.
Polynomial t3_polynomial();

// Adaptive-Simpson integral of y0*(t)/t over (0, lambda_max]: a lower bound
// on log(P_G(lambda_max))/n for graphs covered by the model.
double log_partition_bound(BoundModel model, int d, double lambda_max, double tol);

Rat reference_occupancy(ReferenceKind kind, int d, const Rat& lambda);

// Shearer's independence-ratio recurrence: f(0) = 1,
// f(d) = (1 + (d^2 - d) f(d-1)) / (d^2 + 1).
Rat shearer(int d);

// Principal-branch Lambert W on [0, inf), 1e-12 relative error.
double lambert_w(double x);

// min(P_GP(5,2)(lambda)^{1/10}, P_GP(7,2)(lambda)^{1/14}) as a float.
double conjecture_reference(const Rat& lambda);

}  // namespace hc
