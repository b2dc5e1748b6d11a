#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hc/graph.hpp"
#include "hc/polynomial.hpp"
#include "hc/rational.hpp"

namespace hc {

enum class Sense { Min, Max };
enum class RowKind { Eq, Ge, Le };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpRow {
  std::string label;
  RowKind kind = RowKind::Eq;
  std::vector<Rat> coeffs;
  Rat rhs;
};

struct LpProblem {
  Sense sense = Sense::Min;
  std::vector<std::string> var_labels;
  std::vector<bool> var_nonneg;  // false = free variable
  std::vector<Rat> objective;
  std::vector<LpRow> rows;

  int num_vars() const { return static_cast<int>(objective.size()); }
  void validate() const;  // throws std::invalid_argument on shape mismatch
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rat objective;
  std::vector<Rat> primal;  // per variable; empty unless Optimal
  std::vector<Rat> dual;    // per row; empty unless Optimal
  // Final basic columns in standard form: j < num_vars is variable j (or the
  // positive part of a split free variable), num_vars + r is the surplus or
  // split negative part introduced in construction order.
  std::vector<int> basis;
};

// Exact two-phase primal simplex with Bland's rule. At most 64 variables and
// 64 rows. Duals follow the standard convention: for a Min problem,
// sum_i A[i][j] y_i <= c_j for nonneg variables (= c_j for free ones), with
// y free on Eq rows, y >= 0 on Ge rows, y <= 0 on Le rows; signs flip for Max.
LpSolution simplex_solve(const LpProblem& problem);

// Standard dual of a builder-shaped problem (Min sense, Eq/Ge rows, all
// variables nonnegative): a Max problem over one variable per row (free for
// Eq, nonnegative for Ge) with one Le row per primal variable.
LpProblem dual_of(const LpProblem& problem);

struct SlacknessPair {
  std::string label;
  Rat value;    // primal variable or dual variable
  Rat slack;    // dual-constraint slack or primal-row slack
  bool tight = false;
  bool violated = false;
};

struct SlacknessReport {
  std::vector<SlacknessPair> variable_pairs;  // one per primal variable
  std::vector<SlacknessPair> row_pairs;       // one per primal row
  bool primal_feasible = true;
  bool dual_feasible = true;
  Rat primal_objective;
  Rat dual_objective;
  int violations() const;
  bool ok() const { return violations() == 0; }
};

// Verifies feasibility of both points and every complementary-slackness pair
// exactly; any failed condition marks the pair violated.
SlacknessReport check_complementary_slackness(const LpProblem& problem,
                                              const std::vector<Rat>& primal,
                                              const std::vector<Rat>& dual);

// Occupancy-fraction LP over all isomorphism classes of graphs on at most d
// vertices: variables are the local-graph probabilities p_H in enumeration
// order, rows "mass" (sum = 1) and "balance" (sum (a_H - b_H) p_H = 0), and
// the objective is (lambda/(2(1+lambda))) sum (a_H + b_H) p_H, minimized.
// Requires 1 <= d <= 5.
LpProblem build_lp_general(int d, const Rat& lambda);

// Graphs on at most d vertices in the order used by build_lp_general.
std::vector<Graph> lp_general_support(int d);

// Triangle-free relaxation over Y in {0..d}: rows "S" (mass), "M" (mean
// balance), "A" (y0 >= weighted mean); objective sum i y_i, minimized.
// Requires d >= 2.
LpProblem build_lp_trianglefree(int d, const Rat& lambda);

// build_lp_trianglefree(3, lambda) plus row "B": y3 >= (1+lambda)^3 / P(lambda)
// where P is the independence polynomial of the radius-2 cubic tree ball.
LpProblem build_lp_cubic(const Rat& lambda, const Polynomial& t3poly);

// Candidate dual pair (A_K, B_K) for a complete graph K = K_j in the general
// LP: A_K = 2 b_K / (1 - a_K + b_K), B_K = 1 - A_K.
std::pair<Rat, Rat> dual_candidate(const Graph& k, int d, const Rat& lambda);

}  // namespace hc
