#pragma once

#include <set>
#include <string>
#include <vector>

#include "hc/bounds.hpp"
#include "hc/graph.hpp"
#include "hc/rational.hpp"

namespace hc {

enum class ScanCheck {
  Main,              // alpha_G >= lambda/(1+(d+1)lambda)
  Djpr,              // alpha_G <= alpha_{K_{d,d}}
  TfBound,           // alpha_G >= tf_alpha_bound (triangle-free)
  CubicBound,        // alpha_G >= cubic_bound.y0 (cubic triangle-free)
  Y3Bound,           // y_3 >= (1+lambda)^3/P_T3 (cubic triangle-free)
  Conjecture,        // P_G^{1/n} >= conjecture_reference - 1e-9 (float)
  EqualityStructure  // equality in Main <=> disjoint union of K_{d+1}
};

std::string scan_check_name(ScanCheck check);
ScanCheck scan_check_from_name(const std::string& name);

struct ScanCell {
  int graph_index;
  std::string graph6;
  int n;
  int d;
  Rat lambda;
  ScanCheck check;
  bool pass;
  std::string lhs;
  std::string rhs;
};

struct ScanViolation {
  int graph_index;
  std::string message;
};

struct ScanReport {
  std::vector<ScanCell> cells;
  std::vector<ScanViolation> violations;  // precondition failures per graph
  bool all_pass() const;
};

// Evaluates every requested check on every graph at every lambda. Exact
// comparisons except Conjecture (floating point with 1e-9 slack). Graphs
// failing a check's preconditions are reported in violations and skipped for
// that check; the scan continues. Cells come back in (graph, lambda, check)
// order regardless of jobs.
ScanReport scan_check(const std::vector<Graph>& graphs,
                      const std::vector<Rat>& lambdas,
                      const std::set<ScanCheck>& checks, int jobs = 1);

}  // namespace hc
