#include "hc/lp.hpp"

#include <algorithm>
#include <cassert>

namespace hc {

void LpProblem::validate() const {
  size_t n = objective.size();
  if (var_labels.size() != n || var_nonneg.size() != n)
    throw std::invalid_argument("variable metadata sizes disagree");
  for (const auto& row : rows)
    if (row.coeffs.size() != n)
      throw std::invalid_argument("row width disagrees with variable count");
}

namespace {

struct Tableau {
  int m = 0, ncols = 0;
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  std::vector<int> basis;        // basic column per row
  std::vector<bool> enterable;

  void pivot(int row, int col) {
    Rat piv = a[row][col];
    for (auto& x : a[row]) x /= piv;
    b[row] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == row) continue;
      Rat f = a[i][col];
      if (f == 0) continue;
      for (int j = 0; j < ncols; ++j)
        if (a[row][j] != 0) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    basis[row] = col;
  }

  void drop_row(int row) {
    a.erase(a.begin() + row);
    b.erase(b.begin() + row);
    basis.erase(basis.begin() + row);
    --m;
  }

  // Bland's rule: enter the smallest-index column with negative reduced cost,
  // leave on the minimum ratio breaking ties by smallest basic column.
  // Returns false when the objective is unbounded below.
  bool optimize(const std::vector<Rat>& cost) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < ncols && enter < 0; ++j) {
        if (!enterable[j]) continue;
        Rat r = cost[j];
        for (int i = 0; i < m; ++i) {
          const Rat& cb = cost[basis[i]];
          if (cb != 0 && a[i][j] != 0) r -= cb * a[i][j];
        }
        if (r < 0) enter = j;
      }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m; ++i) {
        if (a[i][enter] > 0) {
          Rat ratio = b[i] / a[i][enter];
          if (leave < 0 || ratio < best ||
              (ratio == best && basis[i] < basis[leave])) {
            leave = i;
            best = ratio;
          }
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpSolution simplex_solve(const LpProblem& problem) {
  problem.validate();
  int n = problem.num_vars();
  int m = static_cast<int>(problem.rows.size());
  if (n > 64 || m > 64) throw std::invalid_argument("LP exceeds 64 variables or 64 rows");

  bool maximize = problem.sense == Sense::Max;

  // Standard-form columns: original variables, split negative parts for free
  // variables, one slack/surplus per inequality row, one artificial per row.
  std::vector<int> neg_col(n, -1), aux_col(m, -1), art_col(m, -1);
  int ncols = n;
  for (int j = 0; j < n; ++j)
    if (!problem.var_nonneg[j]) neg_col[j] = ncols++;
  for (int i = 0; i < m; ++i)
    if (problem.rows[i].kind != RowKind::Eq) aux_col[i] = ncols++;
  for (int i = 0; i < m; ++i) art_col[i] = ncols++;
  int first_art = art_col.empty() ? ncols : art_col[0];

  std::vector<int> row_sign(m, 1);
  Tableau t;
  t.m = m;
  t.ncols = ncols;
  t.a.assign(m, std::vector<Rat>(ncols, Rat(0)));
  t.b.assign(m, Rat(0));
  t.basis.resize(m);
  t.enterable.assign(ncols, true);
  for (int i = 0; i < m; ++i) {
    const LpRow& row = problem.rows[i];
    int s = row.rhs < 0 ? -1 : 1;
    row_sign[i] = s;
    for (int j = 0; j < n; ++j) {
      Rat v = s * row.coeffs[j];
      t.a[i][j] = v;
      if (neg_col[j] >= 0) t.a[i][neg_col[j]] = -v;
    }
    if (aux_col[i] >= 0)
      t.a[i][aux_col[i]] = row.kind == RowKind::Ge ? Rat(-s) : Rat(s);
    t.a[i][art_col[i]] = 1;
    t.b[i] = s * row.rhs;
    t.basis[i] = art_col[i];
  }

  LpSolution sol;

  // Phase 1: minimize the sum of artificials.
  std::vector<Rat> cost1(ncols, Rat(0));
  for (int i = 0; i < m; ++i) cost1[art_col[i]] = 1;
  bool bounded = t.optimize(cost1);
  assert(bounded);
  (void)bounded;
  Rat infeasibility(0);
  for (int i = 0; i < t.m; ++i)
    if (t.basis[i] >= first_art) infeasibility += t.b[i];
  if (infeasibility > 0) {
    sol.status = LpStatus::Infeasible;
    return sol;
  }

  // Drive leftover artificials out of the basis; rows that cannot pivot are
  // redundant and get dropped (their duals are zero). Surviving original row
  // indices are tracked so duals map back.
  std::vector<int> orig_row(m);
  for (int i = 0; i < m; ++i) orig_row[i] = i;
  for (int i = t.m - 1; i >= 0; --i) {
    if (t.basis[i] < first_art) continue;
    int piv = -1;
    for (int j = 0; j < first_art && piv < 0; ++j)
      if (t.a[i][j] != 0) piv = j;
    if (piv >= 0) {
      t.pivot(i, piv);  // b[i] == 0, so feasibility survives any pivot sign
    } else {
      t.drop_row(i);
      orig_row.erase(orig_row.begin() + i);
    }
  }
  for (int i = 0; i < m; ++i) t.enterable[art_col[i]] = false;

  // Phase 2.
  std::vector<Rat> cost2(ncols, Rat(0));
  for (int j = 0; j < n; ++j) {
    Rat c = maximize ? Rat(-problem.objective[j]) : problem.objective[j];
    cost2[j] = c;
    if (neg_col[j] >= 0) cost2[neg_col[j]] = -c;
  }
  if (!t.optimize(cost2)) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }

  sol.status = LpStatus::Optimal;
  std::vector<Rat> colval(ncols, Rat(0));
  for (int i = 0; i < t.m; ++i) colval[t.basis[i]] = t.b[i];
  sol.primal.resize(n);
  Rat obj(0);
  for (int j = 0; j < n; ++j) {
    sol.primal[j] = colval[j];
    if (neg_col[j] >= 0) sol.primal[j] -= colval[neg_col[j]];
    obj += problem.objective[j] * sol.primal[j];
  }
  sol.objective = obj;

  // Duals: y = c_B B^{-1}, read off the artificial columns (they carry
  // B^{-1} for the surviving rows), then undo row scaling and Max negation.
  sol.dual.assign(m, Rat(0));
  for (int r = 0; r < t.m; ++r) {
    int oi = orig_row[r];
    Rat y(0);
    for (int i = 0; i < t.m; ++i) {
      const Rat& cb = cost2[t.basis[i]];
      if (cb != 0 && t.a[i][art_col[oi]] != 0) y += cb * t.a[i][art_col[oi]];
    }
    y *= row_sign[oi];
    if (maximize) y = -y;
    sol.dual[oi] = y;
  }
  sol.basis = t.basis;
  return sol;
}

LpProblem dual_of(const LpProblem& problem) {
  problem.validate();
  if (problem.sense != Sense::Min)
    throw std::invalid_argument("dual_of expects a Min problem");
  for (const auto& row : problem.rows)
    if (row.kind == RowKind::Le)
      throw std::invalid_argument("dual_of expects Eq or Ge rows");
  for (bool nn : problem.var_nonneg)
    if (!nn) throw std::invalid_argument("dual_of expects nonnegative variables");

  LpProblem dual;
  dual.sense = Sense::Max;
  for (const auto& row : problem.rows) {
    dual.var_labels.push_back(row.label);
    dual.var_nonneg.push_back(row.kind == RowKind::Ge);
    dual.objective.push_back(row.rhs);
  }
  for (int j = 0; j < problem.num_vars(); ++j) {
    LpRow row;
    row.label = problem.var_labels[j];
    row.kind = RowKind::Le;
    row.rhs = problem.objective[j];
    for (const auto& prow : problem.rows) row.coeffs.push_back(prow.coeffs[j]);
    dual.rows.push_back(std::move(row));
  }
  return dual;
}

int SlacknessReport::violations() const {
  int count = 0;
  for (const auto& p : variable_pairs) count += p.violated;
  for (const auto& p : row_pairs) count += p.violated;
  return count;
}

SlacknessReport check_complementary_slackness(const LpProblem& problem,
                                              const std::vector<Rat>& primal,
                                              const std::vector<Rat>& dual) {
  problem.validate();
  int n = problem.num_vars();
  int m = static_cast<int>(problem.rows.size());
  if (static_cast<int>(primal.size()) != n || static_cast<int>(dual.size()) != m)
    throw std::invalid_argument("solution dimensions disagree with problem");
  bool minimize = problem.sense == Sense::Min;

  SlacknessReport rep;
  rep.primal_objective = 0;
  for (int j = 0; j < n; ++j) rep.primal_objective += problem.objective[j] * primal[j];
  rep.dual_objective = 0;
  for (int i = 0; i < m; ++i) rep.dual_objective += problem.rows[i].rhs * dual[i];

  for (int i = 0; i < m; ++i) {
    const LpRow& row = problem.rows[i];
    Rat activity(0);
    for (int j = 0; j < n; ++j) activity += row.coeffs[j] * primal[j];
    Rat slack = activity - row.rhs;
    SlacknessPair pair;
    pair.label = row.label;
    pair.value = dual[i];
    pair.slack = slack;
    pair.tight = slack == 0;
    bool row_ok = row.kind == RowKind::Eq   ? slack == 0
                  : row.kind == RowKind::Ge ? slack >= 0
                                            : slack <= 0;
    if (!row_ok) rep.primal_feasible = false;
    bool dual_sign_ok = true;
    if (row.kind != RowKind::Eq) {
      bool wants_nonneg = (row.kind == RowKind::Ge) == minimize;
      dual_sign_ok = wants_nonneg ? dual[i] >= 0 : dual[i] <= 0;
    }
    if (!dual_sign_ok) rep.dual_feasible = false;
    pair.violated = !row_ok || !dual_sign_ok || (dual[i] != 0 && slack != 0);
    rep.row_pairs.push_back(pair);
  }

  for (int j = 0; j < n; ++j) {
    Rat pulled(0);
    for (int i = 0; i < m; ++i) pulled += problem.rows[i].coeffs[j] * dual[i];
    // Slack of the dual constraint, oriented so feasibility means >= 0.
    Rat dslack = minimize ? problem.objective[j] - pulled : pulled - problem.objective[j];
    SlacknessPair pair;
    pair.label = problem.var_labels[j];
    pair.value = primal[j];
    pair.slack = dslack;
    pair.tight = dslack == 0;
    bool var_ok = problem.var_nonneg[j] ? primal[j] >= 0 : true;
    if (!var_ok) rep.primal_feasible = false;
    bool dual_row_ok = problem.var_nonneg[j] ? dslack >= 0 : dslack == 0;
    if (!dual_row_ok) rep.dual_feasible = false;
    pair.violated = !var_ok || !dual_row_ok || (primal[j] != 0 && dslack != 0);
    rep.variable_pairs.push_back(pair);
  }
  return rep;
}

}  // namespace hc
