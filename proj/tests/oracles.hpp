// Slow reference implementations the unit tests compare against.
#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "hc/graph.hpp"
#include "hc/lp.hpp"
#include "hc/polynomial.hpp"

namespace oracle {

// Independence polynomial by checking every one of the 2^n subsets.
inline hc::Polynomial brute_indpoly(const hc::Graph& g) {
  assert(g.n() <= 25);
  std::vector<hc::Int> coeffs(g.n() + 1, hc::Int(0));
  for (uint64_t mask = 0;; ++mask) {
    bool independent = true;
    for (uint64_t rest = mask; rest && independent; rest &= rest - 1)
      if (g.neighbors(std::countr_zero(rest)) & mask) independent = false;
    if (independent) coeffs[std::popcount(mask)] += 1;
    if (mask == g.all_vertices()) break;
  }
  return hc::Polynomial(coeffs);
}

namespace detail {
inline bool extend_iso(const hc::Graph& a, const hc::Graph& b,
                       std::vector<int>& map, std::vector<bool>& used, int v) {
  if (v == a.n()) return true;
  for (int w = 0; w < b.n(); ++w) {
    if (used[w] || b.degree(w) != a.degree(v)) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (a.has_edge(u, v) != b.has_edge(map[u], w)) ok = false;
    if (!ok) continue;
    map[v] = w;
    used[w] = true;
    if (extend_iso(a, b, map, used, v + 1)) return true;
    used[w] = false;
  }
  return false;
}
}  // namespace detail

// Backtracking isomorphism test; fine up to ~14 vertices.
inline bool isomorphic(const hc::Graph& a, const hc::Graph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.n(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> map(a.n());
  std::vector<bool> used(b.n(), false);
  return detail::extend_iso(a, b, map, used, 0);
}

inline hc::Graph relabeled(const hc::Graph& g, const std::vector<int>& perm) {
  hc::Graph h(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.has_edge(u, v)) h.add_edge(perm[u], perm[v]);
  return h;
}

inline hc::Graph random_relabel(const hc::Graph& g, std::mt19937& rng) {
  std::vector<int> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabeled(g, perm);
}

inline hc::Graph random_graph(int n, std::mt19937& rng, double p = 0.5) {
  hc::Graph g(n);
  std::bernoulli_distribution flip(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (flip(rng)) g.add_edge(u, v);
  return g;
}

namespace detail {
// Exact Gaussian elimination; nullopt when the matrix is singular.
inline std::optional<std::vector<hc::Rat>> solve_square(
    std::vector<std::vector<hc::Rat>> m, std::vector<hc::Rat> rhs) {
  const int n = static_cast<int>(rhs.size());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n && pivot < 0; ++r)
      if (m[r][col] != 0) pivot = r;
    if (pivot < 0) return std::nullopt;
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      hc::Rat f = m[r][col] / m[col][col];
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<hc::Rat> x(n);
  for (int i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}
}  // namespace detail

// Minimum of the objective over all vertices of {x : rows hold, x >= 0},
// found by solving every square subsystem of active constraints. Requires a
// Min problem with nonnegative variables and a bounded feasible region;
// nullopt means no feasible vertex (infeasible for bounded regions).
inline std::optional<hc::Rat> vertex_enumeration_optimum(const hc::LpProblem& p) {
  assert(p.sense == hc::Sense::Min);
  const int n = p.num_vars();
  assert(n <= 8);
  for (bool nonneg : p.var_nonneg) assert(nonneg);

  struct Constraint {
    std::vector<hc::Rat> coeffs;
    hc::Rat rhs;
    hc::RowKind kind;
  };
  std::vector<Constraint> cons;
  for (const hc::LpRow& row : p.rows) cons.push_back({row.coeffs, row.rhs, row.kind});
  for (int j = 0; j < n; ++j) {
    std::vector<hc::Rat> e(n, hc::Rat(0));
    e[j] = 1;
    cons.push_back({e, hc::Rat(0), hc::RowKind::Ge});
  }

  const int total = static_cast<int>(cons.size());
  if (total < n) return std::nullopt;
  std::vector<bool> pick(total, false);
  std::fill(pick.begin(), pick.begin() + n, true);

  std::optional<hc::Rat> best;
  do {
    std::vector<std::vector<hc::Rat>> m;
    std::vector<hc::Rat> rhs;
    for (int i = 0; i < total; ++i) {
      if (!pick[i]) continue;
      m.push_back(cons[i].coeffs);
      rhs.push_back(cons[i].rhs);
    }
    auto x = detail::solve_square(std::move(m), std::move(rhs));
    if (!x) continue;
    bool feasible = true;
    for (const Constraint& c : cons) {
      hc::Rat lhs(0);
      for (int j = 0; j < n; ++j) lhs += c.coeffs[j] * (*x)[j];
      if (c.kind == hc::RowKind::Eq ? lhs != c.rhs
          : c.kind == hc::RowKind::Ge ? lhs < c.rhs
                                      : lhs > c.rhs) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;
    hc::Rat obj(0);
    for (int j = 0; j < n; ++j) obj += p.objective[j] * (*x)[j];
    if (!best || obj < *best) best = obj;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

}  // namespace oracle
