#pragma once

#include <functional>
#include <unordered_map>
#include <vector>

#include "hc/graph.hpp"
#include "hc/polynomial.hpp"

namespace hc {

// Memoized independence-polynomial evaluator over vertex subsets of a fixed
// graph. Computes P_{G[mask]}(x) by deleting/contracting a maximum-degree
// vertex; isolated-vertex blocks collapse to (1+x)^k.
class IndPolyEngine {
 public:
  explicit IndPolyEngine(const Graph& g) : g_(g) {}

  const Graph& graph() const { return g_; }
  const Polynomial& full() { return eval_mask(g_.all_vertices()); }
  const Polynomial& eval_mask(uint64_t mask);

 private:
  Graph g_;
  // Node-based map: returned references stay valid across later insertions.
  // The table grows with use and is never evicted.
  std::unordered_map<uint64_t, Polynomial> memo_;
};

Polynomial independence_polynomial(const Graph& g);
int independence_number(const Graph& g);

// Calls fn(set, size) once per independent set, the empty set included.
void for_each_independent_set(const Graph& g,
                              const std::function<void(uint64_t, int)>& fn);

struct OccupancyReport {
  Rat lambda;
  Rat alpha;
  std::vector<Rat> p;  // p_v = P(v occupied)
  std::vector<Rat> q;  // q_v = P(N(v) unoccupied)
};

Rat occupancy_fraction(const Graph& g, const Rat& lambda);
OccupancyReport vertex_probabilities(const Graph& g, const Rat& lambda);

// counts[i][k] = number of pairs (v, I) with I independent, |I| = k, and
// exactly i neighbors of v uncovered (u in N(v) with I. N(u) empty).
// Requires g regular; the outer index runs 0..d.
std::vector<std::vector<Int>> uncovered_neighbor_counts(const Graph& g);

struct YDistribution {
  int d;
  Rat lambda;
  std::vector<Rat> y;  // y[i] = P(Y = i), i = 0..d
  Rat mean() const;
};

YDistribution y_distribution(const Graph& g, const Rat& lambda);

struct LocalGraphDistribution {
  struct Entry {
    Graph rep;      // canonical representative
    uint64_t key;   // canonical key
    Rat prob;
  };
  int d;
  Rat lambda;
  std::vector<Entry> entries;  // sorted by key
};

LocalGraphDistribution local_graph_distribution(const Graph& g, const Rat& lambda);

// (lambda/(1+lambda)) E[1/P_H(lambda)] - (lambda/d) E[P_H'(lambda)/P_H(lambda)]
// over the distribution; identically zero when the distribution comes from a
// d-regular graph.
Rat neighborly_residual(const LocalGraphDistribution& dist);

}  // namespace hc
