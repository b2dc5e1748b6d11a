#include "hc/hardcore.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace hc {

const Polynomial& IndPolyEngine::eval_mask(uint64_t mask) {
  if (mask & ~g_.all_vertices()) throw std::invalid_argument("mask has bits outside graph");
  auto it = memo_.find(mask);
  if (it != memo_.end()) return it->second;

  Polynomial result;
  if (mask == 0) {
    result = Polynomial::one();
  } else {
    int best = -1, best_deg = -1;
    for (uint64_t m = mask; m;) {
      int v = std::countr_zero(m);
      m &= m - 1;
      int d = std::popcount(g_.neighbors(v) & mask);
      if (d > best_deg) {
        best_deg = d;
        best = v;
      }
    }
    if (best_deg == 0) {
      result = Polynomial::one_plus_x_pow(static_cast<unsigned long>(std::popcount(mask)));
    } else {
      // P(mask) = P(mask - v) + x * P(mask - N[v])
      Polynomial without = eval_mask(mask & ~(1ull << best));
      Polynomial with = eval_mask(mask & ~g_.closed_neighborhood(best));
      result = without + with.shifted(1);
    }
  }
  return memo_.emplace(mask, std::move(result)).first->second;
}

Polynomial independence_polynomial(const Graph& g) {
  IndPolyEngine engine(g);
  return engine.full();
}

int independence_number(const Graph& g) { return independence_polynomial(g).degree(); }

void for_each_independent_set(const Graph& g,
                              const std::function<void(uint64_t, int)>& fn) {
  // Depth-first over vertices in order; runs one path per independent set.
  struct Rec {
    const Graph& g;
    const std::function<void(uint64_t, int)>& fn;
    void go(int v, uint64_t chosen, uint64_t blocked, int size) {
      if (v == g.n()) {
        fn(chosen, size);
        return;
      }
      go(v + 1, chosen, blocked, size);
      if (!((blocked >> v) & 1))
        go(v + 1, chosen | (1ull << v), blocked | g.neighbors(v), size + 1);
    }
  } rec{g, fn};
  rec.go(0, 0, 0, 0);
}

Rat occupancy_fraction(const Graph& g, const Rat& lambda) {
  if (g.n() == 0) throw std::domain_error("occupancy fraction of empty graph undefined");
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  Polynomial p = independence_polynomial(g);
  Rat value = p.eval(lambda);
  Rat dvalue = p.derivative().eval(lambda);
  return lambda * dvalue / (g.n() * value);
}

OccupancyReport vertex_probabilities(const Graph& g, const Rat& lambda) {
  if (g.n() == 0) throw std::domain_error("vertex probabilities of empty graph undefined");
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  IndPolyEngine engine(g);
  uint64_t full = g.all_vertices();
  Rat z = engine.full().eval(lambda);
  OccupancyReport rep;
  rep.lambda = lambda;
  rep.p.resize(g.n());
  rep.q.resize(g.n());
  Rat total(0);
  for (int v = 0; v < g.n(); ++v) {
    Rat open = engine.eval_mask(full & ~g.neighbors(v)).eval(lambda);
    Rat closed = engine.eval_mask(full & ~g.closed_neighborhood(v)).eval(lambda);
    rep.q[v] = open / z;
    rep.p[v] = lambda * closed / z;
    total += rep.p[v];
  }
  rep.alpha = total / g.n();
  return rep;
}

std::vector<std::vector<Int>> uncovered_neighbor_counts(const Graph& g) {
  auto d_opt = regular_degree(g);
  if (!d_opt) throw std::invalid_argument("graph must be regular");
  int d = *d_opt;
  int n = g.n();
  std::vector<std::vector<Int>> counts(d + 1, std::vector<Int>(n + 1, Int(0)));
  for_each_independent_set(g, [&](uint64_t set, int size) {
    uint64_t covered = 0;
    for (uint64_t m = set; m;) {
      int w = std::countr_zero(m);
      m &= m - 1;
      covered |= g.neighbors(w);
    }
    for (int v = 0; v < n; ++v) {
      int i = std::popcount(g.neighbors(v) & ~covered);
      counts[i][size] += 1;
    }
  });
  return counts;
}

Rat YDistribution::mean() const {
  Rat m(0);
  for (size_t i = 1; i < y.size(); ++i) m += Rat(static_cast<long>(i)) * y[i];
  return m;
}

YDistribution y_distribution(const Graph& g, const Rat& lambda) {
  if (g.n() == 0) throw std::domain_error("y distribution of empty graph undefined");
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  auto counts = uncovered_neighbor_counts(g);
  int d = static_cast<int>(counts.size()) - 1;
  int n = g.n();
  YDistribution dist;
  dist.d = d;
  dist.lambda = lambda;
  dist.y.assign(d + 1, Rat(0));
  Rat norm(0);
  std::vector<Rat> powers(n + 1);
  powers[0] = 1;
  for (int k = 1; k <= n; ++k) powers[k] = powers[k - 1] * lambda;
  for (int i = 0; i <= d; ++i) {
    Rat w(0);
    for (int k = 0; k <= n; ++k)
      if (counts[i][k] != 0) w += Rat(counts[i][k]) * powers[k];
    dist.y[i] = w;
    norm += w;
  }
  for (auto& v : dist.y) v /= norm;
  return dist;
}

LocalGraphDistribution local_graph_distribution(const Graph& g, const Rat& lambda) {
  if (g.n() == 0) throw std::domain_error("local distribution of empty graph undefined");
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  auto d_opt = regular_degree(g);
  if (!d_opt) throw std::invalid_argument("graph must be regular");
  int d = *d_opt;
  if (d > 8) throw std::invalid_argument("local graph distribution needs degree <= 8");
  int n = g.n();

  std::vector<Rat> powers(n + 1);
  powers[0] = 1;
  for (int k = 1; k <= n; ++k) powers[k] = powers[k - 1] * lambda;

  // weight by canonical key, plus a cached canonical pass keyed on the packed
  // induced adjacency so most (v, I) pairs skip the permutation search
  std::map<uint64_t, Rat> weights;
  std::map<uint64_t, Graph> reps;
  std::unordered_map<uint64_t, uint64_t> canon_cache;

  auto account = [&](const Graph& h, const Rat& w) {
    uint64_t packed = 0;
    for (int j = 1; j < h.n(); ++j)
      for (int i = 0; i < j; ++i) packed = (packed << 1) | (h.has_edge(i, j) ? 1 : 0);
    packed |= static_cast<uint64_t>(h.n()) << 56;
    auto [it, fresh] = canon_cache.try_emplace(packed, 0);
    if (fresh) {
      it->second = canonical_label(h);
      reps.emplace(it->second, canonical_form(h));
    }
    weights[it->second] += w;
  };

  for_each_independent_set(g, [&](uint64_t set, int size) {
    Rat w = powers[size];
    for (int v = 0; v < n; ++v) {
      uint64_t outside = set & ~g.neighbors(v);
      uint64_t covered = 0;
      for (uint64_t m = outside; m;) {
        int u = std::countr_zero(m);
        m &= m - 1;
        covered |= g.neighbors(u);
      }
      uint64_t uncovered = g.neighbors(v) & ~covered;
      account(induced_subgraph(g, uncovered), w);
    }
  });

  Rat norm(0);
  for (auto& [key, w] : weights) norm += w;
  LocalGraphDistribution dist;
  dist.d = d;
  dist.lambda = lambda;
  for (auto& [key, w] : weights)
    dist.entries.push_back({reps.at(key), key, w / norm});
  return dist;
}

Rat neighborly_residual(const LocalGraphDistribution& dist) {
  const Rat& lambda = dist.lambda;
  Rat inv_term(0), deriv_term(0);
  for (const auto& e : dist.entries) {
    Polynomial p = independence_polynomial(e.rep);
    Rat value = p.eval(lambda);
    inv_term += e.prob / value;
    deriv_term += e.prob * p.derivative().eval(lambda) / value;
  }
  return lambda / (1 + lambda) * inv_term - lambda / dist.d * deriv_term;
}

}  // namespace hc
