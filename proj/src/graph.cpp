#include "hc/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace hc {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("vertex count out of range");
  adj_.assign(static_cast<size_t>(n), 0);
}

int Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  return v;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self loop");
  adj_[u] |= 1ull << v;
  adj_[v] |= 1ull << u;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(v);
  return (adj_[check_vertex(u)] >> v) & 1;
}

int Graph::degree(int v) const { return std::popcount(adj_[check_vertex(v)]); }

int Graph::edge_count() const {
  int total = 0;
  for (uint64_t a : adj_) total += std::popcount(a);
  return total / 2;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph biclique_graph(int d) {
  if (d < 1 || 2 * d > Graph::kMaxVertices)
    throw std::invalid_argument("biclique side out of range");
  Graph g(2 * d);
  for (int u = 0; u < d; ++u)
    for (int v = d; v < 2 * d; ++v) g.add_edge(u, v);
  return g;
}

Graph generalized_petersen(int n, int k) {
  if (n < 3 || 2 * n > Graph::kMaxVertices) throw std::invalid_argument("GP(n,k) needs 3 <= n <= 32");
  if (k < 1 || 2 * k >= n) throw std::invalid_argument("GP(n,k) needs 1 <= k < n/2");
  Graph g(2 * n);
  for (int v = 0; v < n; ++v) {
    g.add_edge(v, (v + 1) % n);      // outer cycle
    g.add_edge(v, n + v);            // spokes
    g.add_edge(n + v, n + (v + k) % n);  // inner star polygon
  }
  return g;
}

Graph t3_tree() {
  Graph g(10);
  for (int i = 1; i <= 3; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, 2 * i + 2);
    g.add_edge(i, 2 * i + 3);
  }
  return g;
}

Graph generate(const FamilySpec& spec) {
  auto want = [&](size_t k) {
    if (spec.params.size() != k) throw std::invalid_argument("wrong parameter count for family");
  };
  switch (spec.family) {
    case FamilySpec::Family::Complete: want(1); return complete_graph(spec.params[0]);
    case FamilySpec::Family::Empty: want(1); return empty_graph(spec.params[0]);
    case FamilySpec::Family::Cycle: want(1); return cycle_graph(spec.params[0]);
    case FamilySpec::Family::Biclique: want(1); return biclique_graph(spec.params[0]);
    case FamilySpec::Family::PetersenGeneralized:
      want(2);
      return generalized_petersen(spec.params[0], spec.params[1]);
    case FamilySpec::Family::T3: want(0); return t3_tree();
  }
  throw std::invalid_argument("unknown family");
}

std::optional<int> regular_degree(const Graph& g) {
  if (g.n() == 0) return 0;
  int d = g.degree(0);
  for (int v = 1; v < g.n(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

bool is_triangle_free(const Graph& g) {
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.has_edge(u, v) && (g.neighbors(u) & g.neighbors(v))) return false;
  return true;
}

std::vector<uint64_t> components(const Graph& g) {
  std::vector<uint64_t> comps;
  uint64_t seen = 0;
  for (int v = 0; v < g.n(); ++v) {
    if ((seen >> v) & 1) continue;
    uint64_t comp = 1ull << v;
    uint64_t frontier = comp;
    while (frontier) {
      uint64_t next = 0;
      for (uint64_t f = frontier; f;) {
        int u = std::countr_zero(f);
        f &= f - 1;
        next |= g.neighbors(u);
      }
      frontier = next & ~comp;
      comp |= next;
    }
    comps.push_back(comp);
    seen |= comp;
  }
  return comps;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_disjoint_clique_union(const Graph& g, int clique_size) {
  if (clique_size < 1) throw std::invalid_argument("clique size must be positive");
  for (uint64_t comp : components(g)) {
    if (std::popcount(comp) != clique_size) return false;
    for (uint64_t m = comp; m;) {
      int v = std::countr_zero(m);
      m &= m - 1;
      if ((g.neighbors(v) & comp) != (comp & ~(1ull << v))) return false;
    }
  }
  return true;
}

Graph induced_subgraph(const Graph& g, uint64_t mask) {
  if (mask & ~g.all_vertices()) throw std::invalid_argument("mask has bits outside graph");
  std::vector<int> verts;
  for (uint64_t m = mask; m;) {
    verts.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  Graph h(static_cast<int>(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (g.has_edge(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

namespace {

// Upper-triangle edge bits in column-major pair order (0,1),(0,2),(1,2),...
// laid out from the high end so lexicographically smaller bit strings compare
// smaller as integers.
uint64_t pack_edges(const Graph& g, const std::vector<int>& order) {
  int n = g.n();
  uint64_t bits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      bits <<= 1;
      if (g.has_edge(order[i], order[j])) bits |= 1;
    }
  return bits;
}

Graph unpack_edges(int n, uint64_t bits) {
  Graph g(n);
  int total = n * (n - 1) / 2;
  int t = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if ((bits >> (total - 1 - t)) & 1) g.add_edge(i, j);
      ++t;
    }
  return g;
}

uint64_t key_of(int n, uint64_t bits) { return (static_cast<uint64_t>(n) << 56) | bits; }

uint64_t min_edge_bits(const Graph& g) {
  int n = g.n();
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  uint64_t best = ~0ull;
  do {
    best = std::min(best, pack_edges(g, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace

uint64_t canonical_label(const Graph& g) {
  if (g.n() > 8) throw std::invalid_argument("canonical_label supports at most 8 vertices");
  return key_of(g.n(), min_edge_bits(g));
}

Graph canonical_form(const Graph& g) {
  if (g.n() > 8) throw std::invalid_argument("canonical_form supports at most 8 vertices");
  return unpack_edges(g.n(), min_edge_bits(g));
}

std::vector<Graph> enumerate_nonisomorphic(int max_vertices) {
  if (max_vertices < 0 || max_vertices > 5)
    throw std::invalid_argument("enumerate_nonisomorphic supports at most 5 vertices");
  std::vector<Graph> out;
  for (int n = 0; n <= max_vertices; ++n) {
    int pairs = n * (n - 1) / 2;
    std::map<uint64_t, Graph> classes;
    for (uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
      Graph g = unpack_edges(n, mask);
      classes.emplace(canonical_label(g), canonical_form(g));
    }
    for (auto& [key, rep] : classes) out.push_back(rep);
  }
  return out;
}

namespace {

struct CubicTfGen {
  int n;
  std::vector<uint64_t> adj;
  std::vector<int> deg;
  int introduced;
  std::vector<Graph>* out;

  void run() {
    adj.assign(static_cast<size_t>(n), 0);
    deg.assign(static_cast<size_t>(n), 0);
    introduced = 4;
    for (int v = 1; v <= 3; ++v) link(0, v);
    next_vertex();
    for (int v = 1; v <= 3; ++v) unlink(0, v);
  }

  void link(int u, int v) {
    adj[u] |= 1ull << v;
    adj[v] |= 1ull << u;
    ++deg[u];
    ++deg[v];
  }

  void unlink(int u, int v) {
    adj[u] &= ~(1ull << v);
    adj[v] &= ~(1ull << u);
    --deg[u];
    --deg[v];
  }

  void next_vertex() {
    int u = -1;
    for (int v = 0; v < introduced; ++v)
      if (deg[v] < 3) { u = v; break; }
    if (u < 0) {
      // Every introduced vertex is saturated; fresh vertices would start a
      // second component.
      if (introduced == n) emit();
      return;
    }
    saturate(u, u + 1);
  }

  void saturate(int u, int lo) {
    if (deg[u] == 3) {
      next_vertex();
      return;
    }
    int need = 3 - deg[u];
    int fresh = n - introduced;

    std::vector<int> cands;
    int usable = 0;
    for (int w = lo; w < introduced; ++w) {
      if (deg[w] >= 3) continue;
      if ((adj[u] >> w) & 1) continue;
      if (adj[u] & adj[w]) continue;  // common neighbor => triangle
      ++usable;
      bool twin = false;
      for (int w2 : cands)
        if (adj[w2] == adj[w]) { twin = true; break; }
      if (!twin) cands.push_back(w);
    }
    if (usable + std::min(fresh, need) < need) return;

    for (int w : cands) {
      link(u, w);
      saturate(u, w + 1);
      unlink(u, w);
    }
    if (fresh > 0) {
      int w = introduced++;
      link(u, w);
      saturate(u, w + 1);
      unlink(u, w);
      --introduced;
    }
  }

  void emit() {
    Graph g(n);
    for (int v = 0; v < n; ++v)
      for (uint64_t m = adj[v] & ~((1ull << (v + 1)) - 1); m;) {
        int w = std::countr_zero(m);
        m &= m - 1;
        g.add_edge(v, w);
      }
    out->push_back(g);
  }
};

}  // namespace

std::vector<Graph> naive_cubic_tf_corpus(int n) {
  if (n < 4 || n > 14 || n % 2 != 0)
    throw std::invalid_argument("corpus size must be even, between 4 and 14");
  std::vector<Graph> out;
  if (n == 4) return out;  // K4 is the only connected cubic graph on 4 vertices
  CubicTfGen gen{n, {}, {}, 0, &out};
  gen.run();
  return out;
}

}  // namespace hc
