#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hc {

// Simple undirected graph on at most 64 vertices, adjacency kept as one
// bitmask per vertex. Vertices are 0..n-1.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  uint64_t neighbors(int v) const { return adj_[check_vertex(v)]; }
  uint64_t closed_neighborhood(int v) const { return adj_[check_vertex(v)] | (1ull << v); }
  int degree(int v) const;
  int edge_count() const;
  // Mask with one bit per vertex.
  uint64_t all_vertices() const { return n_ == 64 ? ~0ull : (1ull << n_) - 1; }

  bool operator==(const Graph&) const = default;

 private:
  int check_vertex(int v) const;
  int n_ = 0;
  std::vector<uint64_t> adj_;
};

struct FamilySpec {
  enum class Family { Complete, Empty, Cycle, Biclique, PetersenGeneralized, T3 };
  Family family;
  std::vector<int> params;
};

Graph generate(const FamilySpec& spec);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
// K_{d,d}
Graph biclique_graph(int d);
Graph generalized_petersen(int n, int k);
// Radius-2 ball in the infinite cubic tree: a center of degree 3 whose three
// neighbors each carry two leaves. 10 vertices, 9 edges.
Graph t3_tree();

std::optional<int> regular_degree(const Graph& g);
bool is_triangle_free(const Graph& g);
bool is_connected(const Graph& g);
std::vector<uint64_t> components(const Graph& g);
// True iff g is a disjoint union of complete graphs on clique_size vertices.
bool is_disjoint_clique_union(const Graph& g, int clique_size);

// Vertices of mask, relabeled in increasing order.
Graph induced_subgraph(const Graph& g, uint64_t mask);

// Canonical key for graphs on at most 8 vertices (brute force over vertex
// permutations). Equal keys <=> isomorphic. The key orders first by n.
uint64_t canonical_label(const Graph& g);
Graph canonical_form(const Graph& g);

// All isomorphism classes on 0..max_vertices vertices (max_vertices <= 5),
// sorted by (vertex count, canonical key); the empty graph on 0 vertices
// comes first.
std::vector<Graph> enumerate_nonisomorphic(int max_vertices);

// All connected cubic triangle-free graphs on n vertices (4 <= n <= 14,
// n even), possibly with repeats within an isomorphism class.
std::vector<Graph> naive_cubic_tf_corpus(int n);

}  // namespace hc
