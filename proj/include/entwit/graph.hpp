#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entwit/bitmatrix.hpp"

namespace entwit {

// Graph family hint carried by the builders; analytic bound formulas only
// apply when the family is known. Any structural edit resets it to custom.
enum class Family { custom, chain, lattice, ring, star, complete };

// Simple undirected graph on vertices 0..n-1: symmetric adjacency bit
// matrix with zero diagonal. Vertex v of the graph state carries stabilizer
// X_v on v and Z on each neighbor.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n, n) {}

  int n() const { return n_; }
  bool has_edge(int u, int v) const { return adj_.get(u, v); }
  void add_edge(int u, int v);
  void toggle_edge(int u, int v);

  const BitMatrix& adjacency() const { return adj_; }
  std::vector<int> neighbors(int v) const;
  int degree(int v) const;
  std::vector<std::pair<int, int>> edges() const;
  bool connected() const;

  Family family() const { return family_; }
  void set_family(Family f) { family_ = f; }
  // Lattice row/col counts; only meaningful when family() == lattice.
  int lattice_rows() const { return lat_rows_; }
  int lattice_cols() const { return lat_cols_; }
  void set_lattice_dims(int r, int c) { lat_rows_ = r; lat_cols_ = c; }

 private:
  int n_ = 0;
  BitMatrix adj_;
  Family family_ = Family::custom;
  int lat_rows_ = 0, lat_cols_ = 0;
};

Graph chain_graph(int n);
Graph lattice_graph(int rows, int cols);  // row-major vertex order
Graph ring_graph(int n);
Graph star_graph(int n);  // hub = vertex 0
Graph complete_graph(int n);
Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// Builder string: "chain:6", "lattice:5x5", "ring:5", "star:4", "complete:3".
Graph graph_from_builder(const std::string& spec);

std::string family_name(Family f);

// Vertex classes of a proper coloring: every class is an independent set,
// classes are disjoint and cover all vertices. Ordered by smallest member,
// so the class containing vertex 0 comes first.
struct Coloring {
  std::vector<std::vector<int>> classes;
  int k() const { return static_cast<int>(classes.size()); }
  std::vector<int> assignment(int n) const;
};

// BFS bipartition; empty when the graph has an odd cycle.
std::optional<Coloring> two_coloring(const Graph& g);

// Minimum proper coloring: greedy largest-degree-first upper bound, then
// exact backtracking. Deterministic: returns the lexicographically smallest
// assignment (by vertex index) among minimum colorings.
Coloring chromatic_coloring(const Graph& g);

bool is_independent_set(const Graph& g, const std::vector<int>& verts);
bool is_proper_coloring(const Graph& g, const Coloring& c);

// Toggle every edge among the neighbours of v (graph-state local
// complementation); the result is LU-equivalent as a graph state.
Graph local_complement(const Graph& g, int v);

struct SubgraphResult {
  Graph graph;              // induced subgraph on the kept vertices
  std::vector<int> old_of_new;  // new index -> original vertex
  std::vector<int> new_of_old;  // original vertex -> new index, -1 if dropped
};
SubgraphResult delete_vertices(const Graph& g, const std::vector<int>& drop);

// Rows = vertices of `a` (ascending), columns = vertices outside `a`
// (ascending), entries from the adjacency matrix. Its GF(2) rank is the
// entanglement entropy of the graph state across the cut.
BitMatrix cross_submatrix(const Graph& g, const std::vector<int>& a);

}  // namespace entwit
