#pragma once

#include <string>
#include <vector>

#include "entwit/graph.hpp"
#include "entwit/partition.hpp"
#include "entwit/rational.hpp"

namespace entwit {

// Entanglement entropy (in bits) of the graph state across the cut
// {a, rest}: the GF(2) rank of the cross-adjacency block. Exact integer.
int cut_entropy(const Graph& g, const std::vector<int>& a);

// Chain edges crossing the cut; test oracle for the area-law bound
// S >= floor((boundaries+1)/2) on chains. Errors on non-chain graphs.
int boundary_count(const Graph& g, const std::vector<int>& a);

// One optimized constant 2^-S together with how it was attained.
struct ExtremeBound {
  Rational value;
  int entropy = 0;
  BlockBipartition cut;                      // first achiever in cut order
  int achiever_count = 0;                    // cuts attaining the optimum
  std::vector<BlockBipartition> co_achievers;  // further achievers, capped
};

inline constexpr int kCoAchieverCap = 16;

// Extremal 2^-S over all block bipartitions of a fixed partition.
// c_min feeds the fully-separable constant, c_max the genuine one.
struct BoundReport {
  ExtremeBound c_min;
  ExtremeBound c_max;
  std::vector<int> cut_entropies;  // per cut, in enumeration order
};
BoundReport c_min_c_max(const Graph& g, const Partition& p);

// The m-separability constant C_m = max over m-partitions of the minimal
// cut value 2^-S, with provenance.
struct CmBound {
  Rational value;
  int entropy = 0;     // min-max entropy: value == 2^-entropy
  Partition achiever;  // meaningful for exhaustive scans and known families
  bool tight = true;   // false when the value is only a valid upper bound
  std::string method;  // "exhaustive", "chain", "lattice", "star"
};

// Exhaustive scan over every m-partition (streamed, pruned, gated).
CmBound c_m_exhaustive(const Graph& g, int m, int enum_gate = 14);

// Closed forms: chains 2^-floor(m/2); 2-D lattices 2^-gamma(m), valid for
// N >= m(m-1)/2 and tight for m <= 5; stars 1/2 for every m. Errors when
// the graph family has no closed form or the validity condition fails.
CmBound c_m_analytic(const Graph& g, int m);
bool has_analytic_c_m(const Graph& g, int m);

// Smallest d with d(d+1)/2 >= m-1: the corner-triangle entropy exponent
// for 2-D lattice m-separability.
int lattice_gamma(int m);

// Partitions attaining the closed-form constants (used by tests and the
// analytic achiever): m-1 leading singletons on a chain; the m-1 first
// antidiagonal corner cells as singletons on a lattice.
Partition chain_optimal_partition(int n, int m);
Partition lattice_corner_partition(int rows, int cols, int m);

}  // namespace entwit
