#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entwit/entropy.hpp"
#include "entwit/graph.hpp"
#include "entwit/partition.hpp"
#include "entwit/rational.hpp"

namespace entwit {

// What a witness excludes. Each kind fixes the constant c in
// W = c*I - sum_l P_l; a measured value below zero rules the model out.
//   fully_separable  product over the blocks of a fixed partition
//   genuine          any biseparable split along the fixed partition
//   m_separable      any split into at least m parts (partition-free)
//   gme              any biseparable state at all (constant k - 1/2)
enum class WitnessKind { fully_separable, genuine, m_separable, gme };

std::string witness_kind_name(WitnessKind k);
WitnessKind witness_kind_from_name(const std::string& name);

struct Witness {
  WitnessKind kind = WitnessKind::gme;
  Graph graph;        // the graph whose stabilizer projectors are measured
  Coloring coloring;  // one measurement setting per class
  Rational constant;  // c = k - 1 + C
  Rational c_term;    // the C part alone, 2^-S at the relevant optimum

  // Context, depending on kind.
  Partition partition;  // fully_separable / genuine
  int m = 0;            // m_separable
  bool c_tight = true;  // false when C is only a safe upper bound
  std::string c_method; // "cuts", "exhaustive", "chain", "lattice", "star"

  // Subsystem witnesses evaluate on a marginal of a larger experiment.
  bool is_subsystem = false;
  std::vector<int> parent_vertices;  // local vertex -> vertex in the parent graph

  int k() const { return coloring.k(); }
};

// A single projector estimate. Exact statements carry stderr == 0; shot
// estimates keep the exact hit ratio plus its binomial standard error.
struct ProjectorEstimate {
  Rational value;
  double std_err = 0.0;
  long long shots = 0;  // 0 for exact expectations
};

struct WitnessVerdict {
  Rational value;     // c - sum_l estimate_l, exact
  double value_d = 0.0;
  double std_err = 0.0;  // combined in quadrature
  double z = 0.0;        // -value/stderr; detection needs z > z_threshold
  bool exact = false;    // no statistical error: detection is value < 0
  bool detected = false;
  std::string interpretation;
};

// Witnesses refuse disconnected graphs (a disconnected graph state is a
// product state across components, so the fidelity machinery breaks down)
// and improper colorings.
Witness build_witness(const Graph& g, const Coloring& coloring, WitnessKind kind,
                      const std::optional<Partition>& partition = std::nullopt, int m = 0,
                      int enum_gate = 14);

// Witness on the induced subgraph keeping only the listed partition
// blocks; its projectors act on the kept vertices, so it evaluates on
// marginals of data taken for the full graph.
Witness build_subsystem_witness(const Graph& g, const Coloring& coloring,
                                const Partition& partition, const std::vector<int>& keep_blocks,
                                WitnessKind kind, int enum_gate = 14);

WitnessVerdict evaluate(const Witness& w, const std::vector<ProjectorEstimate>& estimates,
                        double z_threshold = 3.0);

// <P_l> under rho = (1-p)|G><G| + p I/2^N: depends only on the class size.
Rational white_noise_expectation(const Rational& p, int class_size);

// Largest white-noise rate the witness still detects:
// p_limit = (1 - C) / (k - sum_l 2^-n_l). Always exceeds 1/(2k).
Rational noise_threshold(const Witness& w);

// One m-separability verdict per m, plus the strongest conclusion.
// Detection is monotone: once some m detects, all larger m do.
struct IntactnessReport {
  struct Entry {
    int m = 0;
    Rational constant;
    bool tight = true;
    WitnessVerdict verdict;
  };
  std::vector<Entry> entries;   // consecutive m starting at 2
  int max_m_covered = 1;        // largest m a constant was available for
  int smallest_detected_m = 0;  // 0 = nothing detected
  int intactness_bound = 0;     // entanglement intactness <= this (0 = none shown)
  std::string interpretation;
};

IntactnessReport intactness_scan(const Graph& g, const Coloring& coloring,
                                 const std::vector<ProjectorEstimate>& estimates,
                                 double z_threshold = 3.0, int enum_gate = 14);

}  // namespace entwit
