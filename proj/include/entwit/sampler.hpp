#pragma once

#include <cstdint>
#include <vector>

#include "entwit/graph.hpp"
#include "entwit/rational.hpp"
#include "entwit/rng.hpp"
#include "entwit/witness.hpp"

namespace entwit {

// One measurement setting per color class: X on the class, Z on the rest.
struct MeasurementSetting {
  std::vector<int> x_set;
  std::vector<int> z_set;
};

std::vector<MeasurementSetting> settings_for_coloring(const Graph& g, const Coloring& coloring);

// Raw shot table: bit q of shot s is the outcome of qubit q, 0 for +1 and
// 1 for -1, packed 64 per word.
class OutcomeBuffer {
 public:
  OutcomeBuffer() = default;
  OutcomeBuffer(int n, long long capacity)
      : n_(n), words_(BitMatrix::words_per_row(n)) {
    bits_.reserve(static_cast<size_t>(capacity) * words_);
  }

  int n() const { return n_; }
  int words_per_shot() const { return words_; }
  long long shots() const { return words_ ? static_cast<long long>(bits_.size()) / words_ : 0; }

  void append(const uint64_t* shot_words) {
    bits_.insert(bits_.end(), shot_words, shot_words + words_);
  }
  const uint64_t* shot(long long s) const { return bits_.data() + s * words_; }
  bool get(long long s, int q) const { return (shot(s)[q / 64] >> (q % 64)) & 1; }

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;
};

// Samples computational outcomes of the graph state measured in a product
// X/Z setting, mixed with white noise: each shot picks the uniform branch
// with probability p. Dense path: Born-rule CDF over all 2^n outcomes.
// Tableau path (any n): the stabilizer generators in binary symplectic
// form, Hadamard-rotated on the X qubits, Gauss-eliminated once into
// parity constraints; each shot draws fresh free bits and back-substitutes.
class SettingSampler {
 public:
  SettingSampler(const Graph& g, const MeasurementSetting& setting,
                 int dense_gate = 14);

  int n() const { return n_; }
  bool dense_path() const { return dense_; }
  int constraint_count() const { return static_cast<int>(pivots_.size()); }

  // One shot into out_words (words_per_shot() words).
  void sample_shot(uint64_t* out_words, double noise_p, Rng& rng) const;
  OutcomeBuffer sample(long long shots, double noise_p, Rng& rng, long long raw_cap) const;

  // Noiseless outcome probabilities (dense path only; test hook).
  const std::vector<double>& dense_probabilities() const;

 private:
  int n_ = 0;
  int words_ = 0;
  bool dense_ = false;
  std::vector<double> probs_;  // dense
  std::vector<double> cdf_;    // dense
  // Tableau: reduced parity constraints; row i forces bit pivots_[i].
  std::vector<uint64_t> constr_;  // constraint rows, words_ each
  std::vector<char> constr_sign_;
  std::vector<int> pivots_;
  std::vector<uint64_t> pivot_mask_;  // words_: union of pivot bits
};

// Hit statistics for one projector: a shot counts when every stabilizer
// parity of the class is +1. std_err is the sample standard deviation of
// the 0/1 shot values divided by sqrt(shots) (0 when shots < 2).
struct ProjectorCounts {
  long long hits = 0;
  long long shots = 0;
  double mean = 0.0;
  double std_err = 0.0;
  ProjectorEstimate estimate() const {
    return ProjectorEstimate{shots ? Rational(hits, shots) : Rational(0), std_err, shots};
  }
};

// Parity masks (vertex + its neighbours) for each class member, mapped
// through parent_vertices when the witness graph is a subsystem of the
// measured graph. Width = words of the measured register.
class ProjectorEvaluator {
 public:
  ProjectorEvaluator(const Graph& g, const std::vector<int>& x_class, int register_n,
                     const std::vector<int>& parent_vertices = {});
  bool hit(const uint64_t* shot_words) const;
  void tally(const uint64_t* shot_words);
  ProjectorCounts finish() const;

 private:
  int words_ = 0;
  std::vector<uint64_t> masks_;  // one row of words_ per class member
  ProjectorCounts counts_;
};

ProjectorCounts estimate_projector(const Graph& g, const std::vector<int>& x_class,
                                   const OutcomeBuffer& outcomes);

inline constexpr long long kRawShotCap = 1'000'000;

struct SettingResult {
  MeasurementSetting setting;
  OutcomeBuffer outcomes;  // raw shots, capped at raw_cap
  bool truncated = false;  // true when only sufficient statistics remain
  ProjectorCounts counts;  // over every shot, stored or not
};

// Full audit trail of one simulated experiment. estimates() feeds
// evaluate() directly.
struct ExperimentRecord {
  Graph graph;
  Coloring coloring;
  long long shots = 0;
  double noise_p = 0.0;
  uint64_t seed = 0;
  std::vector<SettingResult> settings;
  std::vector<ProjectorEstimate> estimates() const;
};

// Deterministic under (seed): setting l always consumes its own stream
// rng.split(l), so thread count cannot change results. threads = 0 reads
// ENTWIT_THREADS (default 1).
ExperimentRecord run_experiment(const Graph& g, const Coloring& coloring, long long shots,
                                double noise_p, uint64_t seed, int dense_gate = 14,
                                long long raw_cap = kRawShotCap, int threads = 0);

}  // namespace entwit
