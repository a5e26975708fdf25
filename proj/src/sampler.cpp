#include "entwit/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "entwit/statevec.hpp"

namespace entwit {

std::vector<MeasurementSetting> settings_for_coloring(const Graph& g, const Coloring& coloring) {
  if (!is_proper_coloring(g, coloring)) throw std::invalid_argument("coloring must be proper");
  std::vector<MeasurementSetting> out;
  for (const auto& cl : coloring.classes) {
    MeasurementSetting s;
    s.x_set = cl;
    std::vector<char> in_x(g.n(), 0);
    for (int v : cl) in_x[v] = 1;
    for (int v = 0; v < g.n(); ++v)
      if (!in_x[v]) s.z_set.push_back(v);
    out.push_back(std::move(s));
  }
  return out;
}

SettingSampler::SettingSampler(const Graph& g, const MeasurementSetting& setting, int dense_gate) {
  n_ = g.n();
  words_ = BitMatrix::words_per_row(n_);
  std::vector<char> in_x(n_, 0);
  for (int v : setting.x_set) {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    in_x[v] = 1;
  }
  if (!is_independent_set(g, setting.x_set))
    throw std::invalid_argument("X-measured set must be an independent set");

  dense_ = n_ <= dense_gate;
  if (dense_) {
    // Born rule: probabilities of H_{x_set}|G> in the computational basis.
    StateVec psi = build_graph_state(g, dense_gate);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int q = 0; q < n_; ++q) {
      if (!in_x[q]) continue;
      const int64_t bit = int64_t(1) << q;
      for (int64_t b = 0; b < psi.size(); ++b) {
        if (b & bit) continue;
        const auto lo = psi[b], hi = psi[b | bit];
        psi[b] = (lo + hi) * inv_sqrt2;
        psi[b | bit] = (lo - hi) * inv_sqrt2;
      }
    }
    probs_.resize(psi.size());
    cdf_.resize(psi.size());
    double acc = 0.0;
    for (int64_t b = 0; b < psi.size(); ++b) {
      probs_[b] = std::norm(psi[b]);
      acc += probs_[b];
      cdf_[b] = acc;
    }
    cdf_.back() = 1.0;  // close the float gap
    return;
  }

  // Tableau path. Generator v: X_v, Z on neighbours; H on x_set swaps the
  // x/z bits of those columns (no sign change: generators never carry Y).
  BitMatrix xm(n_, n_), zm(n_, n_);
  std::vector<char> sign(n_, 0);
  for (int v = 0; v < n_; ++v) {
    for (int q = 0; q < n_; ++q) {
      bool xb = (q == v);
      bool zb = g.has_edge(v, q);
      if (in_x[q]) {
        sign[v] ^= static_cast<char>(xb && zb);
        std::swap(xb, zb);
      }
      xm.set(v, q, xb);
      zm.set(v, q, zb);
    }
  }

  // Eliminate the X block; combined rows multiply as Pauli group elements:
  // sign picks up the parity of z_dst & x_src.
  auto multiply_into = [&](int dst, int src) {
    int par = 0;
    for (int w = 0; w < words_; ++w) par ^= __builtin_popcountll(zm.row(dst)[w] & xm.row(src)[w]) & 1;
    sign[dst] ^= static_cast<char>(par) ^ sign[src];
    xm.xor_row(dst, src);
    zm.xor_row(dst, src);
  };
  int pivot_row = 0;
  for (int col = 0; col < n_ && pivot_row < n_; ++col) {
    int found = -1;
    for (int r = pivot_row; r < n_; ++r) {
      if (xm.get(r, col)) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != pivot_row) {
      // Swap rows (plain storage swap; no sign effect).
      for (int w = 0; w < words_; ++w) {
        std::swap(xm.row(found)[w], xm.row(pivot_row)[w]);
        std::swap(zm.row(found)[w], zm.row(pivot_row)[w]);
      }
      std::swap(sign[found], sign[pivot_row]);
    }
    for (int r = 0; r < n_; ++r)
      if (r != pivot_row && xm.get(r, col)) multiply_into(r, pivot_row);
    ++pivot_row;
  }

  // Rows past pivot_row have empty X parts: they are +-Z^v stabilizers,
  // i.e. parity constraints v.b = sign on the outcome bits.
  BitMatrix cm(n_ - pivot_row, n_);
  std::vector<char> csign;
  for (int r = pivot_row; r < n_; ++r) {
    for (int w = 0; w < words_; ++w) cm.row(r - pivot_row)[w] = zm.row(r)[w];
    csign.push_back(sign[r]);
  }
  // Reduce the constraints so each row owns one pivot bit.
  int crow = 0;
  std::vector<int> pivot_of_row;
  for (int col = 0; col < n_ && crow < cm.rows(); ++col) {
    int found = -1;
    for (int r = crow; r < cm.rows(); ++r) {
      if (cm.get(r, col)) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != crow) {
      for (int w = 0; w < words_; ++w) std::swap(cm.row(found)[w], cm.row(crow)[w]);
      std::swap(csign[found], csign[crow]);
    }
    for (int r = 0; r < cm.rows(); ++r) {
      if (r != crow && cm.get(r, col)) {
        cm.xor_row(r, crow);
        csign[r] ^= csign[crow];
      }
    }
    pivot_of_row.push_back(col);
    ++crow;
  }
  if (crow != cm.rows())
    throw std::logic_error("stabilizer constraints must be independent");

  pivot_mask_.assign(words_, 0);
  for (int r = 0; r < cm.rows(); ++r) {
    for (int w = 0; w < words_; ++w) constr_.push_back(cm.row(r)[w]);
    constr_sign_.push_back(csign[r]);
    pivots_.push_back(pivot_of_row[r]);
    pivot_mask_[pivot_of_row[r] / 64] |= uint64_t(1) << (pivot_of_row[r] % 64);
  }
}

const std::vector<double>& SettingSampler::dense_probabilities() const {
  if (!dense_) throw std::logic_error("no dense distribution on the tableau path");
  return probs_;
}

void SettingSampler::sample_shot(uint64_t* out, double noise_p, Rng& rng) const {
  const int tail = n_ % 64;
  const uint64_t tail_mask = tail ? (uint64_t(1) << tail) - 1 : ~uint64_t(0);
  if (noise_p > 0.0 && rng.bernoulli(noise_p)) {
    // Maximally mixed branch: uniform bits.
    for (int w = 0; w < words_; ++w) out[w] = rng.next_u64();
    out[words_ - 1] &= tail_mask;
    return;
  }
  if (dense_) {
    const double u = rng.next_double();
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    const int64_t b = std::min<int64_t>(it - cdf_.begin(), cdf_.size() - 1);
    for (int w = 0; w < words_; ++w) out[w] = (static_cast<uint64_t>(b) >> (64 * w));
    return;
  }
  // Free bits random, then each constraint fixes its pivot bit.
  for (int w = 0; w < words_; ++w) out[w] = rng.next_u64() & ~pivot_mask_[w];
  out[words_ - 1] &= tail_mask;
  for (size_t r = 0; r < pivots_.size(); ++r) {
    const uint64_t* row = constr_.data() + r * words_;
    int par = constr_sign_[r];
    for (int w = 0; w < words_; ++w) par ^= __builtin_popcountll(row[w] & out[w]) & 1;
    if (par) out[pivots_[r] / 64] |= uint64_t(1) << (pivots_[r] % 64);
  }
}

OutcomeBuffer SettingSampler::sample(long long shots, double noise_p, Rng& rng,
                                     long long raw_cap) const {
  OutcomeBuffer buf(n_, std::min(shots, raw_cap));
  std::vector<uint64_t> scratch(words_);
  for (long long s = 0; s < shots; ++s) {
    sample_shot(scratch.data(), noise_p, rng);
    if (buf.shots() < raw_cap) buf.append(scratch.data());
  }
  return buf;
}

ProjectorEvaluator::ProjectorEvaluator(const Graph& g, const std::vector<int>& x_class,
                                       int register_n, const std::vector<int>& parent_vertices) {
  words_ = BitMatrix::words_per_row(register_n);
  auto to_register = [&](int v) {
    const int mapped = parent_vertices.empty() ? v : parent_vertices.at(v);
    if (mapped < 0 || mapped >= register_n) throw std::out_of_range("vertex outside register");
    return mapped;
  };
  for (int v : x_class) {
    std::vector<uint64_t> mask(words_, 0);
    const int rv = to_register(v);
    mask[rv / 64] |= uint64_t(1) << (rv % 64);
    for (int u : g.neighbors(v)) {
      const int ru = to_register(u);
      mask[ru / 64] |= uint64_t(1) << (ru % 64);
    }
    masks_.insert(masks_.end(), mask.begin(), mask.end());
  }
}

bool ProjectorEvaluator::hit(const uint64_t* shot) const {
  const size_t rows = masks_.size() / words_;
  for (size_t r = 0; r < rows; ++r) {
    const uint64_t* mask = masks_.data() + r * words_;
    int par = 0;
    for (int w = 0; w < words_; ++w) par ^= __builtin_popcountll(mask[w] & shot[w]) & 1;
    if (par) return false;  // this stabilizer came out -1
  }
  return true;
}

void ProjectorEvaluator::tally(const uint64_t* shot) {
  ++counts_.shots;
  if (hit(shot)) ++counts_.hits;
}

ProjectorCounts ProjectorEvaluator::finish() const {
  ProjectorCounts c = counts_;
  if (c.shots > 0) {
    c.mean = static_cast<double>(c.hits) / static_cast<double>(c.shots);
    if (c.shots > 1) {
      const double var = c.mean * (1.0 - c.mean) * static_cast<double>(c.shots) /
                         static_cast<double>(c.shots - 1);
      c.std_err = std::sqrt(var / static_cast<double>(c.shots));
    }
  }
  return c;
}

ProjectorCounts estimate_projector(const Graph& g, const std::vector<int>& x_class,
                                   const OutcomeBuffer& outcomes) {
  ProjectorEvaluator ev(g, x_class, outcomes.n());
  for (long long s = 0; s < outcomes.shots(); ++s) ev.tally(outcomes.shot(s));
  return ev.finish();
}

std::vector<ProjectorEstimate> ExperimentRecord::estimates() const {
  std::vector<ProjectorEstimate> out;
  for (const auto& s : settings) out.push_back(s.counts.estimate());
  return out;
}

namespace {

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  if (const char* env = std::getenv("ENTWIT_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

}  // namespace

ExperimentRecord run_experiment(const Graph& g, const Coloring& coloring, long long shots,
                                double noise_p, uint64_t seed, int dense_gate, long long raw_cap,
                                int threads) {
  if (shots < 1) throw std::invalid_argument("need at least one shot");
  if (noise_p < 0.0 || noise_p > 1.0) throw std::invalid_argument("noise rate must be in [0, 1]");
  ExperimentRecord rec;
  rec.graph = g;
  rec.coloring = coloring;
  rec.shots = shots;
  rec.noise_p = noise_p;
  rec.seed = seed;
  rec.settings.resize(coloring.k());

  const auto settings = settings_for_coloring(g, coloring);
  const Rng root(seed);
  auto run_one = [&](int l) {
    // Each setting owns stream l: identical results at any thread count.
    Rng rng = root.split(static_cast<uint64_t>(l));
    const SettingSampler sampler(g, settings[l], dense_gate);
    ProjectorEvaluator ev(g, coloring.classes[l], g.n());
    OutcomeBuffer buf(g.n(), std::min(shots, raw_cap));
    std::vector<uint64_t> scratch(sampler.n() == 0 ? 1 : BitMatrix::words_per_row(g.n()));
    for (long long s = 0; s < shots; ++s) {
      sampler.sample_shot(scratch.data(), noise_p, rng);
      ev.tally(scratch.data());
      if (buf.shots() < raw_cap) buf.append(scratch.data());
    }
    SettingResult& out = rec.settings[l];
    out.setting = settings[l];
    out.outcomes = std::move(buf);
    out.truncated = shots > raw_cap;
    out.counts = ev.finish();
  };

  const int nthreads = std::min<int>(resolve_threads(threads), coloring.k());
  if (nthreads <= 1) {
    for (int l = 0; l < coloring.k(); ++l) run_one(l);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < nthreads; ++t) {
      pool.emplace_back([&] {
        for (int l = next.fetch_add(1); l < coloring.k(); l = next.fetch_add(1)) run_one(l);
      });
    }
    for (auto& th : pool) th.join();
  }
  return rec;
}

}  // namespace entwit
