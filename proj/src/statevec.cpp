#include "entwit/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace entwit {

namespace {

void check_gate(int n, int gate, const char* what) {
  if (n > gate)
    throw std::invalid_argument(std::string(what) + " gated at n <= " + std::to_string(gate) +
                                "; raise the gate explicitly for larger n");
  if (n > 30) throw std::invalid_argument("dense representation limited to n <= 30");
}

uint64_t popcount_parity(uint64_t v) { return __builtin_popcountll(v) & 1; }

}  // namespace

StateVec build_graph_state(const Graph& g, int dense_gate) {
  const int n = g.n();
  check_gate(n, dense_gate, "dense state vector");
  const int64_t dim = int64_t(1) << n;
  StateVec psi(dim);
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  const auto edges = g.edges();
  for (int64_t b = 0; b < dim; ++b) {
    int sign = 0;
    for (auto [u, v] : edges) sign ^= static_cast<int>((b >> u) & (b >> v) & 1);
    psi[b] = sign ? -amp : amp;
  }
  return psi;
}

std::complex<double> expectation(const StateVec& psi, const PauliString& p) {
  // P|b> = i^phase (-1)^{b.z} |b ^ x>.
  static const std::complex<double> kI(0.0, 1.0);
  std::complex<double> iphase = 1.0;
  for (int t = 0; t < p.phase % 4; ++t) iphase *= kI;
  std::complex<double> acc = 0.0;
  const int64_t dim = psi.size();
  for (int64_t b = 0; b < dim; ++b) {
    const double s = popcount_parity(static_cast<uint64_t>(b) & p.z) ? -1.0 : 1.0;
    acc += std::conj(psi[b ^ static_cast<int64_t>(p.x)]) * (s * psi[b]);
  }
  return iphase * acc;
}

std::complex<double> expectation(const DensityMat& rho, const PauliString& p) {
  static const std::complex<double> kI(0.0, 1.0);
  std::complex<double> iphase = 1.0;
  for (int t = 0; t < p.phase % 4; ++t) iphase *= kI;
  std::complex<double> acc = 0.0;
  const int64_t dim = rho.rows();
  // Tr(rho P) = sum_b <b|rho P|b> = sum_b i^phase (-1)^{b.z} rho[b, b^x].
  for (int64_t b = 0; b < dim; ++b) {
    const double s = popcount_parity(static_cast<uint64_t>(b) & p.z) ? -1.0 : 1.0;
    acc += rho(b, b ^ static_cast<int64_t>(p.x)) * s;
  }
  return iphase * acc;
}

namespace {

template <typename State>
double projector_expectation_impl(const State& st, const Graph& g, const std::vector<int>& x_class) {
  if (!is_independent_set(g, x_class))
    throw std::invalid_argument("projector class must be an independent set");
  // Average over the 2^|class| subgroup elements.
  const int nl = static_cast<int>(x_class.size());
  if (nl > 26) throw std::invalid_argument("projector subgroup too large to enumerate");
  double acc = 0.0;
  for (uint64_t t = 0; t < (uint64_t(1) << nl); ++t) {
    uint64_t subset = 0;
    for (int j = 0; j < nl; ++j)
      if ((t >> j) & 1) subset |= uint64_t(1) << x_class[j];
    const auto k = stabilizer_group_element(g, subset);
    acc += expectation(st, k).real();
  }
  return acc / static_cast<double>(uint64_t(1) << nl);
}

}  // namespace

double projector_expectation(const StateVec& psi, const Graph& g, const std::vector<int>& x_class) {
  return projector_expectation_impl(psi, g, x_class);
}
double projector_expectation(const DensityMat& rho, const Graph& g, const std::vector<int>& x_class) {
  return projector_expectation_impl(rho, g, x_class);
}

DensityMat projector_matrix(const Graph& g, const std::vector<int>& x_class, int dense_gate) {
  const int n = g.n();
  check_gate(n, dense_gate, "dense projector matrix");
  const int64_t dim = int64_t(1) << n;
  DensityMat acc = DensityMat::Zero(dim, dim);
  const int nl = static_cast<int>(x_class.size());
  for (uint64_t t = 0; t < (uint64_t(1) << nl); ++t) {
    uint64_t subset = 0;
    for (int j = 0; j < nl; ++j)
      if ((t >> j) & 1) subset |= uint64_t(1) << x_class[j];
    const auto k = stabilizer_group_element(g, subset);
    // Add i^phase (-1)^{b.z} |b^x><b|.
    static const std::complex<double> kI(0.0, 1.0);
    std::complex<double> iphase = 1.0;
    for (int q = 0; q < k.phase % 4; ++q) iphase *= kI;
    for (int64_t b = 0; b < dim; ++b) {
      const double s = popcount_parity(static_cast<uint64_t>(b) & k.z) ? -1.0 : 1.0;
      acc(b ^ static_cast<int64_t>(k.x), b) += iphase * s;
    }
  }
  return acc / static_cast<double>(uint64_t(1) << nl);
}

DensityMat density(const StateVec& psi) {
  return psi * psi.adjoint();
}

namespace {

DensityMat reduce_indices(const std::vector<int>& keep, int n,
                          const std::function<std::complex<double>(int64_t, int64_t)>& element) {
  std::vector<int> rest;
  {
    std::vector<char> kept(n, 0);
    for (int v : keep) {
      if (v < 0 || v >= n) throw std::out_of_range("vertex out of range");
      if (kept[v]) throw std::invalid_argument("duplicate vertex in keep set");
      kept[v] = 1;
    }
    for (int v = 0; v < n; ++v)
      if (!kept[v]) rest.push_back(v);
  }
  const int na = static_cast<int>(keep.size());
  const int nb = n - na;
  auto scatter = [](const std::vector<int>& pos, int64_t bits) {
    int64_t out = 0;
    for (size_t j = 0; j < pos.size(); ++j)
      if ((bits >> j) & 1) out |= int64_t(1) << pos[j];
    return out;
  };
  DensityMat out = DensityMat::Zero(int64_t(1) << na, int64_t(1) << na);
  for (int64_t a = 0; a < (int64_t(1) << na); ++a) {
    const int64_t abits = scatter(keep, a);
    for (int64_t a2 = 0; a2 < (int64_t(1) << na); ++a2) {
      const int64_t a2bits = scatter(keep, a2);
      std::complex<double> acc = 0.0;
      for (int64_t b = 0; b < (int64_t(1) << nb); ++b) {
        const int64_t bbits = scatter(rest, b);
        acc += element(abits | bbits, a2bits | bbits);
      }
      out(a, a2) = acc;
    }
  }
  return out;
}

}  // namespace

DensityMat reduced_density(const StateVec& psi, const std::vector<int>& keep, int density_gate) {
  const int n = static_cast<int>(std::log2(static_cast<double>(psi.size())) + 0.5);
  check_gate(n, density_gate, "dense reduced density");
  return reduce_indices(keep, n, [&](int64_t r, int64_t c) { return psi[r] * std::conj(psi[c]); });
}

DensityMat reduced_density(const DensityMat& rho, const std::vector<int>& keep, int density_gate) {
  const int n = static_cast<int>(std::log2(static_cast<double>(rho.rows())) + 0.5);
  check_gate(n, density_gate, "dense reduced density");
  return reduce_indices(keep, n, [&](int64_t r, int64_t c) { return rho(r, c); });
}

double entropy_bits(const DensityMat& rho) {
  Eigen::SelfAdjointEigenSolver<DensityMat> es(rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (double lam : es.eigenvalues()) {
    if (lam > 1e-12) s -= lam * std::log2(lam);
  }
  return s;
}

std::vector<double> spectrum(const DensityMat& rho) {
  Eigen::SelfAdjointEigenSolver<DensityMat> es(rho, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double fidelity(const StateVec& psi, const StateVec& phi) {
  return std::norm(phi.dot(psi));
}

double fidelity(const DensityMat& rho, const StateVec& phi) {
  return (phi.adjoint() * rho * phi)(0, 0).real();
}

DensityMat white_noise_state(const Graph& g, double p, int density_gate) {
  check_gate(g.n(), density_gate, "dense density matrix");
  const auto psi = build_graph_state(g, density_gate);
  const int64_t dim = psi.size();
  DensityMat rho = (1.0 - p) * density(psi);
  rho += (p / static_cast<double>(dim)) * DensityMat::Identity(dim, dim);
  return rho;
}

double witness_operator_min_eig(const Graph& g, const Coloring& coloring, int density_gate) {
  check_gate(g.n(), density_gate, "dense witness operator");
  if (!is_proper_coloring(g, coloring)) throw std::invalid_argument("coloring is not proper");
  const auto psi = build_graph_state(g, density_gate);
  const int64_t dim = psi.size();
  DensityMat op = density(psi);
  op += static_cast<double>(coloring.k() - 1) * DensityMat::Identity(dim, dim);
  for (const auto& cl : coloring.classes) op -= projector_matrix(g, cl, density_gate);
  Eigen::SelfAdjointEigenSolver<DensityMat> es(op, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

StateVec random_product_state(int n, Rng& rng, int dense_gate) {
  std::vector<std::vector<int>> blocks(n);
  for (int v = 0; v < n; ++v) blocks[v] = {v};
  return random_block_product_state(blocks, rng, dense_gate);
}

StateVec random_block_product_state(const std::vector<std::vector<int>>& blocks, Rng& rng,
                                    int dense_gate) {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  check_gate(n, dense_gate, "dense state vector");
  StateVec psi = StateVec::Zero(int64_t(1) << n);
  psi[0] = 1.0;
  for (const auto& block : blocks) {
    // Haar-random block factor: normalized complex-Gaussian amplitudes
    // (Box-Muller from pinned uniform bits).
    const int nb = static_cast<int>(block.size());
    StateVec factor(int64_t(1) << nb);
    for (int64_t i = 0; i < factor.size(); ++i) {
      const double u1 = std::max(rng.next_double(), 1e-300);
      const double u2 = rng.next_double();
      const double r = std::sqrt(-2.0 * std::log(u1));
      factor[i] = std::complex<double>(r * std::cos(2 * std::numbers::pi * u2),
                                       r * std::sin(2 * std::numbers::pi * u2));
    }
    factor.normalize();
    // Weave the factor into the full register at the block's qubits.
    StateVec next = StateVec::Zero(psi.size());
    for (int64_t base = 0; base < psi.size(); ++base) {
      bool block_clear = true;
      for (int q : block)
        if ((base >> q) & 1) block_clear = false;
      if (!block_clear) continue;
      for (int64_t fb = 0; fb < factor.size(); ++fb) {
        int64_t idx = base;
        for (int j = 0; j < nb; ++j)
          if ((fb >> j) & 1) idx |= int64_t(1) << block[j];
        next[idx] = psi[base] * factor[fb];
      }
    }
    psi = std::move(next);
  }
  return psi;
}

namespace {

// |0> on zero_set, |+> on plus_set, graph state of `edges` on the rest.
// Any edge touching zero_set/plus_set must have been removed upstream.
StateVec embedded_graph_state(int n, const Graph& g, const std::vector<int>& plus_set,
                              const std::vector<int>& zero_set) {
  int64_t zero_mask = 0;
  for (int v : zero_set) zero_mask |= int64_t(1) << v;
  // |+> qubits are free: they must be isolated in the graph part, which
  // then treats them as single-vertex graph states.
  for (int v : plus_set) {
    if ((zero_mask >> v) & 1) throw std::invalid_argument("|+> and |0> sets overlap");
    if (g.degree(v) != 0) throw std::invalid_argument("|+> qubits must be isolated");
  }
  const auto edges = g.edges();
  for (auto [u, v] : edges) {
    if ((zero_mask >> u & 1) || (zero_mask >> v & 1))
      throw std::invalid_argument("graph part must not touch the |0> qubits");
  }
  const int64_t dim = int64_t(1) << n;
  StateVec psi = StateVec::Zero(dim);
  const double amp = 1.0 / std::sqrt(static_cast<double>(int64_t(1) << (n - zero_set.size())));
  for (int64_t b = 0; b < dim; ++b) {
    if (b & zero_mask) continue;
    int sign = 0;
    for (auto [u, v] : edges) sign ^= static_cast<int>((b >> u) & (b >> v) & 1);
    psi[b] = sign ? -amp : amp;
  }
  return psi;
}

Graph drop_edges_at(const Graph& g, const std::vector<int>& verts) {
  Graph out(g.n());
  std::vector<char> cut(g.n(), 0);
  for (int v : verts) cut[v] = 1;
  for (auto [u, v] : g.edges())
    if (!cut[u] && !cut[v]) out.add_edge(u, v);
  return out;
}

}  // namespace

StateVec saturating_state_bisep(const Graph& g, const Coloring& coloring) {
  if (coloring.k() < 1 || coloring.classes[0].empty())
    throw std::invalid_argument("coloring must have a nonempty first class");
  const int v = coloring.classes[0].front();
  return embedded_graph_state(g.n(), drop_edges_at(g, {v}), {}, {v});
}

StateVec saturating_state_fullsep(const Graph& g, const Coloring& coloring) {
  std::vector<int> zeros;
  for (int l = 1; l < coloring.k(); ++l)
    zeros.insert(zeros.end(), coloring.classes[l].begin(), coloring.classes[l].end());
  Graph empty(g.n());
  return embedded_graph_state(g.n(), empty, coloring.classes[0], zeros);
}

StateVec saturating_state_msep_chain(const Graph& g, int m) {
  const int n = g.n();
  const int j = m / 2;
  if (n < 2 * j + 1)
    throw std::invalid_argument("chain too short for the m-separable saturating state");
  std::vector<int> zeros;
  for (int i = 0; i < j; ++i) zeros.push_back(2 * i + 1);  // the |0> half of each pair
  std::vector<int> head_plus;
  for (int i = 0; i < j; ++i) head_plus.push_back(2 * i);
  std::vector<int> head_all;
  for (int i = 0; i < 2 * j; ++i) head_all.push_back(i);
  return embedded_graph_state(n, drop_edges_at(g, head_all), head_plus, zeros);
}

StateVec saturating_state_msep_lattice5(const Graph& g) {
  if (g.family() != Family::lattice || g.lattice_rows() < 3 || g.lattice_cols() < 3)
    throw std::invalid_argument("needs a lattice with rows, cols >= 3");
  const int cols = g.lattice_cols();
  auto id = [cols](int r, int c) { return r * cols + c; };
  // The corner 3-cell graph state survives intact; the |0> antidiagonal
  // {(0,2),(1,1),(2,0)} cuts it off from the bulk graph state.
  const std::vector<int> zeros = {id(0, 2), id(1, 1), id(2, 0)};
  Graph h = drop_edges_at(g, zeros);
  return embedded_graph_state(g.n(), h, {}, zeros);
}

}  // namespace entwit
