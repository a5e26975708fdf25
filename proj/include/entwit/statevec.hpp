#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "entwit/graph.hpp"
#include "entwit/pauli.hpp"
#include "entwit/rng.hpp"

namespace entwit {

// Exact dense oracle. Basis index bit v is the computational value of
// qubit v (qubit 0 = least significant bit). Deliberately brute-force:
// every answer here is ground truth for the scalable paths, so clarity
// beats speed. Gates keep memory honest: 2^n amplitudes for states
// (default n <= 14), 4^n entries for density matrices (default n <= 10).
using StateVec = Eigen::VectorXcd;
using DensityMat = Eigen::MatrixXcd;

inline constexpr int kDenseStateGate = 14;
inline constexpr int kDenseDensityGate = 10;

// |G> = prod_{(u,v) in E} CZ_uv |+>^n, amplitudes (+-1)/sqrt(2^n).
StateVec build_graph_state(const Graph& g, int dense_gate = kDenseStateGate);

std::complex<double> expectation(const StateVec& psi, const PauliString& p);
std::complex<double> expectation(const DensityMat& rho, const PauliString& p);

// <P_l> with P_l = prod_{i in x_class}(S_i + 1)/2: the mean of all 2^|class|
// stabilizer subgroup elements.
double projector_expectation(const StateVec& psi, const Graph& g, const std::vector<int>& x_class);
double projector_expectation(const DensityMat& rho, const Graph& g, const std::vector<int>& x_class);

// P_l as an explicit matrix (tiny n only); cross-check for the subgroup
// averaging path.
DensityMat projector_matrix(const Graph& g, const std::vector<int>& x_class,
                            int dense_gate = kDenseDensityGate);

DensityMat density(const StateVec& psi);
DensityMat reduced_density(const StateVec& psi, const std::vector<int>& keep,
                           int density_gate = kDenseDensityGate);
DensityMat reduced_density(const DensityMat& rho, const std::vector<int>& keep,
                           int density_gate = kDenseDensityGate);

// Entanglement entropy in bits, and the full spectrum (descending).
double entropy_bits(const DensityMat& rho);
std::vector<double> spectrum(const DensityMat& rho);

double fidelity(const StateVec& psi, const StateVec& phi);
double fidelity(const DensityMat& rho, const StateVec& phi);

DensityMat white_noise_state(const Graph& g, double p, int density_gate = kDenseDensityGate);

// Smallest eigenvalue of |G><G| + (k-1) I - sum_l P_l; the operator bound
// says it is non-negative for proper colorings.
double witness_operator_min_eig(const Graph& g, const Coloring& coloring,
                                int density_gate = kDenseDensityGate);

// Product states for property tests: Haar-random single-qubit factors, or
// Haar-random block factors across a partition (an m-separable pure state).
StateVec random_product_state(int n, Rng& rng, int dense_gate = kDenseStateGate);
StateVec random_block_product_state(const std::vector<std::vector<int>>& blocks, Rng& rng,
                                    int dense_gate = kDenseStateGate);

// Reference states that sit exactly on the separability bounds:
//   biseparable      |0> on the first class-0 vertex, graph state on the rest
//   fully_separable  |+> on class 0, |0> elsewhere
//   msep_chain       floor(m/2) leading (|+>,|0>) pairs, chain state on the rest
//   msep_lattice5    graph state on 3 corner cells, |0> on the next
//                    antidiagonal, graph state on the rest (5-producible)
StateVec saturating_state_bisep(const Graph& g, const Coloring& coloring);
StateVec saturating_state_fullsep(const Graph& g, const Coloring& coloring);
StateVec saturating_state_msep_chain(const Graph& g, int m);
StateVec saturating_state_msep_lattice5(const Graph& g);

}  // namespace entwit
