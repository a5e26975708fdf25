#include <cmath>
#include <complex>

#include "doctest.h"
#include "entwit/entropy.hpp"
#include "entwit/pauli.hpp"
#include "entwit/statevec.hpp"

using namespace entwit;

namespace {
constexpr double kTol = 1e-10;
}

TEST_CASE("pauli products track phases") {
  const PauliString X{1, 0, 0};
  const PauliString Z{0, 1, 0};
  const PauliString XZ = X * Z;  // X then Z applied right-to-left: X*Z = -iY
  CHECK(XZ.x == 1);
  CHECK(XZ.z == 1);
  CHECK(XZ.phase == 0);
  const PauliString ZX = Z * X;  // picks up the anticommutation sign
  CHECK(ZX.phase == 2);
  CHECK(XZ.to_string(1) == "-iY");  // XZ = -iY once the Y letter absorbs i

  // Stabilizers commute: S0 S2 on a chain shares no anticommuting pair.
  const Graph chain = chain_graph(3);
  const PauliString s0 = stabilizer(chain, 0);
  CHECK(s0.x == 0b001);
  CHECK(s0.z == 0b010);
  CHECK(s0.to_string(3) == "+XZI");
  const PauliString s02 = stabilizer_group_element(chain, 0b101);
  CHECK(s02.x == 0b101);
  CHECK(s02.z == 0);  // Z1 from both generators cancels
  CHECK(s02.phase == 0);
  CHECK(s02.to_string(3) == "+XIX");

  const PauliString s012 = stabilizer_group_element(chain, 0b111);
  CHECK(s012.is_real());
  CHECK(s012.sign() == 1);
}

TEST_CASE("graph state amplitudes and stabilizer expectations") {
  const Graph g2 = graph_from_edges(2, {{0, 1}});
  const StateVec psi2 = build_graph_state(g2);
  CHECK(psi2[0].real() == doctest::Approx(0.5));
  CHECK(psi2[1].real() == doctest::Approx(0.5));
  CHECK(psi2[2].real() == doctest::Approx(0.5));
  CHECK(psi2[3].real() == doctest::Approx(-0.5));

  const Graph g = chain_graph(4);
  const StateVec psi = build_graph_state(g);
  CHECK(psi.squaredNorm() == doctest::Approx(1.0));
  for (int v = 0; v < 4; ++v)
    CHECK(expectation(psi, stabilizer(g, v)).real() == doctest::Approx(1.0).epsilon(1e-12));
  for (uint64_t subset = 1; subset < 16; ++subset)
    CHECK(expectation(psi, stabilizer_group_element(g, subset)).real() ==
          doctest::Approx(1.0).epsilon(1e-12));

  // Paulis outside the group average to zero; negated elements to -1.
  CHECK(std::abs(expectation(psi, PauliString{1, 0, 0})) < kTol);
  CHECK(std::abs(expectation(psi, PauliString{0, 1, 0})) < kTol);
  PauliString minus_s0 = stabilizer(g, 0);
  minus_s0.phase = 2;
  CHECK(expectation(psi, minus_s0).real() == doctest::Approx(-1.0));
}

TEST_CASE("projector expectation agrees with the explicit matrix") {
  const Graph g = ring_graph(4);
  const auto coloring = *two_coloring(g);
  Rng rng(11);
  const StateVec psi = random_product_state(4, rng);
  const DensityMat rho = density(psi);
  for (const auto& cl : coloring.classes) {
    const DensityMat pm = projector_matrix(g, cl);
    const double via_matrix = (pm * rho).trace().real();
    CHECK(projector_expectation(psi, g, cl) == doctest::Approx(via_matrix).epsilon(1e-10));
    CHECK(projector_expectation(rho, g, cl) == doctest::Approx(via_matrix).epsilon(1e-10));
    // Projector property: P^2 = P, hermitian.
    CHECK((pm * pm - pm).norm() < 1e-9);
    CHECK((pm - pm.adjoint()).norm() < 1e-12);
  }
  // On the graph state itself both projectors give exactly 1.
  const StateVec gs = build_graph_state(g);
  for (const auto& cl : coloring.classes)
    CHECK(projector_expectation(gs, g, cl) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("reduced states of graph states have flat spectra") {
  const Graph g = chain_graph(4);
  const StateVec psi = build_graph_state(g);

  const DensityMat r0 = reduced_density(psi, {0});
  CHECK(entropy_bits(r0) == doctest::Approx(1.0).epsilon(1e-9));
  const auto spec0 = spectrum(r0);
  CHECK(spec0[0] == doctest::Approx(0.5));
  CHECK(spec0[1] == doctest::Approx(0.5));

  for (const auto& a : std::vector<std::vector<int>>{{0}, {0, 1}, {1, 2}, {0, 2}, {0, 1, 2}}) {
    const int s = cut_entropy(g, a);
    const DensityMat ra = reduced_density(psi, a);
    CHECK(entropy_bits(ra) == doctest::Approx(double(s)).epsilon(1e-9));
    for (double lam : spectrum(ra))
      if (lam > 1e-10) CHECK(lam == doctest::Approx(std::ldexp(1.0, -s)).epsilon(1e-9));
  }
}

TEST_CASE("white noise state: fidelity and projector means") {
  const Graph g = chain_graph(5);
  const StateVec psi = build_graph_state(g);
  const double p = 0.3;
  const DensityMat rho = white_noise_state(g, p);
  CHECK(fidelity(rho, psi) == doctest::Approx(1 - p + p / 32).epsilon(1e-12));

  const auto coloring = *two_coloring(g);
  for (const auto& cl : coloring.classes) {
    const double expect = 1 - p * (1 - std::ldexp(1.0, -int(cl.size())));
    CHECK(projector_expectation(rho, g, cl) == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("witness operator is positive semidefinite on the excluded set") {
  CHECK(witness_operator_min_eig(chain_graph(4), *two_coloring(chain_graph(4))) >= -1e-9);
  CHECK(witness_operator_min_eig(chain_graph(6), *two_coloring(chain_graph(6))) >= -1e-9);
  CHECK(witness_operator_min_eig(ring_graph(5), chromatic_coloring(ring_graph(5))) >= -1e-9);
  CHECK(witness_operator_min_eig(star_graph(5), *two_coloring(star_graph(5))) >= -1e-9);
  CHECK(witness_operator_min_eig(complete_graph(4), chromatic_coloring(complete_graph(4))) >= -1e-9);
}

TEST_CASE("product states respect the fidelity bounds") {
  const Graph g = chain_graph(6);
  const StateVec gs = build_graph_state(g);
  const Partition p = parse_partition("0,1,1,2,2,2");
  const BoundReport rep = c_min_c_max(g, p);
  Rng rng(21);

  for (int trial = 0; trial < 25; ++trial) {
    // Fully product across the blocks: fidelity <= c_min.
    const StateVec block = random_block_product_state(p.blocks, rng);
    CHECK(fidelity(block, gs) <= to_double(rep.c_min.value) + 1e-9);

    // Fully product across singletons: fidelity <= 2^-floor(n/2).
    const StateVec prod = random_product_state(6, rng);
    CHECK(fidelity(prod, gs) <= std::ldexp(1.0, -3) + 1e-9);
  }

  // Product across one specific cut only: fidelity <= c_max.
  for (int trial = 0; trial < 25; ++trial) {
    const std::vector<std::vector<int>> split{{0}, {1, 2, 3, 4, 5}};
    const StateVec bisep = random_block_product_state(split, rng);
    CHECK(fidelity(bisep, gs) <= to_double(rep.c_max.value) + 1e-9);
  }
}

TEST_CASE("saturating states hit their bounds exactly") {
  {  // |0> x graph state: the biseparable extremum {1/2, 1}
    const Graph g = chain_graph(8);
    const auto col = *two_coloring(g);
    const StateVec psi = saturating_state_bisep(g, col);
    CHECK(projector_expectation(psi, g, col.classes[0]) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(projector_expectation(psi, g, col.classes[1]) == doctest::Approx(1.0).epsilon(1e-12));
  }
  {  // fully separable extremum {1, 2^-floor(N/2)}
    const Graph g = chain_graph(8);
    const auto col = *two_coloring(g);
    const StateVec psi = saturating_state_fullsep(g, col);
    CHECK(projector_expectation(psi, g, col.classes[0]) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(projector_expectation(psi, g, col.classes[1]) ==
          doctest::Approx(std::ldexp(1.0, -4)).epsilon(1e-12));
  }
  {  // m-separable chain extremum {1, 2^-floor(m/2)}
    const Graph g = chain_graph(9);
    const auto col = *two_coloring(g);
    for (int m = 2; m <= 5; ++m) {
      const StateVec psi = saturating_state_msep_chain(g, m);
      CHECK(projector_expectation(psi, g, col.classes[0]) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(projector_expectation(psi, g, col.classes[1]) ==
            doctest::Approx(std::ldexp(1.0, -(m / 2))).epsilon(1e-12));
    }
  }
  {  // 5-separable lattice extremum {1/8, 1}
    const Graph g = lattice_graph(3, 4);
    const auto col = *two_coloring(g);
    const StateVec psi = saturating_state_msep_lattice5(g);
    CHECK(projector_expectation(psi, g, col.classes[0]) ==
          doctest::Approx(0.125).epsilon(1e-12));
    CHECK(projector_expectation(psi, g, col.classes[1]) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("dense gates refuse oversized registers") {
  CHECK_THROWS_AS(build_graph_state(chain_graph(15)), std::invalid_argument);
  CHECK_THROWS_AS(build_graph_state(chain_graph(15), 14), std::invalid_argument);
  CHECK_NOTHROW(build_graph_state(chain_graph(15), 15));
  CHECK_THROWS_AS(white_noise_state(chain_graph(11), 0.1), std::invalid_argument);
}
