#include <algorithm>

#include "doctest.h"
#include "entwit/witness.hpp"

using namespace entwit;

namespace {

Coloring coloring_of(const Graph& g) {
  if (auto two = two_coloring(g)) return *two;
  return chromatic_coloring(g);
}

std::vector<ProjectorEstimate> exact(std::vector<Rational> values) {
  std::vector<ProjectorEstimate> out;
  for (auto& v : values) out.push_back({v, 0.0, 0});
  return out;
}

}  // namespace

TEST_CASE("witness constants: chain(6) tripartition") {
  const Graph g = chain_graph(6);
  const auto col = coloring_of(g);
  const Partition p = parse_partition("0,1,1,2,2,2");

  const Witness wf = build_witness(g, col, WitnessKind::fully_separable, p);
  CHECK(wf.constant == Rational(5, 4));
  CHECK(wf.c_term == Rational(1, 4));
  CHECK(wf.c_method == "cuts");
  CHECK(wf.k() == 2);

  const Witness wb = build_witness(g, col, WitnessKind::genuine, p);
  CHECK(wb.constant == Rational(3, 2));
  CHECK(noise_threshold(wb) == Rational(2, 7));
  CHECK(noise_threshold(wf) == Rational(3, 7));
}

TEST_CASE("witness constants: ring(5) with three settings") {
  const Graph g = ring_graph(5);
  const auto col = coloring_of(g);
  REQUIRE(col.k() == 3);
  const Partition p = parse_partition("0,1,1,2,2");

  CHECK(build_witness(g, col, WitnessKind::fully_separable, p).constant == Rational(9, 4));
  CHECK(build_witness(g, col, WitnessKind::genuine, p).constant == Rational(5, 2));
  CHECK(build_witness(g, col, WitnessKind::gme).constant == Rational(5, 2));
}

TEST_CASE("witness constants: m-separable and gme") {
  const Graph g = chain_graph(10);
  const auto col = coloring_of(g);
  const Witness w6 = build_witness(g, col, WitnessKind::m_separable, std::nullopt, 6);
  CHECK(w6.constant == Rational(9, 8));
  CHECK(w6.m == 6);
  CHECK(w6.c_tight);
  CHECK(w6.c_method == "chain");

  CHECK(build_witness(g, col, WitnessKind::gme).constant == Rational(3, 2));
  CHECK(build_witness(star_graph(4), coloring_of(star_graph(4)), WitnessKind::gme).constant ==
        Rational(3, 2));
}

TEST_CASE("witness construction rejects bad inputs") {
  const Graph g = chain_graph(4);
  const auto col = coloring_of(g);
  CHECK_THROWS_AS(build_witness(g, col, WitnessKind::fully_separable), std::invalid_argument);
  CHECK_THROWS_AS(build_witness(g, col, WitnessKind::m_separable, std::nullopt, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_witness(g, col, WitnessKind::m_separable, std::nullopt, 5),
                  std::invalid_argument);

  Graph disco(4);
  disco.add_edge(0, 1);
  disco.add_edge(2, 3);
  Coloring dcol;
  dcol.classes = {{0, 2}, {1, 3}};
  CHECK_THROWS_AS(build_witness(disco, dcol, WitnessKind::gme), std::invalid_argument);

  Coloring improper;
  improper.classes = {{0, 1}, {2, 3}};
  CHECK_THROWS_AS(build_witness(g, improper, WitnessKind::gme), std::invalid_argument);

  const Partition wrong = parse_partition("0,1,1");
  CHECK_THROWS_AS(build_witness(g, col, WitnessKind::genuine, wrong), std::invalid_argument);
}

TEST_CASE("subsystem witness: 4x4 lattice, quadrants, drop one") {
  const Graph g = lattice_graph(4, 4);
  const auto col = coloring_of(g);
  Partition quad;
  quad.blocks.resize(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) quad.blocks[(r / 2) * 2 + (c / 2)].push_back(r * 4 + c);
  quad.canonicalize();

  const Witness wf = build_subsystem_witness(g, col, quad, {0, 1, 2}, WitnessKind::fully_separable);
  CHECK(wf.constant == Rational(9, 8));
  CHECK(wf.is_subsystem);
  CHECK(wf.graph.n() == 12);
  CHECK(wf.k() == 2);
  CHECK(wf.parent_vertices.size() == 12);
  // Dropped bottom-right quadrant: 10, 11, 14, 15 are absent.
  for (int v : {10, 11, 14, 15})
    CHECK(std::find(wf.parent_vertices.begin(), wf.parent_vertices.end(), v) ==
          wf.parent_vertices.end());

  const Witness wb = build_subsystem_witness(g, col, quad, {0, 1, 2}, WitnessKind::genuine);
  CHECK(wb.constant == Rational(5, 4));

  CHECK_THROWS_AS(build_subsystem_witness(g, col, quad, {0, 1, 2, 3}, WitnessKind::genuine),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_subsystem_witness(g, col, quad, {0, 7}, WitnessKind::genuine),
                  std::out_of_range);
}

TEST_CASE("evaluation: exact estimates") {
  const Graph g = chain_graph(6);
  const auto col = coloring_of(g);
  const Witness w = build_witness(g, col, WitnessKind::genuine, parse_partition("0,1,1,2,2,2"));

  const WitnessVerdict hit = evaluate(w, exact({Rational(1), Rational(1)}));
  CHECK(hit.exact);
  CHECK(hit.detected);
  CHECK(hit.value == Rational(-1, 2));
  CHECK(hit.interpretation ==
        "detected: genuine multipartite entanglement across the given partition");

  // Exactly on the bound: no detection.
  const WitnessVerdict edge = evaluate(w, exact({Rational(1), Rational(1, 2)}));
  CHECK(edge.value == Rational(0));
  CHECK_FALSE(edge.detected);

  CHECK_THROWS_AS(evaluate(w, exact({Rational(1)})), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(w, exact({Rational(1), Rational(2)})), std::invalid_argument);
}

TEST_CASE("evaluation: sampled estimates need significance") {
  const Graph g = chain_graph(6);
  const auto col = coloring_of(g);
  const Witness w = build_witness(g, col, WitnessKind::gme);

  // value = 3/2 - 1.6 = -0.1, sigma = 0.05 -> z = 2: below the default 3.
  std::vector<ProjectorEstimate> ests{{Rational(4, 5), 0.03, 1000}, {Rational(4, 5), 0.04, 1000}};
  const WitnessVerdict weak = evaluate(w, ests);
  CHECK_FALSE(weak.exact);
  CHECK(weak.z == doctest::Approx(2.0));
  CHECK_FALSE(weak.detected);
  CHECK(weak.std_err == doctest::Approx(0.05));

  // Same data at a looser threshold.
  CHECK(evaluate(w, ests, 1.5).detected);

  // Tight errors make the same mean significant.
  std::vector<ProjectorEstimate> sharp{{Rational(4, 5), 0.001, 100000},
                                       {Rational(4, 5), 0.001, 100000}};
  CHECK(evaluate(w, sharp).detected);
}

TEST_CASE("white noise expectations and thresholds") {
  CHECK(white_noise_expectation(Rational(1, 4), 3) == Rational(25, 32));
  CHECK(white_noise_expectation(Rational(0), 5) == Rational(1));
  CHECK(white_noise_expectation(Rational(1), 1) == Rational(1, 2));
  CHECK_THROWS_AS(white_noise_expectation(Rational(3, 2), 2), std::invalid_argument);

  // Every constructed witness tolerates more noise than 1/(2k).
  std::vector<Witness> zoo;
  for (int n = 4; n <= 9; ++n) {
    const Graph g = chain_graph(n);
    const auto col = coloring_of(g);
    zoo.push_back(build_witness(g, col, WitnessKind::gme));
    Partition singles;
    for (int v = 0; v < n; ++v) singles.blocks.push_back({v});
    zoo.push_back(build_witness(g, col, WitnessKind::fully_separable, singles));
    zoo.push_back(build_witness(g, col, WitnessKind::genuine, singles));
    zoo.push_back(build_witness(g, col, WitnessKind::m_separable, std::nullopt, 3));
  }
  for (const Graph& g : {ring_graph(6), ring_graph(5), star_graph(6), lattice_graph(2, 3),
                         lattice_graph(3, 3)})
    zoo.push_back(build_witness(g, coloring_of(g), WitnessKind::gme));
  for (const Witness& w : zoo) {
    const Rational pl = noise_threshold(w);
    CHECK(pl > Rational(1, 2 * w.k()));
    CHECK(pl <= Rational(1));
    // Exact flip across the threshold.
    const Rational eps(1, 1'000'000'000);
    auto value_at = [&](const Rational& p) {
      Rational v = w.constant;
      for (const auto& cl : w.coloring.classes)
        v -= white_noise_expectation(p, static_cast<int>(cl.size()));
      return v;
    };
    CHECK(value_at(pl - eps) < Rational(0));
    CHECK(value_at(pl) == Rational(0));
    CHECK(!(value_at(pl + eps) < Rational(0)));
  }
}

TEST_CASE("intactness scan: exact noiseless data detects everything") {
  const Graph g = chain_graph(8);
  const auto col = coloring_of(g);
  const auto rep = intactness_scan(g, col, exact({Rational(1), Rational(1)}));
  CHECK(rep.max_m_covered == 8);
  CHECK(rep.entries.size() == 7);
  CHECK(rep.smallest_detected_m == 2);
  CHECK(rep.intactness_bound == 1);
  CHECK(rep.interpretation ==
        "not m-separable for any covered m >= 2: genuinely multipartite entangled (intactness 1)");
}

TEST_CASE("intactness scan: moderate noise detects only large m") {
  const Graph g = chain_graph(8);
  const auto col = coloring_of(g);
  // p = 2/5: each class of 4 gives 1 - p(1 - 1/16) = 5/8.
  const Rational e = white_noise_expectation(Rational(2, 5), 4);
  CHECK(e == Rational(5, 8));
  const auto rep = intactness_scan(g, col, exact({e, e}));
  CHECK(rep.smallest_detected_m == 6);
  CHECK(rep.intactness_bound == 5);
  CHECK(rep.interpretation == "not 6-separable: entanglement intactness <= 5");
  // Values are non-increasing and flip sign exactly once.
  for (size_t i = 1; i < rep.entries.size(); ++i)
    CHECK(rep.entries[i].verdict.value <= rep.entries[i - 1].verdict.value);

  // Heavy noise: nothing detected.
  const Rational heavy = white_noise_expectation(Rational(9, 10), 4);
  const auto none = intactness_scan(g, col, exact({heavy, heavy}));
  CHECK(none.smallest_detected_m == 0);
  CHECK(none.intactness_bound == 0);
}

TEST_CASE("intactness scan: coverage ends where constants run out") {
  // A 6-vertex tree that is neither chain, star, nor lattice: exhaustive
  // constants exist (n <= gate), so every m is covered.
  Graph tree(6);
  tree.add_edge(0, 1);
  tree.add_edge(1, 2);
  tree.add_edge(1, 3);
  tree.add_edge(3, 4);
  tree.add_edge(4, 5);
  const auto col = *two_coloring(tree);
  const auto rep = intactness_scan(tree, col, exact({Rational(1), Rational(1)}));
  CHECK(rep.max_m_covered == 6);

  // Gate the enumeration down: coverage stops before m = 2 entirely, and
  // that is an error.
  CHECK_THROWS_AS(intactness_scan(tree, col, exact({Rational(1), Rational(1)}), 3.0, 5),
                  std::invalid_argument);
}
