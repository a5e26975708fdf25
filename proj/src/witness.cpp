#include "entwit/witness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entwit {

std::string witness_kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::fully_separable: return "fully_separable";
    case WitnessKind::genuine: return "genuine";
    case WitnessKind::m_separable: return "m_separable";
    case WitnessKind::gme: return "gme";
  }
  return "?";
}

WitnessKind witness_kind_from_name(const std::string& name) {
  if (name == "fully_separable") return WitnessKind::fully_separable;
  if (name == "genuine") return WitnessKind::genuine;
  if (name == "m_separable") return WitnessKind::m_separable;
  if (name == "gme") return WitnessKind::gme;
  throw std::invalid_argument("unknown witness kind '" + name + "'");
}

namespace {

void check_graph_and_coloring(const Graph& g, const Coloring& coloring) {
  if (g.n() == 0) throw std::invalid_argument("empty graph");
  if (!g.connected())
    throw std::invalid_argument("witness refuses disconnected graphs: the graph state factors "
                                "across components");
  if (!is_proper_coloring(g, coloring))
    throw std::invalid_argument("coloring must be proper (classes independent, disjoint, covering)");
}

}  // namespace

Witness build_witness(const Graph& g, const Coloring& coloring, WitnessKind kind,
                      const std::optional<Partition>& partition, int m, int enum_gate) {
  check_graph_and_coloring(g, coloring);
  Witness w;
  w.kind = kind;
  w.graph = g;
  w.coloring = coloring;
  const int k = coloring.k();

  switch (kind) {
    case WitnessKind::fully_separable:
    case WitnessKind::genuine: {
      if (!partition) throw std::invalid_argument("this witness kind needs a partition");
      if (partition->n() != g.n()) throw std::invalid_argument("partition size does not match graph");
      if (partition->m() < 2) throw std::invalid_argument("need at least 2 blocks");
      w.partition = *partition;
      const auto rep = c_min_c_max(g, *partition);
      w.c_term = (kind == WitnessKind::fully_separable) ? rep.c_min.value : rep.c_max.value;
      w.c_method = "cuts";
      break;
    }
    case WitnessKind::m_separable: {
      if (m < 2 || m > g.n()) throw std::invalid_argument("need 2 <= m <= n");
      w.m = m;
      const CmBound cm = has_analytic_c_m(g, m) ? c_m_analytic(g, m) : c_m_exhaustive(g, m, enum_gate);
      w.c_term = cm.value;
      w.c_tight = cm.tight;
      w.c_method = cm.method;
      break;
    }
    case WitnessKind::gme: {
      w.c_term = Rational(1, 2);
      w.c_method = "biseparable_fidelity_bound";
      break;
    }
  }
  w.constant = Rational(k - 1) + w.c_term;
  return w;
}

Witness build_subsystem_witness(const Graph& g, const Coloring& coloring,
                                const Partition& partition, const std::vector<int>& keep_blocks,
                                WitnessKind kind, int enum_gate) {
  check_graph_and_coloring(g, coloring);
  if (partition.n() != g.n()) throw std::invalid_argument("partition size does not match graph");
  std::vector<char> keep(partition.m(), 0);
  for (int b : keep_blocks) {
    if (b < 0 || b >= partition.m()) throw std::out_of_range("block index out of range");
    keep[b] = 1;
  }
  std::vector<int> drop;
  for (int b = 0; b < partition.m(); ++b)
    if (!keep[b]) drop.insert(drop.end(), partition.blocks[b].begin(), partition.blocks[b].end());
  if (drop.empty()) throw std::invalid_argument("subsystem witness must drop at least one block");
  if (static_cast<int>(drop.size()) == g.n()) throw std::invalid_argument("cannot drop every block");

  const auto sub = delete_vertices(g, drop);

  // Restrict coloring and partition to the kept vertices, reindexed.
  const auto colors = coloring.assignment(g.n());
  Coloring sub_col;
  sub_col.classes.assign(coloring.k(), {});
  for (int nv = 0; nv < sub.graph.n(); ++nv)
    sub_col.classes[colors[sub.old_of_new[nv]]].push_back(nv);
  std::erase_if(sub_col.classes, [](const auto& c) { return c.empty(); });
  std::sort(sub_col.classes.begin(), sub_col.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  Partition sub_part;
  for (int b = 0; b < partition.m(); ++b) {
    if (!keep[b]) continue;
    std::vector<int> blk;
    for (int v : partition.blocks[b]) blk.push_back(sub.new_of_old[v]);
    sub_part.blocks.push_back(std::move(blk));
  }
  sub_part.canonicalize();

  std::optional<Partition> ctx;
  if (kind == WitnessKind::fully_separable || kind == WitnessKind::genuine) ctx = sub_part;
  Witness w = build_witness(sub.graph, sub_col, kind, ctx, /*m=*/0, enum_gate);
  w.is_subsystem = true;
  w.parent_vertices = sub.old_of_new;
  return w;
}

namespace {

WitnessVerdict make_verdict(const Rational& constant, const std::vector<ProjectorEstimate>& ests,
                            double z_threshold) {
  if (!(z_threshold > 0)) throw std::invalid_argument("z threshold must be positive");
  WitnessVerdict v;
  v.value = constant;
  double var = 0.0;
  bool exact = true;
  for (const auto& e : ests) {
    if (e.value < Rational(0) || e.value > Rational(1))
      throw std::invalid_argument("projector estimates must lie in [0, 1]");
    if (e.std_err < 0) throw std::invalid_argument("negative standard error");
    v.value -= e.value;
    var += e.std_err * e.std_err;
    if (e.std_err != 0.0) exact = false;
  }
  v.value_d = to_double(v.value);
  v.std_err = std::sqrt(var);
  v.exact = exact;
  if (exact) {
    v.detected = v.value < Rational(0);
    v.z = 0.0;
  } else {
    v.z = -v.value_d / v.std_err;
    v.detected = v.z > z_threshold;
  }
  return v;
}

std::string interpret(const Witness& w, bool detected) {
  if (!detected) return "no detection: the separability model is not excluded by this data";
  switch (w.kind) {
    case WitnessKind::fully_separable:
      return "detected: not fully separable across the given partition (entangled)";
    case WitnessKind::genuine:
      return "detected: genuine multipartite entanglement across the given partition";
    case WitnessKind::m_separable:
      return "detected: not " + std::to_string(w.m) + "-separable; entanglement intactness <= " +
             std::to_string(w.m - 1);
    case WitnessKind::gme:
      return "detected: genuine multipartite entanglement (every biseparable model excluded)";
  }
  return "";
}

}  // namespace

WitnessVerdict evaluate(const Witness& w, const std::vector<ProjectorEstimate>& estimates,
                        double z_threshold) {
  if (static_cast<int>(estimates.size()) != w.k())
    throw std::invalid_argument("need exactly one estimate per measurement setting");
  WitnessVerdict v = make_verdict(w.constant, estimates, z_threshold);
  v.interpretation = interpret(w, v.detected);
  return v;
}

Rational white_noise_expectation(const Rational& p, int class_size) {
  if (p < Rational(0) || p > Rational(1)) throw std::invalid_argument("noise rate must be in [0, 1]");
  if (class_size < 1) throw std::invalid_argument("class size must be positive");
  return Rational(1) - p * (Rational(1) - pow2(-class_size));
}

Rational noise_threshold(const Witness& w) {
  Rational denom(w.k());
  for (const auto& cl : w.coloring.classes) denom -= pow2(-static_cast<int>(cl.size()));
  return (Rational(1) - w.c_term) / denom;
}

IntactnessReport intactness_scan(const Graph& g, const Coloring& coloring,
                                 const std::vector<ProjectorEstimate>& estimates,
                                 double z_threshold, int enum_gate) {
  check_graph_and_coloring(g, coloring);
  IntactnessReport rep;
  Rational prev_value;
  for (int m = 2; m <= g.n(); ++m) {
    Witness w;
    try {
      w = build_witness(g, coloring, WitnessKind::m_separable, std::nullopt, m, enum_gate);
    } catch (const std::invalid_argument&) {
      break;  // no constant available at this m; coverage ends here
    }
    IntactnessReport::Entry e;
    e.m = m;
    e.constant = w.constant;
    e.tight = w.c_tight;
    e.verdict = evaluate(w, estimates, z_threshold);
    rep.max_m_covered = m;
    // Detection is monotone because C_m never increases with m.
    if (m > 2 && e.verdict.value > prev_value)
      throw std::logic_error("witness value must be non-increasing in m");
    prev_value = e.verdict.value;
    if (e.verdict.detected && rep.smallest_detected_m == 0) rep.smallest_detected_m = m;
    rep.entries.push_back(std::move(e));
  }
  if (rep.entries.empty())
    throw std::invalid_argument("no m-separability constants available for this graph");

  if (rep.smallest_detected_m == 0) {
    rep.intactness_bound = 0;
    rep.interpretation = "no detection: no m-separability model excluded up to m = " +
                         std::to_string(rep.max_m_covered);
  } else {
    rep.intactness_bound = rep.smallest_detected_m - 1;
    if (rep.smallest_detected_m == 2) {
      rep.interpretation = "not m-separable for any covered m >= 2: genuinely multipartite "
                           "entangled (intactness 1)";
    } else {
      rep.interpretation = "not " + std::to_string(rep.smallest_detected_m) +
                           "-separable: entanglement intactness <= " +
                           std::to_string(rep.intactness_bound);
    }
  }
  return rep;
}

}  // namespace entwit
