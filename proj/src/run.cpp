#include "entwit/run.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "entwit/json_io.hpp"
#include "entwit/statevec.hpp"

namespace entwit {

namespace {

// Decimal only; strips leading zeros because the BigInt string constructor
// would read them as an octal prefix ("025" -> 21).
BigInt parse_bigint(std::string s) {
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad integer '" + s + "'");
  const auto first = s.find_first_not_of('0');
  const BigInt v(first == std::string::npos ? "0" : s.substr(first));
  return neg ? -v : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    return Rational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
  }
  std::string s = text;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  const auto dot = s.find('.');
  std::string digits = s;
  size_t frac = 0;
  if (dot != std::string::npos) {
    digits = s.substr(0, dot) + s.substr(dot + 1);
    frac = s.size() - dot - 1;
  }
  const BigInt num = parse_bigint(digits);
  BigInt den = 1;
  for (size_t i = 0; i < frac; ++i) den *= 10;
  return Rational(neg ? -num : num, den);
}

namespace {

Graph load_graph(const RunConfig& cfg) {
  if (cfg.graph_spec.empty()) throw std::invalid_argument("--graph is required");
  if (cfg.graph_spec.find(':') != std::string::npos) return graph_from_builder(cfg.graph_spec);
  std::ifstream in(cfg.graph_spec);
  if (!in) throw std::invalid_argument("cannot open graph file '" + cfg.graph_spec + "'");
  json j;
  in >> j;
  return graph_from_json(j);
}

Partition load_partition(const std::string& text, int n) {
  Partition p;
  if (text.find(',') != std::string::npos) {
    p = parse_partition(text);
  } else {
    std::ifstream in(text);
    if (!in) throw std::invalid_argument("cannot open partition file '" + text + "'");
    json j;
    in >> j;
    p = partition_from_json(j);
  }
  if (p.n() != n)
    throw std::invalid_argument("partition covers " + std::to_string(p.n()) + " vertices, graph has " +
                                std::to_string(n));
  return p;
}

Coloring default_coloring(const Graph& g) {
  if (auto two = two_coloring(g)) return *two;
  return chromatic_coloring(g);
}

void write_output(const RunConfig& cfg, std::ostream& out, const std::string& content) {
  if (cfg.out_path.empty()) {
    out << content;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write '" + cfg.out_path + "'");
  f << content;
}

std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << to_string(r) << " (" << to_double(r) << ")";
  return os.str();
}

json witness_summary_json(const Witness& w) {
  json out;
  out["kind"] = witness_kind_name(w.kind);
  out["k"] = w.k();
  out["constant"] = rational_to_json(w.constant);
  out["constant_decimal"] = to_double(w.constant);
  out["c_term"] = rational_to_json(w.c_term);
  out["method"] = w.c_method;
  out["tight"] = w.c_tight;
  const Rational pl = noise_threshold(w);
  out["p_limit"] = to_double(pl);
  out["p_limit_exact"] = rational_to_json(pl);
  if (w.kind == WitnessKind::m_separable) out["m"] = w.m;
  return out;
}

// Exact <P_l> estimates under white noise p, handling the subsystem case:
// the kept marginal damps class l by 2^-rank(cross block to the dropped
// vertices), and the noise branch contributes p * 2^-|class|.
std::vector<ProjectorEstimate> exact_noise_estimates(const Witness& w, const Graph& parent,
                                                     const Rational& p) {
  std::vector<ProjectorEstimate> out;
  if (!w.is_subsystem) {
    for (const auto& cl : w.coloring.classes)
      out.push_back({white_noise_expectation(p, static_cast<int>(cl.size())), 0.0, 0});
    return out;
  }
  std::vector<char> kept(parent.n(), 0);
  for (int pv : w.parent_vertices) kept[pv] = 1;
  std::vector<int> dropped;
  for (int v = 0; v < parent.n(); ++v)
    if (!kept[v]) dropped.push_back(v);
  for (const auto& cl : w.coloring.classes) {
    BitMatrix cross(static_cast<int>(cl.size()), static_cast<int>(dropped.size()));
    for (size_t r = 0; r < cl.size(); ++r) {
      const int pv = w.parent_vertices[cl[r]];
      for (size_t c = 0; c < dropped.size(); ++c)
        if (parent.has_edge(pv, dropped[c])) cross.set(static_cast<int>(r), static_cast<int>(c), true);
    }
    const int r = rank_gf2(cross);
    const Rational ideal = pow2(-r);
    const Rational mixed = pow2(-static_cast<int>(cl.size()));
    out.push_back({(Rational(1) - p) * ideal + p * mixed, 0.0, 0});
  }
  return out;
}

Witness build_requested_witness(const RunConfig& cfg, const Graph& g, const Coloring& coloring,
                                const std::optional<Partition>& part) {
  const WitnessKind kind = witness_kind_from_name(cfg.kind);
  if (!cfg.keep_blocks.empty()) {
    if (!part) throw std::invalid_argument("--keep needs --partition");
    return build_subsystem_witness(g, coloring, *part, cfg.keep_blocks, kind, cfg.enum_gate);
  }
  return build_witness(g, coloring, kind, part, cfg.m, cfg.enum_gate);
}

std::string describe_coloring(const Coloring& c) {
  std::ostringstream os;
  os << "k=" << c.k();
  for (const auto& cl : c.classes) {
    os << " {";
    for (size_t i = 0; i < cl.size(); ++i) os << (i ? "," : "") << cl[i];
    os << "}";
  }
  return os.str();
}

}  // namespace

int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const Graph g = load_graph(cfg);
    const Coloring coloring = default_coloring(g);
    const bool connected = g.connected();

    std::optional<Partition> part;
    if (!cfg.partition_text.empty()) part = load_partition(cfg.partition_text, g.n());

    json j;
    j["graph"] = graph_to_json(g);
    j["family"] = family_name(g.family());
    j["connected"] = connected;
    j["coloring"] = coloring_to_json(coloring);
    j["k"] = coloring.k();

    std::ostringstream text;
    text << "graph: " << cfg.graph_spec << "  n=" << g.n() << "  family=" << family_name(g.family())
         << (connected ? "" : "  DISCONNECTED (witnesses unavailable)") << "\n";
    text << "coloring: " << describe_coloring(coloring) << "\n";

    if (part) {
      j["partition"] = partition_to_json(*part);
      const auto rep = c_min_c_max(g, *part);
      j["cuts"] = bound_report_to_json(rep);
      text << "partition blocks: " << part->m() << "\n";
      text << "c_min = " << rational_text(rep.c_min.value) << "  entropy " << rep.c_min.entropy
           << "  achievers " << rep.c_min.achiever_count << "\n";
      text << "c_max = " << rational_text(rep.c_max.value) << "  entropy " << rep.c_max.entropy
           << "  achievers " << rep.c_max.achiever_count << "\n";
    }

    json witnesses;
    if (connected) {
      if (part) {
        for (const auto kind : {WitnessKind::fully_separable, WitnessKind::genuine}) {
          const Witness w = build_witness(g, coloring, kind, part);
          witnesses[witness_kind_name(kind)] = witness_summary_json(w);
          text << witness_kind_name(kind) << ": c = " << rational_text(w.constant)
               << "  p_limit = " << rational_text(noise_threshold(w)) << "\n";
        }
      }
      {
        const Witness w = build_witness(g, coloring, WitnessKind::gme);
        witnesses["gme"] = witness_summary_json(w);
        text << "gme: c = " << rational_text(w.constant)
             << "  p_limit = " << rational_text(noise_threshold(w)) << "\n";
      }
      if (cfg.m > 0) {
        const Witness w =
            build_witness(g, coloring, WitnessKind::m_separable, std::nullopt, cfg.m, cfg.enum_gate);
        witnesses["m_separable"] = witness_summary_json(w);
        text << "m_separable (m=" << cfg.m << "): c = " << rational_text(w.constant)
             << "  method=" << w.c_method << (w.c_tight ? "" : "  (upper bound, not tight)")
             << "  p_limit = " << rational_text(noise_threshold(w)) << "\n";
      }
      if (!cfg.keep_blocks.empty()) {
        if (!part) throw std::invalid_argument("--keep needs --partition");
        json sub;
        sub["kept_blocks"] = cfg.keep_blocks;
        for (const auto kind : {WitnessKind::fully_separable, WitnessKind::genuine}) {
          const Witness w = build_subsystem_witness(g, coloring, *part, cfg.keep_blocks, kind,
                                                    cfg.enum_gate);
          sub["vertices"] = w.parent_vertices;
          sub[witness_kind_name(kind)] = witness_summary_json(w);
          text << "subsystem " << witness_kind_name(kind) << ": c = " << rational_text(w.constant)
               << "  k=" << w.k() << "\n";
        }
        j["subsystem"] = std::move(sub);
      }
    }
    j["witnesses"] = std::move(witnesses);

    write_output(cfg, out, cfg.format == "json" ? j.dump(2) + "\n" : text.str());
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const Graph g = load_graph(cfg);
    const Coloring coloring = default_coloring(g);
    std::optional<Partition> part;
    if (!cfg.partition_text.empty()) part = load_partition(cfg.partition_text, g.n());
    const Witness w = build_requested_witness(cfg, g, coloring, part);
    const Rational p_exact = parse_rational(cfg.noise_text);
    const double p = to_double(p_exact);

    std::vector<ProjectorEstimate> estimates;
    std::optional<ExperimentRecord> record;
    if (cfg.shots == 0) {
      estimates = exact_noise_estimates(w, g, p_exact);
    } else {
      record = run_experiment(g, coloring, cfg.shots, p, cfg.seed, cfg.dense_gate, cfg.raw_cap,
                              cfg.threads);
      if (!w.is_subsystem) {
        estimates = record->estimates();
      } else {
        // Marginal evaluation: reuse the parent shots, ignore dropped qubits.
        const auto parent_colors = coloring.assignment(g.n());
        for (const auto& cl : w.coloring.classes) {
          const int parent_class = parent_colors[w.parent_vertices[cl.front()]];
          const auto& sres = record->settings[parent_class];
          if (sres.truncated)
            throw std::invalid_argument("subsystem marginals need raw shots; raise --raw-cap");
          ProjectorEvaluator ev(w.graph, cl, g.n(), w.parent_vertices);
          for (long long s = 0; s < sres.outcomes.shots(); ++s) ev.tally(sres.outcomes.shot(s));
          estimates.push_back(ev.finish().estimate());
        }
      }
    }

    const WitnessVerdict verdict = evaluate(w, estimates, cfg.z_threshold);
    const json vj = verdict_to_json(w, verdict);

    if (cfg.format == "csv") {
      if (!record) throw std::invalid_argument("csv format needs --shots");
      write_output(cfg, out, record_to_csv(*record));
      return 0;
    }
    if (cfg.format == "json") {
      json j;
      j["witness"] = vj;
      j["estimates"] = json::array();
      for (const auto& e : estimates) {
        json je = rational_to_json(e.value);
        je["decimal"] = to_double(e.value);
        je["stderr"] = e.std_err;
        je["shots"] = e.shots;
        j["estimates"].push_back(std::move(je));
      }
      if (record) j["record"] = record_to_json(*record);
      write_output(cfg, out, j.dump(2) + "\n");
      return 0;
    }

    std::ostringstream text;
    text << "witness " << witness_kind_name(w.kind) << "  k=" << w.k()
         << "  c = " << rational_text(w.constant) << "\n";
    for (size_t l = 0; l < estimates.size(); ++l) {
      text << "  <P" << l + 1 << "> = " << to_double(estimates[l].value);
      if (estimates[l].std_err > 0) text << " +- " << estimates[l].std_err;
      text << "\n";
    }
    text << "value = " << verdict.value_d;
    if (!verdict.exact) text << "  stderr = " << verdict.std_err << "  z = " << verdict.z;
    text << "\n" << verdict.interpretation << "\n";
    text << "p_limit = " << rational_text(noise_threshold(w)) << "\n";
    write_output(cfg, out, text.str());
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_intactness(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const Graph g = load_graph(cfg);
    const Coloring coloring = default_coloring(g);
    const Rational p_exact = parse_rational(cfg.noise_text);

    std::vector<ProjectorEstimate> estimates;
    if (cfg.shots == 0) {
      for (const auto& cl : coloring.classes)
        estimates.push_back({white_noise_expectation(p_exact, static_cast<int>(cl.size())), 0.0, 0});
    } else {
      const auto record = run_experiment(g, coloring, cfg.shots, to_double(p_exact), cfg.seed,
                                         cfg.dense_gate, cfg.raw_cap, cfg.threads);
      estimates = record.estimates();
    }

    const IntactnessReport rep = intactness_scan(g, coloring, estimates, cfg.z_threshold,
                                                 cfg.enum_gate);
    if (cfg.format == "json") {
      write_output(cfg, out, intactness_to_json(rep).dump(2) + "\n");
      return 0;
    }
    std::ostringstream text;
    text << "m-separability scan, m = 2.." << rep.max_m_covered << "\n";
    for (const auto& e : rep.entries) {
      text << "  m=" << e.m << "  c = " << rational_text(e.constant)
           << (e.tight ? "" : " (upper bound)") << "  value = " << e.verdict.value_d << "  "
           << (e.verdict.detected ? "DETECTED" : "-") << "\n";
    }
    text << rep.interpretation << "\n";
    write_output(cfg, out, text.str());
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

namespace {

struct Check {
  std::string name;
  std::function<std::string()> run;  // empty string = pass
};

std::string expect_rational(const Rational& got, const Rational& want, const std::string& what) {
  if (got == want) return "";
  return what + ": got " + to_string(got) + ", want " + to_string(want);
}

std::string expect_near(double got, double want, double tol, const std::string& what) {
  if (std::abs(got - want) <= tol) return "";
  std::ostringstream os;
  os << what << ": got " << got << ", want " << want << " +- " << tol;
  return os.str();
}

Partition fig3b_partition() {
  // 5x5 lattice: top-left 3x3, bottom-left 2x3, right two columns.
  Partition p;
  p.blocks.resize(3);
  for (int r = 0; r < 5; ++r) {
    for (int c = 0; c < 5; ++c) {
      const int v = r * 5 + c;
      if (c >= 3) p.blocks[2].push_back(v);
      else if (r <= 2) p.blocks[0].push_back(v);
      else p.blocks[1].push_back(v);
    }
  }
  p.canonicalize();
  return p;
}

Partition quadrant_partition() {
  // 4x4 lattice: the four 2x2 quadrants.
  Partition p;
  p.blocks.resize(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) p.blocks[(r / 2) * 2 + (c / 2)].push_back(r * 4 + c);
  p.canonicalize();
  return p;
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<Check> checks;

  checks.push_back({"pinned witness constants", [&]() -> std::string {
    {
      const Graph g = chain_graph(6);
      const auto coloring = *two_coloring(g);
      const auto part = parse_partition("0,1,1,2,2,2");
      Witness wf = build_witness(g, coloring, WitnessKind::fully_separable, part);
      if (cfg.corrupt_constant) wf.constant += Rational(1, 64);  // negative control
      if (auto e = expect_rational(wf.constant, Rational(5, 4), "chain(6) fully_separable"); !e.empty())
        return e;
      const Witness wb = build_witness(g, coloring, WitnessKind::genuine, part);
      if (auto e = expect_rational(wb.constant, Rational(3, 2), "chain(6) genuine"); !e.empty())
        return e;
      if (auto e = expect_rational(noise_threshold(wb), Rational(2, 7), "chain(6) genuine p_limit");
          !e.empty())
        return e;
    }
    {
      const Graph g = lattice_graph(5, 5);
      const auto coloring = *two_coloring(g);
      const auto part = fig3b_partition();
      const Witness wf = build_witness(g, coloring, WitnessKind::fully_separable, part);
      const Witness wb = build_witness(g, coloring, WitnessKind::genuine, part);
      if (auto e = expect_rational(wf.constant, Rational(33, 32), "lattice(5,5) fully_separable");
          !e.empty())
        return e;
      if (auto e = expect_rational(wb.constant, Rational(17, 16), "lattice(5,5) genuine"); !e.empty())
        return e;
    }
    {
      const Graph g = ring_graph(5);
      const auto coloring = chromatic_coloring(g);
      if (coloring.k() != 3) return "ring(5) should need 3 colors";
      const auto part = parse_partition("0,1,1,2,2");
      const Witness wf = build_witness(g, coloring, WitnessKind::fully_separable, part);
      const Witness wb = build_witness(g, coloring, WitnessKind::genuine, part);
      if (auto e = expect_rational(wf.constant, Rational(9, 4), "ring(5) fully_separable"); !e.empty())
        return e;
      if (auto e = expect_rational(wb.constant, Rational(5, 2), "ring(5) genuine"); !e.empty())
        return e;
    }
    {
      const Graph g = lattice_graph(4, 4);
      const auto coloring = *two_coloring(g);
      const Witness wf = build_subsystem_witness(g, coloring, quadrant_partition(), {0, 1, 2},
                                                 WitnessKind::fully_separable);
      const Witness wb = build_subsystem_witness(g, coloring, quadrant_partition(), {0, 1, 2},
                                                 WitnessKind::genuine);
      if (auto e = expect_rational(wf.constant, Rational(9, 8), "4x4 subsystem fully_separable");
          !e.empty())
        return e;
      if (auto e = expect_rational(wb.constant, Rational(5, 4), "4x4 subsystem genuine"); !e.empty())
        return e;
    }
    {
      const Graph g = star_graph(4);
      const Witness w = build_witness(g, *two_coloring(g), WitnessKind::gme);
      if (w.k() != 2) return "star(4) should use 2 settings";
      if (auto e = expect_rational(w.constant, Rational(3, 2), "star(4) gme"); !e.empty()) return e;
    }
    return "";
  }});

  checks.push_back({"rank entropy matches dense oracle", [&]() -> std::string {
    Rng rng(20250816);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 2 + static_cast<int>(rng.next_below(6));
      Graph g(n);
      do {
        g = Graph(n);
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(0.5)) g.add_edge(u, v);
      } while (!g.connected());
      const auto psi = build_graph_state(g);
      for (int rep = 0; rep < 5; ++rep) {
        std::vector<int> a;
        for (int v = 0; v < n; ++v)
          if (rng.bernoulli(0.5)) a.push_back(v);
        if (a.empty() || static_cast<int>(a.size()) == n) continue;
        const int s_rank = cut_entropy(g, a);
        const auto rho = reduced_density(psi, a);
        if (auto e = expect_near(entropy_bits(rho), s_rank, 1e-8, "entropy"); !e.empty()) return e;
        // Flat spectrum: every nonzero eigenvalue equals 2^-S.
        for (double lam : spectrum(rho)) {
          if (lam > 1e-9 && std::abs(lam - std::ldexp(1.0, -s_rank)) > 1e-9)
            return "spectrum not flat at 2^-" + std::to_string(s_rank);
        }
      }
    }
    return "";
  }});

  checks.push_back({"witness operator bound (min eigenvalue)", [&]() -> std::string {
    {
      const Graph g = chain_graph(5);
      const double eig = witness_operator_min_eig(g, *two_coloring(g));
      if (eig < -1e-9) return "chain(5): min eig " + std::to_string(eig);
    }
    {
      const Graph g = ring_graph(5);
      const double eig = witness_operator_min_eig(g, chromatic_coloring(g));
      if (eig < -1e-9) return "ring(5) k=3: min eig " + std::to_string(eig);
    }
    return "";
  }});

  checks.push_back({"saturating states sit exactly on the bounds", [&]() -> std::string {
    {  // biseparable vs gme witness on chain(8)
      const Graph g = chain_graph(8);
      const auto col = *two_coloring(g);
      const auto psi = saturating_state_bisep(g, col);
      const Witness w = build_witness(g, col, WitnessKind::gme);
      double total = 0.0;
      for (const auto& cl : col.classes) total += projector_expectation(psi, g, cl);
      if (auto e = expect_near(to_double(w.constant) - total, 0.0, 1e-9, "gme saturation");
          !e.empty())
        return e;
    }
    {  // fully separable product vs fully_separable witness, singleton blocks
      const Graph g = chain_graph(8);
      const auto col = *two_coloring(g);
      const auto psi = saturating_state_fullsep(g, col);
      Partition singles;
      for (int v = 0; v < 8; ++v) singles.blocks.push_back({v});
      const Witness w = build_witness(g, col, WitnessKind::fully_separable, singles);
      double total = 0.0;
      for (const auto& cl : col.classes) total += projector_expectation(psi, g, cl);
      if (auto e = expect_near(to_double(w.constant) - total, 0.0, 1e-9, "fully_separable saturation");
          !e.empty())
        return e;
    }
    {  // m-separable chain state, m = 4 on chain(9)
      const Graph g = chain_graph(9);
      const auto col = *two_coloring(g);
      const auto psi = saturating_state_msep_chain(g, 4);
      const Witness w = build_witness(g, col, WitnessKind::m_separable, std::nullopt, 4);
      double total = 0.0;
      for (const auto& cl : col.classes) total += projector_expectation(psi, g, cl);
      if (auto e = expect_near(to_double(w.constant) - total, 0.0, 1e-9, "m_separable saturation");
          !e.empty())
        return e;
    }
    {  // 5-separable lattice state on lattice(3,4)
      const Graph g = lattice_graph(3, 4);
      const auto col = *two_coloring(g);
      const auto psi = saturating_state_msep_lattice5(g);
      const Witness w = build_witness(g, col, WitnessKind::m_separable, std::nullopt, 5);
      double total = 0.0;
      for (const auto& cl : col.classes) total += projector_expectation(psi, g, cl);
      if (auto e = expect_near(to_double(w.constant) - total, 0.0, 1e-9, "lattice m=5 saturation");
          !e.empty())
        return e;
    }
    return "";
  }});

  checks.push_back({"sampler reproduces ideal expectations", [&]() -> std::string {
    {
      const Graph g = chain_graph(8);
      const auto rec = run_experiment(g, *two_coloring(g), 2000, 0.0, 7);
      for (const auto& s : rec.settings)
        if (s.counts.hits != s.counts.shots) return "dense path: ideal estimate below 1";
    }
    {
      const Graph g = chain_graph(40);
      const auto rec = run_experiment(g, *two_coloring(g), 500, 0.0, 7, /*dense_gate=*/14);
      for (const auto& s : rec.settings)
        if (s.counts.hits != s.counts.shots) return "tableau path: ideal estimate below 1";
    }
    return "";
  }});

  checks.push_back({"tableau and dense samplers agree", [&]() -> std::string {
    const Graph g = ring_graph(6);
    const auto col = *two_coloring(g);
    const auto settings = settings_for_coloring(g, col);
    for (const auto& setting : settings) {
      const SettingSampler dense(g, setting, /*dense_gate=*/14);
      const SettingSampler tab(g, setting, /*dense_gate=*/0);
      const auto& probs = dense.dense_probabilities();
      // Dense support must be the affine space the tableau solves: uniform
      // probability 2^-(n - constraints) on exactly 2^(n - constraints) points.
      const int free_bits = g.n() - tab.constraint_count();
      const double expect_p = std::ldexp(1.0, -free_bits);
      long long support = 0;
      for (double p : probs) {
        if (p > 1e-12 && std::abs(p - expect_p) > 1e-9) return "dense distribution not uniform";
        if (p > 1e-12) ++support;
      }
      if (support != (1LL << free_bits)) return "dense support size mismatch";
      Rng rng(99);
      std::vector<uint64_t> shot(1);
      for (int s = 0; s < 256; ++s) {
        tab.sample_shot(shot.data(), 0.0, rng);
        if (probs[shot[0]] < 1e-12) return "tableau sample outside dense support";
      }
    }
    return "";
  }});

  checks.push_back({"noise threshold flips detection", [&]() -> std::string {
    const Graph g = chain_graph(6);
    const auto col = *two_coloring(g);
    const Witness w = build_witness(g, col, WitnessKind::genuine, parse_partition("0,1,1,2,2,2"));
    const Rational pl = noise_threshold(w);
    const Rational eps(1, 1000000000);
    auto value_at = [&](const Rational& p) {
      Rational v = w.constant;
      for (const auto& cl : col.classes) v -= white_noise_expectation(p, static_cast<int>(cl.size()));
      return v;
    };
    if (!(value_at(pl - eps) < Rational(0))) return "just below p_limit should detect";
    if (value_at(pl + eps) < Rational(0)) return "just above p_limit should not detect";
    if (!(pl > Rational(1, 2 * w.k()))) return "p_limit must exceed 1/(2k)";
    return "";
  }});

  int failures = 0;
  std::ostringstream text;
  for (const auto& c : checks) {
    std::string detail;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (detail.empty()) {
      text << "ok   " << c.name << "\n";
    } else {
      ++failures;
      text << "FAIL " << c.name << " -- " << detail << "\n";
    }
  }
  text << (failures ? "verification FAILED (" + std::to_string(failures) + ")" : "all checks passed")
       << "\n";
  try {
    write_output(cfg, out, text.str());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return failures ? 1 : 0;
}

}  // namespace entwit
