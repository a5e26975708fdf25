#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <stdexcept>

#include "entwit/entropy.hpp"
#include "entwit/graph.hpp"
#include "entwit/run.hpp"
#include "entwit/witness.hpp"

namespace py = pybind11;
using namespace entwit;

namespace {

Graph load(const std::string& spec) {
  if (spec.find(':') != std::string::npos) return graph_from_builder(spec);
  throw std::invalid_argument("pass a builder spec like 'chain:6'");
}

// (exit_code, stdout, stderr) of one CLI command, in process.
py::tuple run_command(const std::string& name, const RunConfig& cfg) {
  std::ostringstream out, err;
  int code = 0;
  if (name == "bounds") code = cmd_bounds(cfg, out, err);
  else if (name == "simulate") code = cmd_simulate(cfg, out, err);
  else if (name == "intactness") code = cmd_intactness(cfg, out, err);
  else if (name == "verify") code = cmd_verify(cfg, out, err);
  else throw std::invalid_argument("unknown command '" + name + "'");
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_entwit, m) {
  m.doc() = "entanglement-structure witnesses for graph states";

  py::class_<RunConfig>(m, "RunConfig")
      .def(py::init<>())
      .def_readwrite("graph_spec", &RunConfig::graph_spec)
      .def_readwrite("partition_text", &RunConfig::partition_text)
      .def_readwrite("kind", &RunConfig::kind)
      .def_readwrite("m", &RunConfig::m)
      .def_readwrite("keep_blocks", &RunConfig::keep_blocks)
      .def_readwrite("noise_text", &RunConfig::noise_text)
      .def_readwrite("shots", &RunConfig::shots)
      .def_readwrite("seed", &RunConfig::seed)
      .def_readwrite("out_path", &RunConfig::out_path)
      .def_readwrite("format", &RunConfig::format)
      .def_readwrite("z_threshold", &RunConfig::z_threshold)
      .def_readwrite("dense_gate", &RunConfig::dense_gate)
      .def_readwrite("enum_gate", &RunConfig::enum_gate)
      .def_readwrite("raw_cap", &RunConfig::raw_cap)
      .def_readwrite("threads", &RunConfig::threads);

  m.def("run_command", &run_command, py::arg("name"), py::arg("config"),
        "run a CLI command in process; returns (exit_code, stdout, stderr)");

  m.def(
      "cut_entropy",
      [](const std::string& spec, const std::vector<int>& a) {
        return cut_entropy(load(spec), a);
      },
      py::arg("graph"), py::arg("a"),
      "entanglement entropy in bits across the cut {a, rest}");

  m.def(
      "witness_constant",
      [](const std::string& spec, const std::string& kind, const std::string& partition, int m) {
        const Graph g = load(spec);
        Coloring col;
        if (auto two = two_coloring(g)) col = *two;
        else col = chromatic_coloring(g);
        std::optional<Partition> part;
        if (!partition.empty()) part = parse_partition(partition);
        const Witness w = build_witness(g, col, witness_kind_from_name(kind), part, m);
        return py::make_tuple(to_string(w.constant), to_double(w.constant),
                              to_string(noise_threshold(w)));
      },
      py::arg("graph"), py::arg("kind"), py::arg("partition") = std::string(), py::arg("m") = 0,
      "witness constant and noise threshold as (fraction, float, p_limit fraction)");
}
