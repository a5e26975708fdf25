#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "entwit/sampler.hpp"

namespace entwit {

// Shared command configuration, one field per CLI flag.
struct RunConfig {
  std::string graph_spec;      // builder string ("chain:6") or JSON file path
  std::string partition_text;  // label string ("0,1,1,2,2,2") or JSON file path
  std::string kind = "genuine";
  int m = 0;
  std::vector<int> keep_blocks;  // non-empty: subsystem witness on these blocks
  std::string noise_text = "0";  // exact decimal, e.g. "0.25"
  long long shots = 0;           // 0 = exact expectations instead of sampling
  uint64_t seed = 0;
  std::string out_path;  // empty = primary stream
  std::string format = "text";  // text | json (simulate also: csv)
  double z_threshold = 3.0;
  int dense_gate = 14;
  int enum_gate = 14;
  long long raw_cap = kRawShotCap;
  int threads = 0;
  bool corrupt_constant = false;  // verify-only negative control
};

// Exit codes: 0 success, 1 verification failure, 2 bad input/usage.
int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_intactness(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Exact rational from a plain decimal string like "0.25" or "2/7".
Rational parse_rational(const std::string& text);

}  // namespace entwit
