#include "entwit/json_io.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace entwit {

namespace {

json bigint_to_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<int64_t>::min();
  static const BigInt hi = std::numeric_limits<int64_t>::max();
  if (v >= lo && v <= hi) return v.convert_to<int64_t>();
  std::ostringstream os;
  os << v;
  return os.str();
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<int64_t>());
  if (j.is_string()) {
    // Guard against the BigInt string constructor's octal prefix: strip
    // leading zeros after validating the characters.
    std::string s = j.get<std::string>();
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
      neg = s[0] == '-';
      s = s.substr(1);
    }
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad integer string");
    const auto first = s.find_first_not_of('0');
    const BigInt v(first == std::string::npos ? "0" : s.substr(first));
    return neg ? -v : v;
  }
  throw std::invalid_argument("expected integer or decimal string");
}

}  // namespace

json rational_to_json(const Rational& r) {
  return json{{"num", bigint_to_json(r.numerator())}, {"den", bigint_to_json(r.denominator())}};
}

Rational rational_from_json(const json& j) {
  return Rational(bigint_from_json(j.at("num")), bigint_from_json(j.at("den")));
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  return json{{"n", g.n()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return graph_from_edges(n, edges);
}

json partition_to_json(const Partition& p) {
  json blocks = json::array();
  for (const auto& b : p.blocks) blocks.push_back(b);
  return json{{"blocks", std::move(blocks)}};
}

Partition partition_from_json(const json& j) {
  Partition p;
  for (const auto& b : j.at("blocks")) p.blocks.push_back(b.get<std::vector<int>>());
  p.canonicalize();
  return p;
}

json coloring_to_json(const Coloring& c) {
  json out = json::array();
  for (const auto& cl : c.classes) out.push_back(cl);
  return out;
}

Coloring coloring_from_json(const json& j) {
  Coloring c;
  for (const auto& cl : j) c.classes.push_back(cl.get<std::vector<int>>());
  return c;
}

namespace {

json extreme_to_json(const ExtremeBound& e) {
  json out = rational_to_json(e.value);
  out["decimal"] = to_double(e.value);
  out["entropy"] = e.entropy;
  out["cut"] = e.cut.a_blocks;
  out["achiever_count"] = e.achiever_count;
  json co = json::array();
  for (const auto& c : e.co_achievers) co.push_back(c.a_blocks);
  out["co_achievers"] = std::move(co);
  return out;
}

}  // namespace

json bound_report_to_json(const BoundReport& rep) {
  return json{{"c_min", extreme_to_json(rep.c_min)},
              {"c_max", extreme_to_json(rep.c_max)},
              {"cut_entropies", rep.cut_entropies}};
}

json cm_bound_to_json(const CmBound& cm) {
  json out = rational_to_json(cm.value);
  out["decimal"] = to_double(cm.value);
  out["entropy"] = cm.entropy;
  out["tight"] = cm.tight;
  out["method"] = cm.method;
  out["achiever"] = partition_to_json(cm.achiever);
  return out;
}

json verdict_to_json(const Witness& w, const WitnessVerdict& v) {
  json out;
  out["kind"] = witness_kind_name(w.kind);
  out["k"] = w.k();
  out["constant"] = rational_to_json(w.constant);
  out["constant_decimal"] = to_double(w.constant);
  out["value"] = v.value_d;
  out["value_exact"] = rational_to_json(v.value);
  out["stderr"] = v.std_err;
  out["z"] = v.z;
  out["exact"] = v.exact;
  out["detected"] = v.detected;
  const Rational pl = noise_threshold(w);
  out["p_limit"] = to_double(pl);
  out["p_limit_exact"] = rational_to_json(pl);
  if (w.kind == WitnessKind::m_separable) {
    out["m"] = w.m;
    out["c_tight"] = w.c_tight;
  }
  out["interpretation"] = v.interpretation;
  return out;
}

json intactness_to_json(const IntactnessReport& rep) {
  json entries = json::array();
  for (const auto& e : rep.entries) {
    json je;
    je["m"] = e.m;
    je["constant"] = rational_to_json(e.constant);
    je["tight"] = e.tight;
    je["value"] = e.verdict.value_d;
    je["stderr"] = e.verdict.std_err;
    je["detected"] = e.verdict.detected;
    entries.push_back(std::move(je));
  }
  return json{{"entries", std::move(entries)},
              {"max_m_covered", rep.max_m_covered},
              {"smallest_detected_m", rep.smallest_detected_m},
              {"intactness_bound", rep.intactness_bound},
              {"interpretation", rep.interpretation}};
}

static const char kB64[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::string base64_encode(const std::vector<uint8_t>& bytes) {
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  size_t i = 0;
  for (; i + 3 <= bytes.size(); i += 3) {
    const uint32_t v = (bytes[i] << 16) | (bytes[i + 1] << 8) | bytes[i + 2];
    out += kB64[v >> 18];
    out += kB64[(v >> 12) & 63];
    out += kB64[(v >> 6) & 63];
    out += kB64[v & 63];
  }
  const size_t rem = bytes.size() - i;
  if (rem == 1) {
    const uint32_t v = bytes[i] << 16;
    out += kB64[v >> 18];
    out += kB64[(v >> 12) & 63];
    out += "==";
  } else if (rem == 2) {
    const uint32_t v = (bytes[i] << 16) | (bytes[i + 1] << 8);
    out += kB64[v >> 18];
    out += kB64[(v >> 12) & 63];
    out += kB64[(v >> 6) & 63];
    out += '=';
  }
  return out;
}

std::vector<uint8_t> base64_decode(const std::string& text) {
  std::array<int8_t, 256> lut;
  lut.fill(-1);
  for (int i = 0; i < 64; ++i) lut[static_cast<uint8_t>(kB64[i])] = static_cast<int8_t>(i);
  std::vector<uint8_t> out;
  uint32_t acc = 0;
  int bits = 0;
  for (char ch : text) {
    if (ch == '=' || ch == '\n' || ch == '\r') continue;
    const int8_t v = lut[static_cast<uint8_t>(ch)];
    if (v < 0) throw std::invalid_argument("invalid base64 character");
    acc = (acc << 6) | static_cast<uint32_t>(v);
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out.push_back(static_cast<uint8_t>((acc >> bits) & 0xff));
    }
  }
  return out;
}

std::vector<uint8_t> pack_outcomes(const OutcomeBuffer& buf) {
  const int bytes_per_shot = (buf.n() + 7) / 8;
  std::vector<uint8_t> out(static_cast<size_t>(buf.shots()) * bytes_per_shot, 0);
  for (long long s = 0; s < buf.shots(); ++s) {
    const uint64_t* words = buf.shot(s);
    for (int b = 0; b < bytes_per_shot; ++b) {
      const int w = b / 8, off = (b % 8) * 8;
      out[s * bytes_per_shot + b] = static_cast<uint8_t>((words[w] >> off) & 0xff);
    }
  }
  return out;
}

OutcomeBuffer unpack_outcomes(const std::vector<uint8_t>& bytes, int n, long long shots) {
  const int bytes_per_shot = (n + 7) / 8;
  if (static_cast<long long>(bytes.size()) != shots * bytes_per_shot)
    throw std::invalid_argument("outcome byte count does not match shots");
  OutcomeBuffer buf(n, shots);
  std::vector<uint64_t> words(BitMatrix::words_per_row(n), 0);
  for (long long s = 0; s < shots; ++s) {
    std::fill(words.begin(), words.end(), 0);
    for (int b = 0; b < bytes_per_shot; ++b) {
      const int w = b / 8, off = (b % 8) * 8;
      words[w] |= static_cast<uint64_t>(bytes[s * bytes_per_shot + b]) << off;
    }
    buf.append(words.data());
  }
  return buf;
}

json record_to_json(const ExperimentRecord& rec, bool include_raw) {
  json settings = json::array();
  for (const auto& s : rec.settings) {
    json js;
    js["x_set"] = s.setting.x_set;
    js["hits"] = s.counts.hits;
    js["shots"] = s.counts.shots;
    js["mean"] = s.counts.mean;
    js["stderr"] = s.counts.std_err;
    js["truncated"] = s.truncated;
    js["stored_shots"] = s.outcomes.shots();
    if (include_raw) js["outcomes_base64"] = base64_encode(pack_outcomes(s.outcomes));
    settings.push_back(std::move(js));
  }
  return json{{"graph", graph_to_json(rec.graph)},
              {"coloring", coloring_to_json(rec.coloring)},
              {"shots", rec.shots},
              {"noise", rec.noise_p},
              {"seed", rec.seed},
              {"settings", std::move(settings)}};
}

ExperimentRecord record_from_json(const json& j) {
  ExperimentRecord rec;
  rec.graph = graph_from_json(j.at("graph"));
  rec.coloring = coloring_from_json(j.at("coloring"));
  rec.shots = j.at("shots").get<long long>();
  rec.noise_p = j.at("noise").get<double>();
  rec.seed = j.at("seed").get<uint64_t>();
  for (const auto& js : j.at("settings")) {
    SettingResult s;
    s.setting.x_set = js.at("x_set").get<std::vector<int>>();
    for (int v = 0; v < rec.graph.n(); ++v)
      if (std::find(s.setting.x_set.begin(), s.setting.x_set.end(), v) == s.setting.x_set.end())
        s.setting.z_set.push_back(v);
    s.counts.hits = js.at("hits").get<long long>();
    s.counts.shots = js.at("shots").get<long long>();
    s.counts.mean = js.at("mean").get<double>();
    s.counts.std_err = js.at("stderr").get<double>();
    s.truncated = js.at("truncated").get<bool>();
    if (js.contains("outcomes_base64")) {
      s.outcomes = unpack_outcomes(base64_decode(js["outcomes_base64"].get<std::string>()),
                                   rec.graph.n(), js.at("stored_shots").get<long long>());
    }
    rec.settings.push_back(std::move(s));
  }
  return rec;
}

std::string record_to_csv(const ExperimentRecord& rec) {
  std::ostringstream os;
  os << "setting,shot,outcome\n";
  for (size_t l = 0; l < rec.settings.size(); ++l) {
    const auto& buf = rec.settings[l].outcomes;
    for (long long s = 0; s < buf.shots(); ++s) {
      os << l << "," << s << ",";
      for (int q = 0; q < buf.n(); ++q) os << (buf.get(s, q) ? '1' : '0');
      os << "\n";
    }
  }
  return os.str();
}

namespace {

bool type_matches(const json& doc, const std::string& type) {
  if (type == "object") return doc.is_object();
  if (type == "array") return doc.is_array();
  if (type == "string") return doc.is_string();
  if (type == "integer") return doc.is_number_integer();
  if (type == "number") return doc.is_number();
  if (type == "boolean") return doc.is_boolean();
  if (type == "null") return doc.is_null();
  return false;
}

std::string validate_node(const json& doc, const json& schema, const std::string& path) {
  if (schema.contains("type")) {
    const auto& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(doc, t.get<std::string>());
    } else {
      for (const auto& alt : t) ok = ok || type_matches(doc, alt.get<std::string>());
    }
    if (!ok) return path + ": type mismatch";
  }
  if (schema.contains("required")) {
    for (const auto& key : schema["required"]) {
      if (!doc.is_object() || !doc.contains(key.get<std::string>()))
        return path + ": missing required key '" + key.get<std::string>() + "'";
    }
  }
  if (schema.contains("properties") && doc.is_object()) {
    for (const auto& [key, sub] : schema["properties"].items()) {
      if (doc.contains(key)) {
        const auto err = validate_node(doc[key], sub, path + "/" + key);
        if (!err.empty()) return err;
      }
    }
  }
  if (schema.contains("items") && doc.is_array()) {
    for (size_t i = 0; i < doc.size(); ++i) {
      const auto err = validate_node(doc[i], schema["items"], path + "/" + std::to_string(i));
      if (!err.empty()) return err;
    }
  }
  return "";
}

}  // namespace

std::string validate_against_schema(const json& doc, const json& schema) {
  return validate_node(doc, schema, "$");
}

}  // namespace entwit
