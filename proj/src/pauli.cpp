#include "entwit/pauli.hpp"

#include <stdexcept>

namespace entwit {

std::string PauliString::to_string(int n) const {
  // Display convention uses the letter Y; each Y = i*XZ shifts the phase.
  const int shown = (phase + 3 * __builtin_popcountll(x & z)) % 4;
  std::string s;
  switch (shown) {
    case 0: s = "+"; break;
    case 1: s = "+i"; break;
    case 2: s = "-"; break;
    case 3: s = "-i"; break;
  }
  for (int j = 0; j < n; ++j) {
    const bool xb = (x >> j) & 1, zb = (z >> j) & 1;
    s += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
  }
  return s;
}

PauliString stabilizer(const Graph& g, int v) {
  if (g.n() > 64) throw std::invalid_argument("PauliString supports n <= 64");
  if (v < 0 || v >= g.n()) throw std::out_of_range("vertex out of range");
  PauliString p;
  p.x = uint64_t(1) << v;
  for (int u : g.neighbors(v)) p.z |= uint64_t(1) << u;
  return p;
}

PauliString stabilizer_group_element(const Graph& g, uint64_t subset) {
  PauliString p;  // identity
  for (int v = 0; v < g.n(); ++v)
    if ((subset >> v) & 1) p = p * stabilizer(g, v);
  if (!p.is_real()) throw std::logic_error("stabilizer product must be real");
  return p;
}

}  // namespace entwit
