#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entwit/graph.hpp"

namespace entwit {

// n-qubit Pauli operator i^phase * prod_j X_j^x Z_j^z, for n <= 64
// (the dense-oracle regime). Qubit j lives in bit j; a set bit in both
// masks is Y up to phase. Products track the phase exactly.
struct PauliString {
  uint64_t x = 0;
  uint64_t z = 0;
  int phase = 0;  // exponent of i, mod 4

  // (A.x,A.z)*(B.x,B.z): moving Z^Az past X^Bx costs (-1)^{|Az & Bx|}.
  PauliString operator*(const PauliString& o) const {
    PauliString r;
    r.x = x ^ o.x;
    r.z = z ^ o.z;
    r.phase = (phase + o.phase + 2 * __builtin_popcountll(z & o.x)) % 4;
    return r;
  }

  bool is_real() const { return phase % 2 == 0; }
  int sign() const { return phase == 0 ? 1 : -1; }  // valid when is_real()
  std::string to_string(int n) const;
};

// Stabilizer generator of vertex v: X_v with Z on every neighbour.
PauliString stabilizer(const Graph& g, int v);

// Product of the generators of `subset` (bitmask over vertices). Always a
// real +/-1 Pauli because the stabilizer group is abelian.
PauliString stabilizer_group_element(const Graph& g, uint64_t subset);

}  // namespace entwit
