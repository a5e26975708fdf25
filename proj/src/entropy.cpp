#include "entwit/entropy.hpp"

#include <algorithm>
#include <stdexcept>

namespace entwit {

int cut_entropy(const Graph& g, const std::vector<int>& a) {
  return rank_gf2(cross_submatrix(g, a));
}

namespace {

bool is_chain_shape(const Graph& g) {
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.has_edge(u, v) != (v == u + 1)) return false;
  return true;
}

}  // namespace

int boundary_count(const Graph& g, const std::vector<int>& a) {
  if (!is_chain_shape(g)) throw std::invalid_argument("boundary_count expects a chain");
  std::vector<char> in_a(g.n(), 0);
  for (int v : a) in_a[v] = 1;
  int count = 0;
  for (int i = 0; i + 1 < g.n(); ++i)
    if (in_a[i] != in_a[i + 1]) ++count;
  return count;
}

BoundReport c_min_c_max(const Graph& g, const Partition& p) {
  if (p.n() != g.n()) throw std::invalid_argument("partition size does not match graph");
  auto cuts = block_bipartitions(p.m());
  if (cuts.empty()) throw std::invalid_argument("need at least 2 blocks to form cuts");

  BoundReport rep;
  rep.cut_entropies.reserve(cuts.size());
  int s_min = -1, s_max = -1;  // entropy extremes; c_min tracks s_max
  for (const auto& cut : cuts) {
    const int s = cut_entropy(g, cut.a_vertices(p));
    rep.cut_entropies.push_back(s);
    // Largest entropy gives the smallest 2^-S.
    if (s > s_max) {
      s_max = s;
      rep.c_min = ExtremeBound{pow2(-s), s, cut, 1, {}};
    } else if (s == s_max) {
      ++rep.c_min.achiever_count;
      if (static_cast<int>(rep.c_min.co_achievers.size()) < kCoAchieverCap)
        rep.c_min.co_achievers.push_back(cut);
    }
    if (s_min < 0 || s < s_min) {
      s_min = s;
      rep.c_max = ExtremeBound{pow2(-s), s, cut, 1, {}};
    } else if (s == s_min) {
      ++rep.c_max.achiever_count;
      if (static_cast<int>(rep.c_max.co_achievers.size()) < kCoAchieverCap)
        rep.c_max.co_achievers.push_back(cut);
    }
  }
  return rep;
}

CmBound c_m_exhaustive(const Graph& g, int m, int enum_gate) {
  if (m < 2 || m > g.n()) throw std::invalid_argument("need 2 <= m <= n");
  CmBound best;
  best.method = "exhaustive";
  int best_maxent = -1;  // smallest max-cut entropy seen; C_m = 2^-best
  for_each_m_partition(g.n(), m, [&](const Partition& p) {
    const auto cuts = block_bipartitions(m);
    int maxent = -1;
    for (const auto& cut : cuts) {
      const int s = cut_entropy(g, cut.a_vertices(p));
      maxent = std::max(maxent, s);
      // This partition can no longer beat the incumbent: prune.
      if (best_maxent >= 0 && maxent >= best_maxent) break;
    }
    if (best_maxent < 0 || maxent < best_maxent) {
      best_maxent = maxent;
      best.achiever = p;
      if (best_maxent == 0) return false;  // cannot improve on 2^0
    }
    return true;
  }, enum_gate);
  best.entropy = best_maxent;
  best.value = pow2(-best_maxent);
  best.tight = true;
  return best;
}

int lattice_gamma(int m) {
  if (m < 2) throw std::invalid_argument("need m >= 2");
  int d = 0;
  while (d * (d + 1) / 2 < m - 1) ++d;
  return d;
}

Partition chain_optimal_partition(int n, int m) {
  if (m < 2 || m > n) throw std::invalid_argument("need 2 <= m <= n");
  Partition p;
  for (int i = 0; i < m - 1; ++i) p.blocks.push_back({i});
  std::vector<int> tail;
  for (int v = m - 1; v < n; ++v) tail.push_back(v);
  p.blocks.push_back(std::move(tail));
  return p;
}

Partition lattice_corner_partition(int rows, int cols, int m) {
  if (m < 2 || m > rows * cols) throw std::invalid_argument("need 2 <= m <= n");
  // Corner cells in antidiagonal order: (0,0), (0,1), (1,0), (0,2), ...
  std::vector<int> corner;
  for (int diag = 0; diag < rows + cols - 1 && static_cast<int>(corner.size()) < m - 1; ++diag) {
    for (int r = 0; r <= diag && static_cast<int>(corner.size()) < m - 1; ++r) {
      const int c = diag - r;
      if (r < rows && c < cols) corner.push_back(r * cols + c);
    }
  }
  Partition p;
  std::vector<char> used(rows * cols, 0);
  for (int v : corner) {
    p.blocks.push_back({v});
    used[v] = 1;
  }
  std::vector<int> rest;
  for (int v = 0; v < rows * cols; ++v)
    if (!used[v]) rest.push_back(v);
  p.blocks.push_back(std::move(rest));
  p.canonicalize();
  return p;
}

bool has_analytic_c_m(const Graph& g, int m) {
  if (m < 2 || m > g.n()) return false;
  switch (g.family()) {
    case Family::chain:
      return true;
    case Family::star:
      return true;
    case Family::lattice:
      return g.lattice_rows() >= 2 && g.lattice_cols() >= 2 &&
             static_cast<long long>(g.n()) >= static_cast<long long>(m) * (m - 1) / 2;
    default:
      return false;
  }
}

CmBound c_m_analytic(const Graph& g, int m) {
  if (!has_analytic_c_m(g, m))
    throw std::invalid_argument("no closed-form m-separability constant for this graph/m");
  CmBound out;
  switch (g.family()) {
    case Family::chain: {
      out.entropy = m / 2;
      out.value = pow2(-out.entropy);
      out.achiever = chain_optimal_partition(g.n(), m);
      out.tight = true;
      out.method = "chain";
      break;
    }
    case Family::star: {
      // Every nontrivial cut of a star has entropy exactly 1.
      out.entropy = 1;
      out.value = pow2(-1);
      out.achiever = chain_optimal_partition(g.n(), m);  // any partition attains it
      out.tight = true;
      out.method = "star";
      break;
    }
    case Family::lattice: {
      out.entropy = lattice_gamma(m);
      out.value = pow2(-out.entropy);
      out.achiever = lattice_corner_partition(g.lattice_rows(), g.lattice_cols(), m);
      out.tight = m <= 5;  // corner construction saturates the bound up to m = 5
      out.method = "lattice";
      break;
    }
    default:
      throw std::logic_error("unreachable");
  }
  return out;
}

}  // namespace entwit
