#include "entwit/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace entwit {

int Partition::n() const {
  int total = 0;
  for (const auto& b : blocks) total += static_cast<int>(b.size());
  return total;
}

std::vector<int> Partition::labels() const {
  std::vector<int> lab(n(), -1);
  for (int i = 0; i < m(); ++i) {
    for (int v : blocks[i]) {
      if (v < 0 || v >= static_cast<int>(lab.size()) || lab[v] != -1)
        throw std::invalid_argument("partition blocks must be disjoint and cover 0..n-1");
      lab[v] = i;
    }
  }
  return lab;
}

void Partition::canonicalize() {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::erase_if(blocks, [](const auto& b) { return b.empty(); });
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  labels();  // validates disjoint cover
}

Partition parse_partition(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      tokens.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  tokens.push_back(cur);
  std::map<std::string, std::vector<int>> groups;
  for (int v = 0; v < static_cast<int>(tokens.size()); ++v) {
    if (tokens[v].empty()) throw std::invalid_argument("empty partition label at vertex " + std::to_string(v));
    groups[tokens[v]].push_back(v);
  }
  Partition p;
  for (auto& [label, verts] : groups) p.blocks.push_back(std::move(verts));
  p.canonicalize();
  return p;
}

std::string partition_to_text(const Partition& p) {
  auto lab = p.labels();
  std::ostringstream os;
  for (size_t v = 0; v < lab.size(); ++v) {
    if (v) os << ",";
    os << lab[v];
  }
  return os.str();
}

std::vector<int> BlockBipartition::a_vertices(const Partition& p) const {
  std::vector<int> out;
  for (int b : a_blocks) {
    if (b < 0 || b >= p.m()) throw std::out_of_range("block index out of range");
    out.insert(out.end(), p.blocks[b].begin(), p.blocks[b].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BlockBipartition> block_bipartitions(int m) {
  std::vector<BlockBipartition> out;
  if (m < 2) return out;
  if (m > 30) throw std::invalid_argument("too many blocks to enumerate cuts");
  const uint32_t full = (uint32_t(1) << m) - 1;
  for (uint32_t mask = 1; mask < full; mask += 2) {  // bit 0 set, never all
    BlockBipartition cut;
    for (int b = 0; b < m; ++b)
      if (mask >> b & 1) cut.a_blocks.push_back(b);
    out.push_back(std::move(cut));
  }
  return out;
}

namespace {

// Depth-first walk of restricted growth strings with exactly m classes.
// rgs[i] <= 1 + max(rgs[0..i-1]) keeps blocks in canonical order for free.
bool rgs_walk(int n, int m, int pos, int used, std::vector<int>& rgs, Partition& scratch,
              const std::function<bool(const Partition&)>& visit) {
  if (pos == n) {
    scratch.blocks.assign(m, {});
    for (int v = 0; v < n; ++v) scratch.blocks[rgs[v]].push_back(v);
    return visit(scratch);
  }
  const int remaining = n - pos;
  const int hi = std::min(used, m - 1);
  // Must still be able to open the m - used missing classes.
  const int lo_forced = (m - used == remaining) ? used : 0;
  for (int c = lo_forced; c <= hi; ++c) {
    rgs[pos] = c;
    if (!rgs_walk(n, m, pos + 1, std::max(used, c + 1), rgs, scratch, visit)) return false;
  }
  return true;
}

}  // namespace

void for_each_m_partition(int n, int m, const std::function<bool(const Partition&)>& visit,
                          int enum_gate) {
  if (m < 1 || m > n) throw std::invalid_argument("need 1 <= m <= n");
  if (n > enum_gate)
    throw std::invalid_argument("partition enumeration gated at n <= " + std::to_string(enum_gate) +
                                "; raise the gate explicitly for larger n");
  std::vector<int> rgs(n, 0);
  Partition scratch;
  rgs_walk(n, m, 1, 1, rgs, scratch, visit);  // rgs[0] = 0 always
}

std::vector<Partition> all_m_partitions(int n, int m, int enum_gate) {
  std::vector<Partition> out;
  for_each_m_partition(n, m, [&](const Partition& p) {
    out.push_back(p);
    return true;
  }, enum_gate);
  return out;
}

}  // namespace entwit
