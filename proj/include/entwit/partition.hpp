#pragma once

#include <functional>
#include <string>
#include <vector>

namespace entwit {

// Partition of vertices 0..n-1 into disjoint, covering blocks. Canonical
// form: block members ascending, blocks ordered by smallest member (so the
// block containing vertex 0 is block 0). Restricted-growth labels produce
// exactly this order.
struct Partition {
  std::vector<std::vector<int>> blocks;

  int m() const { return static_cast<int>(blocks.size()); }
  int n() const;
  std::vector<int> labels() const;  // vertex -> block index
  void canonicalize();
  bool operator==(const Partition& o) const { return blocks == o.blocks; }
};

// Text form: one label per vertex, comma-separated ("0,1,1,2,2,2").
// Labels are arbitrary tokens; blocks come out in canonical order.
Partition parse_partition(const std::string& text);
std::string partition_to_text(const Partition& p);

// Split of a partition's blocks into two sides. Canonical: a_blocks
// contains block 0, is ascending, and is never all blocks — a partition
// with m blocks has exactly 2^(m-1) - 1 distinct cuts.
struct BlockBipartition {
  std::vector<int> a_blocks;
  std::vector<int> a_vertices(const Partition& p) const;
};

// All cuts of an m-block partition in deterministic order (ascending
// bitmask over block indices, bit 0 always set, full mask excluded).
std::vector<BlockBipartition> block_bipartitions(int m);

// Stream every partition of 0..n-1 into exactly m blocks, in restricted-
// growth-string lexicographic order, one at a time. The visitor returns
// false to stop early. Enumeration is gated (default n <= 14) because the
// count grows as the Stirling numbers; raise the gate deliberately.
void for_each_m_partition(int n, int m, const std::function<bool(const Partition&)>& visit,
                          int enum_gate = 14);

// Convenience for small n: materialize the whole stream.
std::vector<Partition> all_m_partitions(int n, int m, int enum_gate = 14);

}  // namespace entwit
