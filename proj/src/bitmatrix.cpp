#include "entwit/bitmatrix.hpp"

#include <bit>

namespace entwit {

int rank_gf2(BitMatrix m) {
  const int rows = m.rows();
  const int cols = m.cols();
  const int words = m.words();
  if (rows == 0 || cols == 0) return 0;

  // Mask tail bits past the last column once up front.
  const int tail = cols % 64;
  if (tail) {
    const uint64_t mask = (uint64_t(1) << tail) - 1;
    for (int r = 0; r < rows; ++r) m.row(r)[words - 1] &= mask;
  }

  int rank = 0;
  for (int r = 0; r < rows && rank < cols; ++r) {
    // Pivot on the first set bit of this row, eliminating as we go.
    int pw = -1, pb = -1;
    for (int w = 0; w < words; ++w) {
      if (uint64_t v = m.row(r)[w]) {
        pw = w;
        pb = std::countr_zero(v);
        break;
      }
    }
    if (pw < 0) continue;  // zero row
    ++rank;
    const uint64_t pmask = uint64_t(1) << pb;
    for (int s = r + 1; s < rows; ++s) {
      if (m.row(s)[pw] & pmask) m.xor_row(s, r);
    }
  }
  return rank;
}

}  // namespace entwit
