#pragma once

#include <cstdint>
#include <vector>

namespace entwit {

// Dense bit matrix over GF(2), rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), words_(words_per_row(cols)),
        data_(static_cast<size_t>(rows) * words_per_row(cols), 0) {}

  static int words_per_row(int cols) { return (cols + 63) / 64; }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int words() const { return words_; }

  bool get(int r, int c) const {
    return (data_[static_cast<size_t>(r) * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(int r, int c, bool v) {
    uint64_t& w = data_[static_cast<size_t>(r) * words_ + c / 64];
    uint64_t m = uint64_t(1) << (c % 64);
    w = v ? (w | m) : (w & ~m);
  }
  void flip(int r, int c) {
    data_[static_cast<size_t>(r) * words_ + c / 64] ^= uint64_t(1) << (c % 64);
  }

  uint64_t* row(int r) { return data_.data() + static_cast<size_t>(r) * words_; }
  const uint64_t* row(int r) const { return data_.data() + static_cast<size_t>(r) * words_; }

  void xor_row(int dst, int src) {
    uint64_t* d = row(dst);
    const uint64_t* s = row(src);
    for (int w = 0; w < words_; ++w) d[w] ^= s[w];
  }

  bool row_is_zero(int r) const {
    const uint64_t* p = row(r);
    for (int w = 0; w < words_; ++w)
      if (p[w]) return false;
    return true;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  int words_ = 0;
  std::vector<uint64_t> data_;
};

// Rank over GF(2) by row elimination. Works on a copy; bits beyond `cols`
// are masked off so stale word tails cannot fake pivots.
int rank_gf2(BitMatrix m);

}  // namespace entwit
