#pragma once

#include <cstdint>
#include <vector>

namespace closedbetti::linalg {

/// Dense GF(2) matrix, row-major, each row padded to `words` 64-bit blocks.
struct BitMatrix {
  int rows = 0;
  int words = 0;
  std::vector<std::uint64_t> data;

  void reset(int row_count, int col_count);
  std::uint64_t* row(int r) { return data.data() + static_cast<std::size_t>(r) * words; }
  void set(int r, int c) { row(r)[c >> 6] |= std::uint64_t{1} << (c & 63); }
};

/// Rank over GF(2); the matrix is overwritten.
int rank_gf2(BitMatrix& matrix);

/// Sparse signed row: (column, coefficient) pairs with distinct columns.
struct SignedEntry {
  int col;
  int coeff;
};
using SignedRow = std::vector<SignedEntry>;

/// Rank over GF(p) for an odd or even prime p.
int rank_mod_p(const std::vector<SignedRow>& rows, int cols, int p);

/// Exact rank over the rationals.
int rank_rational(const std::vector<SignedRow>& rows, int cols);

bool is_prime(int p);

}  // namespace closedbetti::linalg
