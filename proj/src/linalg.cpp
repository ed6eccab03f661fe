#include "closedbetti/linalg.hpp"

#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <utility>

namespace closedbetti::linalg {

void BitMatrix::reset(int row_count, int col_count) {
  rows = row_count;
  words = (col_count + 63) / 64;
  data.assign(static_cast<std::size_t>(rows) * words, 0);
}

int rank_gf2(BitMatrix& matrix) {
  const int words = matrix.words;
  if (matrix.rows == 0 || words == 0) return 0;
  // pivot[c] is the row whose lowest set bit is c after reduction.
  std::vector<int> pivot(static_cast<std::size_t>(words) * 64, -1);
  int rank = 0;
  for (int r = 0; r < matrix.rows; ++r) {
    std::uint64_t* row = matrix.row(r);
    int w = 0;
    while (true) {
      while (w < words && row[w] == 0) ++w;
      if (w == words) break;
      const int lead = w * 64 + std::countr_zero(row[w]);
      if (pivot[lead] < 0) {
        pivot[lead] = r;
        ++rank;
        break;
      }
      const std::uint64_t* basis = matrix.row(pivot[lead]);
      for (int k = w; k < words; ++k) row[k] ^= basis[k];
    }
  }
  return rank;
}

namespace {

int mod(long long v, int p) {
  const long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int inverse_mod(int a, int p) {
  long long result = 1;
  long long base = a;
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<int>(result);
}

}  // namespace

int rank_mod_p(const std::vector<SignedRow>& rows, int cols, int p) {
  std::vector<std::vector<int>> dense(rows.size(), std::vector<int>(cols, 0));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) dense[r][c] = mod(v, p);

  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(dense.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(dense.size()); ++r) {
      if (dense[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(dense[rank], dense[pivot]);
    const int inv = inverse_mod(dense[rank][c], p);
    for (int k = c; k < cols; ++k) dense[rank][k] = static_cast<int>(1LL * dense[rank][k] * inv % p);
    for (int r = rank + 1; r < static_cast<int>(dense.size()); ++r) {
      const int f = dense[r][c];
      if (f == 0) continue;
      for (int k = c; k < cols; ++k) dense[r][k] = mod(dense[r][k] - 1LL * f * dense[rank][k], p);
    }
    ++rank;
  }
  return rank;
}

int rank_rational(const std::vector<SignedRow>& rows, int cols) {
  using boost::multiprecision::cpp_rational;
  std::vector<std::vector<cpp_rational>> dense(rows.size(), std::vector<cpp_rational>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) dense[r][c] = v;

  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(dense.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(dense.size()); ++r) {
      if (dense[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(dense[rank], dense[pivot]);
    for (int r = rank + 1; r < static_cast<int>(dense.size()); ++r) {
      if (dense[r][c] == 0) continue;
      const cpp_rational f = dense[r][c] / dense[rank][c];
      for (int k = c; k < cols; ++k) dense[r][k] -= f * dense[rank][k];
    }
    ++rank;
  }
  return rank;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace closedbetti::linalg
