#pragma once

#include <vector>

#include "halg/rat.hpp"

namespace halg {

using Matrix = std::vector<std::vector<Rat>>;

// Row echelon rank by exact Gaussian elimination.
inline int matrix_rank(Matrix m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const Rat inv = Rat(1) / m[rank][col];
    for (int c = col; c < cols; ++c) m[rank][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rat f = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

inline bool matrix_invertible(const Matrix& m) {
  if (m.empty()) return true;
  return matrix_rank(m) == static_cast<int>(m.size());
}

// Solves A X = B for square invertible A; throws if A is singular.
inline Matrix matrix_solve(Matrix a, Matrix b) {
  const int n = static_cast<int>(a.size());
  const int w = n ? static_cast<int>(b[0].size()) : 0;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) throw std::domain_error("matrix_solve: singular matrix");
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    const Rat inv = Rat(1) / a[col][col];
    for (int c = 0; c < n; ++c) a[col][c] *= inv;
    for (int c = 0; c < w; ++c) b[col][c] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rat f = a[r][col];
      for (int c = 0; c < n; ++c) a[r][c] -= f * a[col][c];
      for (int c = 0; c < w; ++c) b[r][c] -= f * b[col][c];
    }
  }
  return b;
}

inline Matrix matrix_transpose(const Matrix& m) {
  if (m.empty()) return {};
  Matrix t(m[0].size(), std::vector<Rat>(m.size()));
  for (size_t r = 0; r < m.size(); ++r)
    for (size_t c = 0; c < m[0].size(); ++c) t[c][r] = m[r][c];
  return t;
}

}  // namespace halg
