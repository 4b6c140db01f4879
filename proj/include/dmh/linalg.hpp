#pragma once

// Dense Gaussian elimination over an exact field.

#include "dmh/error.hpp"
#include "dmh/poly.hpp"

#include <cstddef>
#include <vector>

namespace dmh {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Solves A x = b. Throws SingularSystem when A is not invertible.
template <class T>
std::vector<T> solve_linear(Matrix<T> a, std::vector<T> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error(ErrorCode::LengthMismatch, "right-hand side has the wrong length");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && detail::coeff_is_zero(a[piv][col])) ++piv;
    if (piv == n) throw Error(ErrorCode::SingularSystem, "no pivot in column " + std::to_string(col));
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    const T inv = T(1) / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] = a[col][j] * inv;
    b[col] = b[col] * inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || detail::coeff_is_zero(a[row][col])) continue;
      const T f = a[row][col];
      for (std::size_t j = col; j < n; ++j)
        if (!detail::coeff_is_zero(a[col][j])) a[row][j] = a[row][j] - f * a[col][j];
      b[row] = b[row] - f * b[col];
    }
  }
  return b;
}

}  // namespace dmh
