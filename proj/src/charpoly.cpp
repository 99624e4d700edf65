#include "coperm/charpoly.hpp"

#include <array>
#include <cmath>
#include <utility>
#include <vector>

namespace coperm {

namespace {

bool bareiss_fits_fixed(const IntMatrix& m) {
  long double log2_hadamard = 0;
  for (int i = 0; i < m.dim(); ++i) {
    long double norm2 = 0;
    for (int j = 0; j < m.dim(); ++j) {
      const long double v = static_cast<long double>(m(i, j));
      norm2 += v * v;
    }
    if (norm2 == 0) return true;
    log2_hadamard += 0.5L * std::log2(norm2);
  }
  // Each step forms a difference of two products of minors.
  return 2 * log2_hadamard < 124.0L;
}

template <typename T>
T bareiss(const IntMatrix& m) {
  const int k = m.dim();
  if (k == 0) return T{1};
  std::vector<T> a(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a[i * k + j] = m(i, j);
  auto at = [&](int i, int j) -> T& { return a[i * k + j]; };

  T sign = 1;
  T prev = 1;
  for (int p = 0; p < k - 1; ++p) {
    if (at(p, p) == 0) {
      int swap_row = p + 1;
      while (swap_row < k && at(swap_row, p) == 0) ++swap_row;
      if (swap_row == k) return T{0};
      for (int j = 0; j < k; ++j) std::swap(at(p, j), at(swap_row, j));
      sign = -sign;
    }
    for (int i = p + 1; i < k; ++i) {
      for (int j = p + 1; j < k; ++j) {
        at(i, j) = (at(i, j) * at(p, p) - at(i, p) * at(p, j)) / prev;
      }
      at(i, p) = 0;
    }
    prev = at(p, p);
  }
  return sign * at(k - 1, k - 1);
}

}  // namespace

Int determinant_exact(const IntMatrix& m) {
  if (!bareiss_fits_fixed(m)) {
    throw Error(ErrorCode::Overflow, "determinant may exceed 128-bit elimination; use widened mode");
  }
  return bareiss<Int>(m);
}

BigInt determinant_exact_widened(const IntMatrix& m) { return bareiss<BigInt>(m); }

IntPoly char_poly(const Graph& g, ArithMode mode) {
  const int n = g.order();
  if (n > IntMatrix::kMaxDim) {
    throw Error(ErrorCode::TooLarge, "characteristic polynomial supports n <= 12");
  }
  if (mode == ArithMode::Widened) {
    std::vector<BigInt> values;
    for (int t = 0; t <= n; ++t) values.push_back(determinant_exact_widened(adjacency_char_matrix(g, t)));
    return interpolate_monic(std::span<const BigInt>(values));
  }
  std::vector<Int> values;
  for (int t = 0; t <= n; ++t) values.push_back(determinant_exact(adjacency_char_matrix(g, t)));
  return interpolate_monic(std::span<const Int>(values));
}

}  // namespace coperm
