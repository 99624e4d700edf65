#include "coperm/permanent.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <vector>

namespace coperm {

namespace {

// Whether every partial sum in Ryser's formula provably fits in Int.
bool ryser_fits_fixed(const IntMatrix& m) {
  const int k = m.dim();
  long double log2_bound = k;
  for (int i = 0; i < k; ++i) {
    long double row = 0;
    for (int j = 0; j < k; ++j) row += std::fabs(static_cast<long double>(m(i, j)));
    if (row == 0) return true;  // a zero row forces every product to zero
    log2_bound += std::log2(row);
  }
  return log2_bound < 125.0L;
}

template <typename T>
T ryser(const IntMatrix& m) {
  const int k = m.dim();
  if (k == 0) return T{1};
  std::array<T, IntMatrix::kMaxDim> row_sums{};
  T total = 0;
  const std::uint32_t subsets = std::uint32_t{1} << k;
  std::uint32_t gray = 0;
  for (std::uint32_t s = 1; s < subsets; ++s) {
    const int j = std::countr_zero(s);
    gray ^= std::uint32_t{1} << j;
    if ((gray >> j) & 1u) {
      for (int i = 0; i < k; ++i) row_sums[i] += m(i, j);
    } else {
      for (int i = 0; i < k; ++i) row_sums[i] -= m(i, j);
    }
    T prod = row_sums[0];
    for (int i = 1; i < k && prod != 0; ++i) prod *= row_sums[i];
    if (std::popcount(gray) % 2 == 0) {
      total += prod;
    } else {
      total -= prod;
    }
  }
  return k % 2 == 0 ? total : T(-total);
}

}  // namespace

BigInt permanent_naive(const IntMatrix& m) {
  const int k = m.dim();
  if (k > 9) throw Error(ErrorCode::TooLarge, "naive permanent supports k <= 9");
  std::vector<int> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 0);
  BigInt total = 0;
  do {
    BigInt prod = 1;
    for (int i = 0; i < k && prod != 0; ++i) prod *= m(i, sigma[i]);
    total += prod;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

Int permanent_ryser(const IntMatrix& m) {
  if (!ryser_fits_fixed(m)) {
    throw Error(ErrorCode::Overflow, "permanent may exceed 128-bit accumulation; use widened mode");
  }
  return ryser<Int>(m);
}

BigInt permanent_ryser_widened(const IntMatrix& m) { return ryser<BigInt>(m); }

IntPoly perm_poly(const Graph& g, ArithMode mode) {
  const int n = g.order();
  if (n > IntMatrix::kMaxDim) {
    throw Error(ErrorCode::TooLarge, "permanental polynomial supports n <= 12");
  }
  if (mode == ArithMode::Widened) {
    std::vector<BigInt> values;
    for (int t = 0; t <= n; ++t) values.push_back(permanent_ryser_widened(adjacency_char_matrix(g, t)));
    return interpolate_monic(std::span<const BigInt>(values));
  }
  std::vector<Int> values;
  for (int t = 0; t <= n; ++t) values.push_back(permanent_ryser(adjacency_char_matrix(g, t)));
  return interpolate_monic(std::span<const Int>(values));
}

IntPoly perm_poly_symbolic(const Graph& g) {
  const int n = g.order();
  if (n > 7) throw Error(ErrorCode::TooLarge, "symbolic permanental polynomial supports n <= 7");
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  IntPoly total{{0}};
  do {
    IntPoly term{{1}};
    for (int i = 0; i < n; ++i) {
      // Entry (i, sigma(i)) of xI - A.
      const IntPoly entry = sigma[i] == i ? IntPoly{{0, 1}}
                                          : IntPoly{{g.adjacent(i, sigma[i]) ? Int{-1} : Int{0}}};
      term = term * entry;
    }
    total = total + term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  total.coeffs.resize(n + 1);
  return total;
}

}  // namespace coperm
