#pragma once

#include <span>
#include <string>
#include <vector>

#include "coperm/error.hpp"
#include "coperm/integer.hpp"

namespace coperm {

// Integer polynomial sum_j coeffs[j] x^j. Graph polynomials are monic of
// degree n, so coeffs.size() == n + 1 and coeffs[n] == 1.
struct IntPoly {
  std::vector<Int> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Int coeff(int power) const {
    return power >= 0 && power < static_cast<int>(coeffs.size()) ? coeffs[power] : Int{0};
  }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;
};

IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator+(const IntPoly& a, const IntPoly& b);

// Human-readable form, e.g. "x^3 + 3x - 2".
std::string to_string(const IntPoly& p);

// Space-separated coefficient vector from the leading term down.
std::string coefficient_string(const IntPoly& p);

// Recovers the integer polynomial of degree <= values.size()-1 taking
// values[t] at t = 0, 1, 2, ... The forward differences are divided by k!
// to give falling-factorial coefficients, which expand to the monomial
// basis with Stirling numbers of the first kind. Everything stays in
// integers; a non-exact division throws Error(Internal).
template <typename T>
std::vector<T> newton_forward_interpolate(std::span<const T> values) {
  const std::size_t count = values.size();
  std::vector<T> diff(values.begin(), values.end());
  std::vector<T> falling(count);
  T factorial = 1;
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) factorial *= static_cast<long>(k);
    if (diff[0] % factorial != 0) {
      throw Error(ErrorCode::Internal, "forward difference not divisible by k!");
    }
    falling[k] = diff[0] / factorial;
    for (std::size_t i = 0; i + 1 < count - k; ++i) diff[i] = diff[i + 1] - diff[i];
  }

  std::vector<T> result(count, T{0});
  // basis holds x(x-1)...(x-k+1) in the monomial basis.
  std::vector<T> basis(count, T{0});
  basis[0] = 1;
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t j = 0; j <= k; ++j) result[j] += falling[k] * basis[j];
    if (k + 1 == count) break;
    for (std::size_t j = k + 1; j > 0; --j) {
      basis[j] = basis[j - 1] - static_cast<long>(k) * basis[j];
    }
    basis[0] = -static_cast<long>(k) * basis[0];
  }
  return result;
}

// Interpolates a graph polynomial of degree n from its values at
// t = 0..n and checks that the result is monic of degree n.
IntPoly interpolate_monic(std::span<const Int> values);
IntPoly interpolate_monic(std::span<const BigInt> values);

}  // namespace coperm
