#include "coperm/polynomial.hpp"

#include <algorithm>

namespace coperm {

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  IntPoly out;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return out;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly out;
  out.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

std::string to_string(const IntPoly& p) {
  std::string out;
  for (int j = p.degree(); j >= 0; --j) {
    Int c = p.coeffs[j];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    if (c != 1 || j == 0) out += to_string(c);
    if (j >= 1) out += "x";
    if (j >= 2) out += "^" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

std::string coefficient_string(const IntPoly& p) {
  std::string out;
  for (int j = p.degree(); j >= 0; --j) {
    if (!out.empty()) out += ' ';
    out += to_string(p.coeffs[j]);
  }
  return out;
}

namespace {

void check_monic(const IntPoly& p, std::size_t expected_size) {
  if (p.coeffs.size() != expected_size || p.coeffs.back() != 1) {
    throw Error(ErrorCode::Internal, "interpolated polynomial is not monic of the expected degree");
  }
}

}  // namespace

IntPoly interpolate_monic(std::span<const Int> values) {
  IntPoly p{newton_forward_interpolate<Int>(values)};
  check_monic(p, values.size());
  return p;
}

IntPoly interpolate_monic(std::span<const BigInt> values) {
  const std::vector<BigInt> wide = newton_forward_interpolate<BigInt>(values);
  IntPoly p;
  p.coeffs.reserve(wide.size());
  for (const BigInt& c : wide) p.coeffs.push_back(to_fixed(c));
  check_monic(p, values.size());
  return p;
}

}  // namespace coperm
