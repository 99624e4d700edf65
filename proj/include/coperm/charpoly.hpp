#pragma once

#include "coperm/graph.hpp"
#include "coperm/int_matrix.hpp"
#include "coperm/integer.hpp"
#include "coperm/polynomial.hpp"

namespace coperm {

// Fraction-free Gaussian elimination (Bareiss). Every intermediate is a
// minor of the input, so the Hadamard bound H controls growth; the fixed
// path requires H^2 to fit comfortably in 128 bits and throws Overflow
// otherwise.
Int determinant_exact(const IntMatrix& m);
BigInt determinant_exact_widened(const IntMatrix& m);

// det(xI - A(G)) by evaluation at t = 0..n and the same interpolation as
// perm_poly.
IntPoly char_poly(const Graph& g, ArithMode mode = ArithMode::Fixed128);

}  // namespace coperm
