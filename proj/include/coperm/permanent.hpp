#pragma once

#include "coperm/graph.hpp"
#include "coperm/int_matrix.hpp"
#include "coperm/integer.hpp"
#include "coperm/polynomial.hpp"

namespace coperm {

// Sum over all k! permutations of the products m[i][sigma(i)]. Oracle
// path; k <= 9, TooLarge otherwise.
BigInt permanent_naive(const IntMatrix& m);

// Ryser's inclusion-exclusion formula, nonempty column subsets visited in
// Gray-code order with incrementally maintained row sums:
//   per(M) = (-1)^k sum_S (-1)^|S| prod_i sum_{j in S} m_ij.
// Throws Overflow when the a-priori bound 2^k * prod_i sum_j |m_ij| does
// not fit in 125 bits.
Int permanent_ryser(const IntMatrix& m);

// Same algorithm in arbitrary precision.
BigInt permanent_ryser_widened(const IntMatrix& m);

// per(xI - A(G)), from per(tI - A) at t = 0..n and exact interpolation.
IntPoly perm_poly(const Graph& g, ArithMode mode = ArithMode::Fixed128);

// Oracle: expands per(xI - A) over all n! permutations with polynomial
// arithmetic. n <= 7.
IntPoly perm_poly_symbolic(const Graph& g);

}  // namespace coperm
