#include <doctest.h>

#include <map>
#include <numeric>
#include <random>

#include "coperm/charpoly.hpp"
#include "coperm/enumerate.hpp"
#include "coperm/error.hpp"
#include "oracles.hpp"

using namespace coperm;

namespace {

IntPoly poly(std::initializer_list<long> high_to_low) {
  IntPoly p;
  for (long c : high_to_low) p.coeffs.insert(p.coeffs.begin(), Int{c});
  return p;
}

}  // namespace

TEST_CASE("exact determinants") {
  CHECK(determinant_exact(IntMatrix::identity(3)) == 1);
  CHECK(determinant_exact({{3, -1}, {-1, 3}}) == 8);
  CHECK(determinant_exact({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}) == 2);
  CHECK(determinant_exact(IntMatrix(0)) == 1);
  CHECK(determinant_exact(IntMatrix(3)) == 0);
  // Needs a row swap at the first pivot.
  CHECK(determinant_exact({{0, 2}, {3, 1}}) == -6);
  CHECK(determinant_exact({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}) == 0);
}

TEST_CASE("Bareiss matches the Leibniz sum on random matrices") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = static_cast<int>(rng() % 8);
    IntMatrix m(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m(i, j) = entry(rng);
    std::vector<int> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    BigInt expected = 0;
    do {
      int inversions = 0;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) inversions += sigma[i] > sigma[j];
      BigInt term = inversions % 2 == 0 ? 1 : -1;
      for (int i = 0; i < k; ++i) term *= m(i, sigma[i]);
      expected += term;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    CHECK(to_big(determinant_exact(m)) == expected);
    CHECK(determinant_exact_widened(m) == expected);
  }
}

TEST_CASE("determinant overflow") {
  const std::int64_t big = std::int64_t{1} << 62;
  const IntMatrix m{{big, 1}, {1, big}};
  CHECK_THROWS_AS(determinant_exact(m), Error);
  const BigInt b = big;
  CHECK(determinant_exact_widened(m) == b * b - 1);
}

TEST_CASE("characteristic polynomials of small graphs") {
  CHECK(char_poly(Graph::complete(2)) == poly({1, 0, -1}));
  CHECK(char_poly(Graph::path(3)) == poly({1, 0, -2, 0}));
  CHECK(char_poly(Graph::complete(3)) == poly({1, 0, -3, -2}));
  CHECK(char_poly(Graph::path(3)) == oracle::char_poly_leibniz(Graph::path(3)));
  CHECK(char_poly(Graph::complete(3)) == oracle::char_poly_leibniz(Graph::complete(3)));
  CHECK(char_poly(Graph(0)) == poly({1}));
  CHECK(char_poly(Graph::complete(12), ArithMode::Widened) == char_poly(Graph::complete(12)));
}

TEST_CASE("char_poly matches the Leibniz oracle on all graphs with n <= 6") {
  for (int n = 0; n <= 6; ++n) {
    enumerate_graphs(n).for_each([](const Graph& g) { CHECK(char_poly(g) == oracle::char_poly_leibniz(g)); });
  }
}

TEST_CASE("coefficient invariants on all graphs with n <= 8") {
  for (int n = 2; n <= 8; ++n) {
    enumerate_graphs(n).for_each([&](const Graph& g) {
      const IntPoly p = char_poly(g);
      CHECK(p.coeffs[n] == 1);
      CHECK(p.coeffs[n - 1] == 0);
      CHECK(p.coeffs[n - 2] == -edge_count(g));
    });
  }
}

TEST_CASE("relabeling invariance") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(rng, static_cast<int>(rng() % 13));
    CHECK(char_poly(permute(g, oracle::random_permutation(rng, g.order()))) == char_poly(g));
  }
}

TEST_CASE("cospectral graphs on five vertices") {
  std::map<std::vector<Int>, int> classes;
  enumerate_graphs(5).for_each([&](const Graph& g) { ++classes[char_poly(g).coeffs]; });
  int with_mate = 0;
  for (const auto& [coeffs, size] : classes)
    if (size >= 2) with_mate += size;
  CHECK(classes.size() == 33);
  CHECK(with_mate == 2);
}
