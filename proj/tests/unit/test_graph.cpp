#include <doctest.h>

#include <random>

#include "coperm/error.hpp"
#include "coperm/graph.hpp"
#include "oracles.hpp"

using namespace coperm;

namespace {

Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("graph6 decoding of small words") {
  // Expected graphs come from the reference decoder.
  for (const char* word : {"@", "A_", "Bg", "?"}) {
    const auto ref = oracle::decode_graph6(word);
    const Graph g = parse_graph6(word);
    CHECK(g.order() == ref.n);
    Graph expected(ref.n);
    for (auto [u, v] : ref.edges) expected.add_edge(u, v);
    CHECK(g == expected);
  }
  CHECK(parse_graph6("@") == Graph(1));
  CHECK(parse_graph6("A_") == Graph::complete(2));
  CHECK(parse_graph6("Bg") == from_edges(3, {{0, 1}, {1, 2}}));
  CHECK(parse_graph6("?") == Graph(0));
}

TEST_CASE("graph6 encoding") {
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(Graph::complete(2)) == "A_");
  CHECK(to_graph6(Graph::path(3)) == "Bg");
  CHECK(to_graph6(Graph(0)) == "?");
  // K_4: six set bits fill exactly one body byte.
  CHECK(to_graph6(Graph::complete(4)) == "C~");
}

TEST_CASE("graph6 errors") {
  CHECK(code_of([] { parse_graph6("A "); }) == ErrorCode::InvalidChar);
  CHECK(code_of([] { parse_graph6("A\x7f"); }) == ErrorCode::InvalidChar);
  CHECK(code_of([] { parse_graph6("C"); }) == ErrorCode::TruncatedBody);
  CHECK(code_of([] { parse_graph6(""); }) == ErrorCode::TruncatedBody);
  CHECK(code_of([] { parse_graph6("A_?"); }) == ErrorCode::TrailingGarbage);
  CHECK(code_of([] { parse_graph6(">>graph6<<A_"); }) == ErrorCode::TrailingGarbage);
  // Padding bits of K_2's body byte must be zero.
  CHECK(code_of([] { parse_graph6("A`"); }) == ErrorCode::TrailingGarbage);
  // n = 33 is beyond the single-word row representation.
  CHECK(code_of([] { parse_graph6(std::string(1, char(33 + 63)) + std::string(88, '?')); }) ==
        ErrorCode::TooLarge);
}

TEST_CASE("graph6 round trip on random graphs up to 32 vertices") {
  std::mt19937_64 rng(20261017);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng() % 33);
    const Graph g = oracle::random_graph(rng, n, 0.3 + 0.4 * (trial % 3) / 2.0);
    const std::string word = to_graph6(g);
    CHECK(parse_graph6(word) == g);
    const auto ref = oracle::decode_graph6(word);
    CHECK(static_cast<int>(ref.edges.size()) == edge_count(g));
  }
}

TEST_CASE("edge counts") {
  CHECK(edge_count(Graph(0)) == 0);
  CHECK(edge_count(Graph(7)) == 0);
  CHECK(edge_count(Graph::complete(4)) == 6);
  CHECK(edge_count(Graph::path(3)) == 2);
  CHECK(edge_count(Graph::complete(11)) == max_edges(11));
}

TEST_CASE("characteristic matrix") {
  const IntMatrix k2_0 = adjacency_char_matrix(Graph::complete(2), 0);
  CHECK(k2_0 == IntMatrix{{0, -1}, {-1, 0}});
  CHECK(adjacency_char_matrix(Graph::complete(2), 3) == IntMatrix{{3, -1}, {-1, 3}});
  IntMatrix five(2);
  five(0, 0) = five(1, 1) = 5;
  CHECK(adjacency_char_matrix(Graph(2), 5) == five);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 12));
    const std::int64_t t = static_cast<std::int64_t>(rng() % 25) - 12;
    const IntMatrix m = adjacency_char_matrix(g, t);
    for (int i = 0; i < g.order(); ++i) {
      CHECK(m(i, i) == t);
      for (int j = 0; j < g.order(); ++j) CHECK(m(i, j) == m(j, i));
    }
  }
}

TEST_CASE("permute") {
  const Graph p3 = Graph::path(3);
  const std::vector<int> identity{0, 1, 2};
  CHECK(permute(p3, identity) == p3);
  const std::vector<int> swap_leaves{2, 1, 0};
  CHECK(permute(p3, swap_leaves) == p3);
  std::vector<int> sigma{0, 1, 2};
  do {
    CHECK(permute(Graph::complete(3), sigma) == Graph::complete(3));
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  const Graph g = from_edges(4, {{0, 1}, {1, 2}});
  const std::vector<int> s{3, 0, 2, 1};
  const Graph h = permute(g, s);
  CHECK(h.adjacent(3, 0));
  CHECK(h.adjacent(0, 2));
  CHECK(edge_count(h) == 2);

  const std::vector<int> not_bijective{0, 0, 1};
  CHECK(code_of([&] { permute(p3, not_bijective); }) == ErrorCode::BadPermutation);
  const std::vector<int> too_short{0, 1};
  CHECK(code_of([&] { permute(p3, too_short); }) == ErrorCode::BadPermutation);
  const std::vector<int> out_of_range{0, 1, 3};
  CHECK(code_of([&] { permute(p3, out_of_range); }) == ErrorCode::BadPermutation);
}

TEST_CASE("vertex insertion and deletion") {
  const Graph p3 = Graph::path(3);
  const Graph star = p3.with_vertex(0b010);
  CHECK(star.order() == 4);
  CHECK(star.degree(1) == 3);
  CHECK(star.without_vertex(3) == p3);
  // Deleting the middle of P_3 leaves two isolated vertices.
  CHECK(p3.without_vertex(1) == Graph(2));
  CHECK(Graph::complete(3).disjoint_union(Graph::complete(2)).order() == 5);
  CHECK(edge_count(Graph::complete(3).disjoint_union(Graph::complete(2))) == 4);
  CHECK(Graph::complete(5).complement() == Graph(5));
}
