#include <doctest.h>

#include <random>
#include <map>
#include <set>

#include "coperm/canonical.hpp"
#include "coperm/error.hpp"
#include "oracles.hpp"

using namespace coperm;

TEST_CASE("canonical form is idempotent") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(rng, static_cast<int>(rng() % 11));
    const Graph c = canonical_form(g);
    CHECK(canonical_form(c) == c);
  }
}

TEST_CASE("P_3 relabelings collapse to one form") {
  std::vector<int> sigma{0, 1, 2};
  std::set<std::string> forms;
  do {
    forms.insert(to_graph6(canonical_form(permute(Graph::path(3), sigma))));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  CHECK(forms.size() == 1);
}

TEST_CASE("canonical form separates exactly the isomorphism classes, n <= 6") {
  // Every labeled graph; for n <= 5 the brute-force minimum word over all
  // relabelings is the oracle for "same class".
  const std::size_t classes[] = {1, 1, 2, 4, 11, 34, 156};
  for (int n = 0; n <= 6; ++n) {
    std::map<std::string, std::string> canon_to_brute;
    std::set<std::string> brute_keys;
    for (const Graph& g : oracle::all_labeled_graphs(n)) {
      const std::string canon = to_graph6(canonical_form(g));
      if (n > 5) {
        canon_to_brute.emplace(canon, canon);
        continue;
      }
      const std::string brute = oracle::brute_canonical_key(g);
      auto [it, inserted] = canon_to_brute.emplace(canon, brute);
      if (!inserted) CHECK(it->second == brute);
      brute_keys.insert(brute);
    }
    if (n <= 5) CHECK(canon_to_brute.size() == brute_keys.size());
    CHECK(canon_to_brute.size() == classes[n]);
  }
}

TEST_CASE("canonical form is invariant under random relabeling") {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = static_cast<int>(rng() % 9);
    const Graph g = oracle::random_graph(rng, n, (rng() % 9 + 1) / 10.0);
    const auto sigma = oracle::random_permutation(rng, n);
    CHECK(canonical_form(permute(g, sigma)) == canonical_form(g));
  }
}

TEST_CASE("canonical labeling maps the input onto its form") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, static_cast<int>(rng() % 11));
    const CanonicalLabeling lab = canonical_labeling(g);
    std::vector<int> sigma(g.order());
    for (int v = 0; v < g.order(); ++v) sigma[v] = lab.label[v];
    CHECK(permute(g, sigma) == lab.form);
  }
}

TEST_CASE("highly symmetric graphs at the size limit") {
  const Graph petersen = [] {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
      g.add_edge(i, (i + 1) % 5);
      g.add_edge(i, i + 5);
      g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
  }();
  std::mt19937_64 rng(99);
  for (const Graph& g : {Graph(10), Graph::complete(10), Graph::cycle(10), petersen,
                         Graph::complete(5).disjoint_union(Graph::complete(5)),
                         Graph::cycle(5).disjoint_union(Graph::cycle(5))}) {
    const Graph c = canonical_form(g);
    for (int trial = 0; trial < 5; ++trial) {
      CHECK(canonical_form(permute(g, oracle::random_permutation(rng, 10))) == c);
    }
  }
}

TEST_CASE("orders above 10 are rejected") {
  CHECK_THROWS_AS(canonical_form(Graph(11)), Error);
  try {
    canonical_form(Graph(11));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}
