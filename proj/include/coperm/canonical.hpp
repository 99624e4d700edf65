#pragma once

#include <array>
#include <cstdint>

#include "coperm/graph.hpp"

namespace coperm {

inline constexpr int kMaxCanonicalOrder = 10;

struct CanonicalLabeling {
  Graph form;
  // label[v] is the position vertex v takes in `form`.
  std::array<std::int8_t, Graph::kMaxVertices> label{};
};

// Canonical relabeling of g: among all labelings compatible with the
// ordered equitable partition refined from the degree partition, the one
// whose graph6-order upper-triangle bit string is lexicographically least.
// Isomorphic inputs produce identical forms. Throws TooLarge for n > 10.
CanonicalLabeling canonical_labeling(const Graph& g);

Graph canonical_form(const Graph& g);

}  // namespace coperm
