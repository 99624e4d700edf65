#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>

#include "coperm/int_matrix.hpp"

namespace coperm {

// Labeled simple graph on at most 32 vertices. Row i holds the neighbours
// of vertex i as a bit mask; the matrix is kept symmetric with a zero
// diagonal and no bits at positions >= n.
class Graph {
 public:
  static constexpr int kMaxVertices = 32;
  using Row = std::uint32_t;

  Graph() = default;
  explicit Graph(int n);

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);

  int order() const { return n_; }
  Row row(int v) const { return rows_[v]; }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }
  int degree(int v) const { return std::popcount(rows_[v]); }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  // Appends a vertex adjacent to the vertices set in `neighbours`.
  Graph with_vertex(Row neighbours) const;
  // Deletes vertex v, shifting the labels above it down by one.
  Graph without_vertex(int v) const;
  // Disjoint union; vertices of `other` are relabeled after ours.
  Graph disjoint_union(const Graph& other) const;
  Graph complement() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

  std::size_t hash() const;

 private:
  int n_ = 0;
  std::array<Row, kMaxVertices> rows_{};
};

struct GraphHash {
  std::size_t operator()(const Graph& g) const { return g.hash(); }
};

using EdgeCount = int;

EdgeCount edge_count(const Graph& g);

inline EdgeCount max_edges(int n) { return n * (n - 1) / 2; }

// Short-form graph6 (no header, n <= 32).
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Relabels vertex i as sigma[i].
Graph permute(const Graph& g, std::span<const int> sigma);

// t*I - A(G).
IntMatrix adjacency_char_matrix(const Graph& g, std::int64_t t);

}  // namespace coperm
