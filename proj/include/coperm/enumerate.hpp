#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "coperm/graph.hpp"

namespace coperm {

inline constexpr int kMaxBuiltinOrder = 9;

// A source of graphs: either the builtin isomorph-free generator, or a
// graph6 file decoded line by line. Builtin streams yield canonical forms,
// one per isomorphism class, in an unspecified order.
class GraphStream {
 public:
  static GraphStream builtin(int n, std::optional<EdgeCount> edges = std::nullopt);
  static GraphStream ingest(std::filesystem::path path);

  // When set, a different number of yielded graphs is an error
  // (CountMismatch) raised at end of stream.
  GraphStream& expect_count(std::uint64_t count);

  // Visits every graph in the stream and returns how many were visited.
  std::uint64_t for_each(const std::function<void(const Graph&)>& visit) const;

  std::vector<Graph> collect() const;

  bool is_builtin() const { return !path_.has_value(); }
  int order() const { return n_; }
  std::optional<EdgeCount> edges() const { return edges_; }

 private:
  GraphStream() = default;

  int n_ = 0;
  std::optional<EdgeCount> edges_;
  std::optional<std::filesystem::path> path_;
  std::optional<std::uint64_t> count_hint_;
};

GraphStream enumerate_graphs(int n);
GraphStream enumerate_by_edges(int n, EdgeCount m);
GraphStream ingest_graph6(const std::filesystem::path& path);

// Writes one graph6 word per line; returns the number written.
std::uint64_t write_graph6(const GraphStream& stream, std::ostream& out);

}  // namespace coperm
