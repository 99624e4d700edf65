#include "coperm/enumerate.hpp"

#include <fstream>
#include <ostream>
#include <string>
#include <unordered_set>

#include "coperm/canonical.hpp"
#include "coperm/error.hpp"

namespace coperm {

namespace {

using Row = Graph::Row;

// Vertex invariant used to pick the deletion vertex before paying for a
// canonical labeling: degree first, then the sum of neighbour degrees.
int deletion_rank(const Graph& g, int v) {
  int nbr_degrees = 0;
  for (Row r = g.row(v); r != 0; r &= r - 1) nbr_degrees += g.degree(std::countr_zero(r));
  return g.degree(v) * 1024 + nbr_degrees;
}

// Orderly generation by canonical deletion. Every graph on k+1 vertices has
// a deletion vertex chosen invariantly (max rank, ties broken by canonical
// label); it is accepted only as the child of the canonical form of the
// graph with that vertex removed. Children of one parent that coincide
// (subsets equivalent under the parent's automorphisms) are deduplicated
// by canonical form.
class Generator {
 public:
  Generator(int n, EdgeCount lo, EdgeCount hi, const std::function<void(const Graph&)>& visit)
      : n_(n), lo_(lo), hi_(hi), visit_(visit) {}

  std::uint64_t run() {
    extend(Graph(0), 0);
    return emitted_;
  }

 private:
  void extend(const Graph& parent, EdgeCount edges) {
    const int k = parent.order();
    if (k == n_) {
      ++emitted_;
      visit_(parent);
      return;
    }
    // Edges still obtainable after this vertex: vertices k+1..n-1.
    const int later = max_edges(n_) - max_edges(k + 1);

    std::unordered_set<Graph, GraphHash> seen;
    const Row subsets = Row{1} << k;
    for (Row s = 0; s < subsets; ++s) {
      const EdgeCount child_edges = edges + std::popcount(s);
      if (child_edges > hi_ || child_edges + later < lo_) continue;
      const Graph child = parent.with_vertex(s);

      const int rank = deletion_rank(child, k);
      Row candidates = 0;
      bool rejected = false;
      for (int v = 0; v <= k && !rejected; ++v) {
        const int r = deletion_rank(child, v);
        if (r > rank) rejected = true;
        if (r == rank) candidates |= Row{1} << v;
      }
      if (rejected) continue;

      const CanonicalLabeling lab = canonical_labeling(child);
      if (!std::has_single_bit(candidates)) {
        int chosen = k;
        for (Row r = candidates; r != 0; r &= r - 1) {
          const int v = std::countr_zero(r);
          if (lab.label[v] > lab.label[chosen]) chosen = v;
        }
        if (chosen != k && canonical_form(child.without_vertex(chosen)) != parent) continue;
      }
      if (!seen.insert(lab.form).second) continue;
      extend(lab.form, child_edges);
    }
  }

  int n_;
  EdgeCount lo_;
  EdgeCount hi_;
  const std::function<void(const Graph&)>& visit_;
  std::uint64_t emitted_ = 0;
};

std::string_view strip_line(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.remove_suffix(1);
  return line;
}

}  // namespace

GraphStream GraphStream::builtin(int n, std::optional<EdgeCount> edges) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
  if (n > kMaxBuiltinOrder) {
    throw Error(ErrorCode::TooLarge, "builtin generator supports n <= " +
                                         std::to_string(kMaxBuiltinOrder) +
                                         "; feed larger orders through graph6 ingest");
  }
  if (edges && (*edges < 0 || *edges > max_edges(n))) {
    throw Error(ErrorCode::InvalidArgument, "edge count " + std::to_string(*edges) +
                                                " outside 0.." + std::to_string(max_edges(n)));
  }
  GraphStream s;
  s.n_ = n;
  s.edges_ = edges;
  return s;
}

GraphStream GraphStream::ingest(std::filesystem::path path) {
  GraphStream s;
  s.path_ = std::move(path);
  return s;
}

GraphStream& GraphStream::expect_count(std::uint64_t count) {
  count_hint_ = count;
  return *this;
}

std::uint64_t GraphStream::for_each(const std::function<void(const Graph&)>& visit) const {
  std::uint64_t count = 0;
  if (!path_) {
    const EdgeCount lo = edges_.value_or(0);
    const EdgeCount hi = edges_.value_or(max_edges(n_));
    count = Generator(n_, lo, hi, visit).run();
  } else {
    std::ifstream in(*path_);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path_->string());
    std::string line;
    std::uint64_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const std::string_view word = strip_line(line);
      if (word.empty()) continue;
      Graph g;
      try {
        g = parse_graph6(word);
      } catch (const Error& e) {
        throw Error(ErrorCode::Decode, path_->string() + " line " + std::to_string(lineno) +
                                           ": " + e.what());
      }
      ++count;
      visit(g);
    }
    if (in.bad()) throw Error(ErrorCode::Io, "read failure on " + path_->string());
  }
  if (count_hint_ && *count_hint_ != count) {
    throw Error(ErrorCode::CountMismatch, "expected " + std::to_string(*count_hint_) +
                                              " graphs, stream yielded " + std::to_string(count));
  }
  return count;
}

std::vector<Graph> GraphStream::collect() const {
  std::vector<Graph> out;
  for_each([&](const Graph& g) { out.push_back(g); });
  return out;
}

GraphStream enumerate_graphs(int n) { return GraphStream::builtin(n); }

GraphStream enumerate_by_edges(int n, EdgeCount m) { return GraphStream::builtin(n, m); }

GraphStream ingest_graph6(const std::filesystem::path& path) { return GraphStream::ingest(path); }

std::uint64_t write_graph6(const GraphStream& stream, std::ostream& out) {
  return stream.for_each([&](const Graph& g) { out << to_graph6(g) << '\n'; });
}

}  // namespace coperm
