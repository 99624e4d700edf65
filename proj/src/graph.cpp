#include "coperm/graph.hpp"

#include <vector>

#include "coperm/error.hpp"

namespace coperm {

namespace {

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw Error(ErrorCode::Internal, "vertex " + std::to_string(v) + " out of range");
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorCode::TooLarge, "graph order " + std::to_string(n) + " outside 0..32");
  }
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

void Graph::add_edge(int u, int v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) throw Error(ErrorCode::Internal, "loops are not allowed");
  rows_[u] |= Row{1} << v;
  rows_[v] |= Row{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  rows_[u] &= ~(Row{1} << v);
  rows_[v] &= ~(Row{1} << u);
}

Graph Graph::with_vertex(Row neighbours) const {
  Graph g(n_ + 1);
  g.rows_ = rows_;
  const Row mask = n_ == 32 ? ~Row{0} : (Row{1} << n_) - 1;
  neighbours &= mask;
  g.rows_[n_] = neighbours;
  for (Row s = neighbours; s != 0; s &= s - 1) {
    g.rows_[std::countr_zero(s)] |= Row{1} << n_;
  }
  return g;
}

Graph Graph::without_vertex(int v) const {
  check_vertex(*this, v);
  Graph g(n_ - 1);
  const Row low = (Row{1} << v) - 1;
  int out = 0;
  for (int i = 0; i < n_; ++i) {
    if (i == v) continue;
    const Row r = rows_[i];
    g.rows_[out++] = (r & low) | ((r >> 1) & ~low);
  }
  return g;
}

Graph Graph::disjoint_union(const Graph& other) const {
  Graph g(n_ + other.n_);
  for (int i = 0; i < n_; ++i) g.rows_[i] = rows_[i];
  for (int i = 0; i < other.n_; ++i) g.rows_[n_ + i] = other.rows_[i] << n_;
  return g;
}

Graph Graph::complement() const {
  Graph g(n_);
  const Row all = n_ == 32 ? ~Row{0} : (Row{1} << n_) - 1;
  for (int i = 0; i < n_; ++i) g.rows_[i] = ~rows_[i] & all & ~(Row{1} << i);
  return g;
}

std::size_t Graph::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull ^ static_cast<std::uint64_t>(n_);
  for (int i = 0; i < n_; ++i) {
    h ^= rows_[i];
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

EdgeCount edge_count(const Graph& g) {
  int total = 0;
  for (int i = 0; i < g.order(); ++i) total += g.degree(i);
  return total / 2;
}

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) {
    throw Error(ErrorCode::TrailingGarbage, "graph6 header is not accepted");
  }
  if (text.empty()) throw Error(ErrorCode::TruncatedBody, "empty graph6 word");
  for (char c : text) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) {
      throw Error(ErrorCode::InvalidChar,
                  "byte " + std::to_string(b) + " outside 63..126");
    }
  }
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n > Graph::kMaxVertices) {
    throw Error(ErrorCode::TooLarge, "graph6 order " + std::to_string(n) + " exceeds 32");
  }
  const std::size_t bits = static_cast<std::size_t>(max_edges(n));
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - 1 < body) {
    throw Error(ErrorCode::TruncatedBody, "expected " + std::to_string(body) +
                                              " body bytes, got " +
                                              std::to_string(text.size() - 1));
  }
  if (text.size() - 1 > body) {
    throw Error(ErrorCode::TrailingGarbage, "extra bytes after graph6 body");
  }

  Graph g(n);
  std::size_t k = 0;
  auto bit_at = [&](std::size_t pos) {
    const int group = static_cast<unsigned char>(text[1 + pos / 6]) - 63;
    return (group >> (5 - pos % 6)) & 1;
  };
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (bit_at(k)) g.add_edge(i, j);
    }
  }
  for (; k < body * 6; ++k) {
    if (bit_at(k)) throw Error(ErrorCode::TrailingGarbage, "nonzero padding bits");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph permute(const Graph& g, std::span<const int> sigma) {
  const int n = g.order();
  if (static_cast<int>(sigma.size()) != n) {
    throw Error(ErrorCode::BadPermutation, "permutation length differs from graph order");
  }
  std::uint64_t seen = 0;
  for (int s : sigma) {
    if (s < 0 || s >= n || ((seen >> s) & 1u)) {
      throw Error(ErrorCode::BadPermutation, "not a bijection on 0..n-1");
    }
    seen |= std::uint64_t{1} << s;
  }
  Graph out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(i, j)) out.add_edge(sigma[i], sigma[j]);
  return out;
}

IntMatrix adjacency_char_matrix(const Graph& g, std::int64_t t) {
  const int n = g.order();
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(i, j) = i == j ? t : (g.adjacent(i, j) ? -1 : 0);
    }
  }
  return m;
}

}  // namespace coperm
