#include "coperm/canonical.hpp"

#include <bit>

#include "coperm/error.hpp"

namespace coperm {

namespace {

using Row = Graph::Row;

struct Partition {
  std::array<Row, Graph::kMaxVertices> cells{};
  int count = 0;
};

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {
    for (int v = 0; v < n_; ++v) {
      twin_below_[v] = 0;
      for (int u = 0; u < v; ++u) {
        const Row ru = g_.row(u) & ~(Row{1} << v);
        const Row rv = g_.row(v) & ~(Row{1} << u);
        if (ru == rv) twin_below_[v] |= Row{1} << u;
      }
    }
  }

  CanonicalLabeling run() {
    Partition root;
    if (n_ > 0) {
      root.cells[0] = n_ == 32 ? ~Row{0} : (Row{1} << n_) - 1;
      root.count = 1;
    }
    search(root);

    CanonicalLabeling out;
    out.form = Graph(n_);
    for (int pos = 0; pos < n_; ++pos) out.label[best_order_[pos]] = static_cast<std::int8_t>(pos);
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (g_.adjacent(u, v)) out.form.add_edge(out.label[u], out.label[v]);
    return out;
  }

 private:
  // Splits cells by neighbour counts into each splitter cell until the
  // ordered partition is equitable. Fragments are ordered by ascending
  // count, so the result depends only on the graph structure.
  void refine(Partition& p) const {
  restart:
    for (int s = 0; s < p.count; ++s) {
      const Row splitter = p.cells[s];
      for (int c = 0; c < p.count; ++c) {
        const Row cell = p.cells[c];
        if (std::has_single_bit(cell)) continue;
        int lo = n_;
        int hi = -1;
        std::array<std::int8_t, Graph::kMaxVertices> cnt{};
        for (Row r = cell; r != 0; r &= r - 1) {
          const int v = std::countr_zero(r);
          const int k = std::popcount(g_.row(v) & splitter);
          cnt[v] = static_cast<std::int8_t>(k);
          lo = std::min(lo, k);
          hi = std::max(hi, k);
        }
        if (lo == hi) continue;

        std::array<Row, Graph::kMaxVertices> frags{};
        int nfrags = 0;
        for (int k = lo; k <= hi; ++k) {
          Row frag = 0;
          for (Row r = cell; r != 0; r &= r - 1) {
            const int v = std::countr_zero(r);
            if (cnt[v] == k) frag |= Row{1} << v;
          }
          if (frag != 0) frags[nfrags++] = frag;
        }
        for (int i = p.count - 1; i > c; --i) p.cells[i + nfrags - 1] = p.cells[i];
        for (int i = 0; i < nfrags; ++i) p.cells[c + i] = frags[i];
        p.count += nfrags - 1;
        goto restart;
      }
    }
  }

  // Column j of the key: bits adj(order[i], order[j]) for i < j, with
  // i = 0 in the most significant place.
  Row column(const std::array<std::int8_t, Graph::kMaxVertices>& order, int j) const {
    Row col = 0;
    const Row nbrs = g_.row(order[j]);
    for (int i = 0; i < j; ++i) col = (col << 1) | ((nbrs >> order[i]) & 1u);
    return col;
  }

  void search(Partition p) {
    refine(p);

    std::array<std::int8_t, Graph::kMaxVertices> order{};
    int fixed = 0;
    while (fixed < p.count && std::has_single_bit(p.cells[fixed])) {
      order[fixed] = static_cast<std::int8_t>(std::countr_zero(p.cells[fixed]));
      ++fixed;
    }
    const bool leaf = fixed == p.count;

    if (have_best_) {
      for (int j = 1; j < fixed; ++j) {
        const Row col = column(order, j);
        if (col > best_cols_[j]) return;
        if (col < best_cols_[j]) break;
      }
    }

    if (leaf) {
      bool better = !have_best_;
      std::array<Row, Graph::kMaxVertices> cols{};
      for (int j = 1; j < n_; ++j) cols[j] = column(order, j);
      if (!better) {
        for (int j = 1; j < n_; ++j) {
          if (cols[j] != best_cols_[j]) {
            better = cols[j] < best_cols_[j];
            break;
          }
        }
      }
      if (better) {
        have_best_ = true;
        best_cols_ = cols;
        best_order_ = order;
      }
      return;
    }

    int target = fixed;
    while (std::has_single_bit(p.cells[target])) ++target;
    const Row cell = p.cells[target];
    for (Row r = cell; r != 0; r &= r - 1) {
      const int v = std::countr_zero(r);
      // Swapping twins is an automorphism fixing this node.
      if (twin_below_[v] & cell) continue;
      Partition child;
      child.count = p.count + 1;
      for (int i = 0; i < target; ++i) child.cells[i] = p.cells[i];
      child.cells[target] = Row{1} << v;
      child.cells[target + 1] = cell & ~(Row{1} << v);
      for (int i = target + 1; i < p.count; ++i) child.cells[i + 1] = p.cells[i];
      search(child);
    }
  }

  const Graph& g_;
  int n_;
  std::array<Row, Graph::kMaxVertices> twin_below_{};
  bool have_best_ = false;
  std::array<Row, Graph::kMaxVertices> best_cols_{};
  std::array<std::int8_t, Graph::kMaxVertices> best_order_{};
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw Error(ErrorCode::TooLarge, "canonical form supports n <= " +
                                         std::to_string(kMaxCanonicalOrder));
  }
  return Canonizer(g).run();
}

Graph canonical_form(const Graph& g) { return canonical_labeling(g).form; }

}  // namespace coperm
