#include "tourney/analysis.hpp"

#include "tourney/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace tourney {

namespace {

void check_vertex(const Tournament& t, VertexId v) {
  if (v >= t.order())
    throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " not in [0, " + std::to_string(t.order()) + ")");
}

// Out-neighbourhoods as packed bit rows.
class AdjacencyRows {
public:
  explicit AdjacencyRows(const Tournament& t) : n_(t.order()), stride_((n_ + 63) / 64), words_(n_ * stride_, 0) {
    for (VertexId u = 0; u < n_; ++u)
      for (VertexId v = 0; v < n_; ++v)
        if (t.beats(u, v))
          words_[u * stride_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  }

  // |{v} ∪ N+(v) ∪ N+(N+(v))| == n
  bool covers_in_two_steps(VertexId v) const {
    std::vector<std::uint64_t> reach(row(v), row(v) + stride_);
    reach[v >> 6] |= std::uint64_t{1} << (v & 63);
    for (std::size_t w = 0; w < stride_; ++w) {
      std::uint64_t bits = row(v)[w];
      while (bits) {
        const VertexId u = w * 64 + static_cast<VertexId>(std::countr_zero(bits));
        bits &= bits - 1;
        for (std::size_t i = 0; i < stride_; ++i)
          reach[i] |= row(u)[i];
      }
    }
    std::size_t count = 0;
    for (std::uint64_t word : reach)
      count += static_cast<std::size_t>(std::popcount(word));
    return count == n_;
  }

private:
  const std::uint64_t* row(VertexId v) const { return words_.data() + v * stride_; }

  std::size_t n_;
  std::size_t stride_;
  std::vector<std::uint64_t> words_;
};

// Iterative Tarjan over the induced subtournament; `vertices` is sorted.
std::vector<VertexSet> strong_components(const Tournament& t, const VertexSet& vertices) {
  const std::size_t m = vertices.size();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(m, unvisited), low(m, 0);
  std::vector<char> on_stack(m, 0);
  std::vector<std::size_t> stack;
  std::vector<VertexSet> components;
  std::size_t counter = 0;

  struct Frame {
    std::size_t node;
    std::size_t next; // next candidate successor position
  };
  std::vector<Frame> calls;

  for (std::size_t root = 0; root < m; ++root) {
    if (index[root] != unvisited)
      continue;
    calls.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!calls.empty()) {
      Frame& f = calls.back();
      bool descended = false;
      while (f.next < m) {
        const std::size_t w = f.next++;
        if (!t.beats(vertices[f.node], vertices[w]))
          continue;
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          calls.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w])
          low[f.node] = std::min(low[f.node], index[w]);
      }
      if (descended)
        continue;
      const std::size_t v = f.node;
      calls.pop_back();
      if (!calls.empty())
        low[calls.back().node] = std::min(low[calls.back().node], low[v]);
      if (low[v] == index[v]) {
        VertexSet component;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          component.push_back(vertices[w]);
        } while (w != v);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  }
  return components;
}

} // namespace

ReidPartition condensation(const Tournament& t, std::span<const VertexId> subset) {
  if (subset.empty())
    throw Error(Errc::EmptySubset, "condensation of an empty vertex set");
  VertexSet vertices(subset.begin(), subset.end());
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (VertexId v : vertices)
    check_vertex(t, v);

  ReidPartition p{strong_components(t, vertices)};
  // Between two components of a tournament every arc points the same way,
  // so comparing representatives gives the (total) condensation order.
  std::sort(p.blocks.begin(), p.blocks.end(),
            [&](const VertexSet& a, const VertexSet& b) { return t.beats(a.front(), b.front()); });
  return p;
}

bool is_strong(const Tournament& t) {
  if (t.order() <= 1)
    return true;
  VertexSet all(t.order());
  for (VertexId v = 0; v < t.order(); ++v)
    all[v] = v;
  return condensation(t, all).blocks.size() == 1;
}

bool is_king(const Tournament& t, VertexId v) {
  check_vertex(t, v);
  return AdjacencyRows(t).covers_in_two_steps(v);
}

VertexSet kings(const Tournament& t) {
  const AdjacencyRows rows(t);
  VertexSet out;
  for (VertexId v = 0; v < t.order(); ++v)
    if (rows.covers_in_two_steps(v))
      out.push_back(v);
  return out;
}

KingContext king_context(const Tournament& t, VertexId k) {
  check_vertex(t, k);
  if (t.order() < 3)
    throw Error(Errc::OrderTooSmall, "need n >= 3, got " + std::to_string(t.order()));
  if (!is_strong(t))
    throw Error(Errc::NotStrong, "tournament is not strongly connected");
  if (!is_king(t, k))
    throw Error(Errc::NotAKing, "vertex " + std::to_string(k) + " is not a king");
  auto [out_set, in_set] = neighborhood(t, k);
  return KingContext{k, std::move(out_set), std::move(in_set)};
}

} // namespace tourney
