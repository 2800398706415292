#include "tourney/chain.hpp"

#include "tourney/analysis.hpp"
#include "tourney/error.hpp"
#include "tourney/hamiltonian.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace tourney {

namespace {

bool contains(const VertexSet& sorted, VertexId v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

[[noreturn]] void contradiction(const std::string& what) { throw Error(Errc::InternalContradiction, what); }

} // namespace

ExitEdge find_exit_edge(const Tournament& t, const KingContext& ctx, const ReidPartition& reid) {
  if (reid.blocks.empty())
    contradiction("empty Reid partition");
  const VertexSet& last_block = reid.blocks.back();
  const VertexId start = last_block.front();
  const std::size_t n = t.order();
  constexpr VertexId none = static_cast<VertexId>(-1);

  std::vector<VertexId> parent(n, none);
  std::vector<char> seen(n, 0);
  std::deque<VertexId> queue{start};
  seen[start] = 1;
  while (!queue.empty() && !seen[ctx.king]) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId v = 0; v < n; ++v) {
      if (seen[v] || !t.beats(u, v))
        continue;
      seen[v] = 1;
      parent[v] = u;
      queue.push_back(v);
    }
  }
  if (!seen[ctx.king])
    contradiction("king unreachable from the last Reid block");

  const VertexId b_star = parent[ctx.king];
  if (b_star == none || b_star == start)
    contradiction("shortest path back to the king is too short");
  const VertexId a_star = parent[b_star];
  if (!contains(last_block, a_star) || !contains(ctx.in_set, b_star))
    contradiction("exit arc " + std::to_string(a_star) + "->" + std::to_string(b_star) + " leaves the expected sets");
  return {a_star, b_star};
}

Path spine_path(const Tournament& t, const KingContext& ctx, const ReidPartition& reid, const ExitEdge& exit) {
  if (reid.blocks.empty())
    contradiction("empty Reid partition");
  VertexSet head;
  for (std::size_t i = 0; i + 1 < reid.blocks.size(); ++i)
    head.insert(head.end(), reid.blocks[i].begin(), reid.blocks[i].end());

  Path spine;
  if (!head.empty())
    spine = hamiltonian_path(t, head);
  const Path tail = path_ending_at(t, reid.blocks.back(), exit.a_star);
  spine.vertices.insert(spine.vertices.end(), tail.vertices.begin(), tail.vertices.end());
  if (spine.vertices.size() != ctx.out_degree())
    contradiction("spine does not cover A");
  return spine;
}

std::vector<LadderStep> build_ladder(const KingContext& ctx, const Path& spine, const ExitEdge& exit) {
  const auto& a = spine.vertices;
  const std::size_t d = a.size();
  if (d == 0 || a.back() != exit.a_star)
    contradiction("spine must end at a_star");
  std::vector<LadderStep> ladder;
  ladder.reserve(d);
  for (std::size_t i = 1; i <= d; ++i) {
    Cycle c;
    c.vertices.reserve(i + 2);
    c.vertices.push_back(ctx.king);
    c.vertices.insert(c.vertices.end(), a.end() - static_cast<std::ptrdiff_t>(i), a.end());
    c.vertices.push_back(exit.b_star);
    std::optional<InsertionRecord> next;
    if (i < d)
      next = InsertionRecord{ctx.king, a[d - i], a[d - i - 1]};
    ladder.push_back({std::move(c), next});
  }
  return ladder;
}

std::pair<Cycle, InsertionRecord> extend_cycle(const Tournament& t, const KingContext& ctx, const Cycle& c) {
  const std::size_t n = t.order();
  if (c.vertices.empty() || c.vertices.front() != ctx.king)
    contradiction("cycle must start at the king");
  if (c.size() >= n)
    throw Error(Errc::CycleAlreadySpanning, "cycle already covers all " + std::to_string(n) + " vertices");

  std::vector<char> on_cycle(n, 0);
  for (VertexId v : c.vertices)
    on_cycle[v] = 1;
  for (VertexId a : ctx.out_set)
    if (!on_cycle[a])
      contradiction("cycle does not contain out-neighbour " + std::to_string(a) + " of the king");

  const VertexId z = static_cast<VertexId>(std::find(on_cycle.begin(), on_cycle.end(), 0) - on_cycle.begin());
  const auto& cyc = c.vertices;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    const VertexId x = cyc[i];
    const VertexId y = cyc[(i + 1) % cyc.size()];
    if (t.beats(x, z) && t.beats(z, y)) {
      Cycle next;
      next.vertices.reserve(cyc.size() + 1);
      next.vertices.insert(next.vertices.end(), cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(i + 1));
      next.vertices.push_back(z);
      next.vertices.insert(next.vertices.end(), cyc.begin() + static_cast<std::ptrdiff_t>(i + 1), cyc.end());
      return {std::move(next), InsertionRecord{x, y, z}};
    }
  }
  contradiction("no insertion slot for vertex " + std::to_string(z));
}

CycleChain build_chain(const Tournament& t, VertexId k) {
  CycleChain chain;
  chain.king = k;
  chain.context = king_context(t, k);
  chain.reid = condensation(t, chain.context.out_set);
  chain.exit = find_exit_edge(t, chain.context, chain.reid);
  chain.spine = spine_path(t, chain.context, chain.reid, chain.exit);

  const std::size_t n = t.order();
  chain.cycles.reserve(n - 2);
  chain.insertions.reserve(n - 3);
  for (auto& step : build_ladder(chain.context, chain.spine, chain.exit)) {
    chain.cycles.push_back(std::move(step.cycle));
    if (step.to_next)
      chain.insertions.push_back(*step.to_next);
  }
  while (chain.cycles.back().size() < n) {
    auto [next, record] = extend_cycle(t, chain.context, chain.cycles.back());
    chain.insertions.push_back(record);
    chain.cycles.push_back(std::move(next));
  }
  return chain;
}

} // namespace tourney
