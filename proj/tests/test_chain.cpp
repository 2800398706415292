#include "tourney/analysis.hpp"
#include "tourney/chain.hpp"
#include "tourney/error.hpp"
#include "tourney/oracle/verify.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>

using namespace tourney;
using fixtures::t4a;
using fixtures::three_cycle;
using fixtures::transitive_triangle;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::InternalContradiction;
}

// King 0 with the single out-neighbour 1; 1 beats the 3-cycle 2->3->4->2,
// which beats 0.
Tournament king_of_out_degree_one() {
  return from_edge_list({5, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 0}, {3, 0}, {4, 0}, {2, 3}, {3, 4}, {4, 2}}});
}

bool contains(const std::vector<VertexId>& v, VertexId x) { return std::find(v.begin(), v.end(), x) != v.end(); }

} // namespace

TEST_SUITE_BEGIN("chain");

TEST_CASE("find_exit_edge") {
  {
    const Tournament t = three_cycle();
    const auto ctx = king_context(t, 0);
    const auto reid = condensation(t, ctx.out_set);
    CHECK(find_exit_edge(t, ctx, reid) == ExitEdge{1, 2});
  }
  {
    const Tournament t = t4a();
    const auto ctx = king_context(t, 1);
    const auto reid = condensation(t, ctx.out_set);
    REQUIRE(reid.blocks == std::vector<VertexSet>{{2}, {3}});
    CHECK(find_exit_edge(t, ctx, reid) == ExitEdge{3, 0});
  }
}

TEST_CASE("find_exit_edge properties on random strong tournaments") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Tournament t = random_strong_tournament(3 + seed % 30, seed);
    for (VertexId k : kings(t)) {
      const auto ctx = king_context(t, k);
      const auto reid = condensation(t, ctx.out_set);
      const auto exit = find_exit_edge(t, ctx, reid);
      const auto& last = reid.blocks.back();
      REQUIRE(std::binary_search(last.begin(), last.end(), exit.a_star));
      REQUIRE(std::binary_search(ctx.in_set.begin(), ctx.in_set.end(), exit.b_star));
      REQUIRE(t.beats(exit.a_star, exit.b_star));
      REQUIRE(t.beats(exit.b_star, k));
      // When the search start already beats something in B the path is start -> b -> k.
      const VertexId start = last.front();
      if (std::any_of(ctx.in_set.begin(), ctx.in_set.end(), [&](VertexId b) { return t.beats(start, b); }))
        REQUIRE(exit.a_star == start);
    }
  }
}

TEST_CASE("spine_path") {
  {
    const Tournament t = three_cycle();
    const auto ctx = king_context(t, 0);
    const auto reid = condensation(t, ctx.out_set);
    CHECK(spine_path(t, ctx, reid, find_exit_edge(t, ctx, reid)).vertices == VertexSet{1});
  }
  {
    const Tournament t = t4a();
    const auto ctx = king_context(t, 1);
    const auto reid = condensation(t, ctx.out_set);
    CHECK(spine_path(t, ctx, reid, find_exit_edge(t, ctx, reid)).vertices == VertexSet{2, 3});
  }
  SUBCASE("spine covers A, ends at a_star, follows arcs") {
    std::size_t single_block = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const Tournament t = random_strong_tournament(3 + seed % 30, seed);
      for (VertexId k : kings(t)) {
        const auto ctx = king_context(t, k);
        const auto reid = condensation(t, ctx.out_set);
        const auto exit = find_exit_edge(t, ctx, reid);
        const auto spine = spine_path(t, ctx, reid, exit).vertices;
        REQUIRE(fixtures::sorted(spine) == ctx.out_set);
        REQUIRE(spine.back() == exit.a_star);
        REQUIRE(fixtures::is_valid_path(t, spine));
        if (reid.blocks.size() == 1) {
          // With A strong the spine is the cut spanning cycle of A alone.
          ++single_block;
        }
      }
    }
    CHECK(single_block > 0);
  }
}

TEST_CASE("build_ladder") {
  SUBCASE("3-cycle") {
    const auto ladder = build_ladder(KingContext{0, {1}, {2}}, Path{{1}}, ExitEdge{1, 2});
    REQUIRE(ladder.size() == 1);
    CHECK(ladder[0].cycle.vertices == VertexSet{0, 1, 2});
    CHECK_FALSE(ladder[0].to_next.has_value());
  }
  SUBCASE("T4a") {
    const auto ladder = build_ladder(KingContext{1, {2, 3}, {0}}, Path{{2, 3}}, ExitEdge{3, 0});
    REQUIRE(ladder.size() == 2);
    CHECK(ladder[0].cycle.vertices == VertexSet{1, 3, 0});
    CHECK(ladder[1].cycle.vertices == VertexSet{1, 2, 3, 0});
    CHECK(ladder[0].to_next == InsertionRecord{1, 3, 2});
    CHECK_FALSE(ladder[1].to_next.has_value());
  }
  SUBCASE("general spine") {
    const auto ladder = build_ladder(KingContext{9, {4, 5, 6, 7}, {8}}, Path{{5, 7, 4, 6}}, ExitEdge{6, 8});
    REQUIRE(ladder.size() == 4);
    CHECK(ladder[0].cycle.vertices == VertexSet{9, 6, 8});
    CHECK(ladder[3].cycle.vertices == VertexSet{9, 5, 7, 4, 6, 8});
    for (std::size_t i = 0; i < 4; ++i)
      CHECK(ladder[i].cycle.size() == i + 3);
  }
  CHECK(error_of([] { build_ladder(KingContext{0, {1}, {2}}, Path{{1}}, ExitEdge{5, 2}); }) ==
        Errc::InternalContradiction);
}

TEST_CASE("extend_cycle") {
  SUBCASE("spanning cycle cannot grow") {
    const Tournament t = t4a();
    const auto ctx = king_context(t, 1);
    CHECK(error_of([&] { extend_cycle(t, ctx, Cycle{{1, 2, 3, 0}}); }) == Errc::CycleAlreadySpanning);
  }
  SUBCASE("king of out-degree one, worked by hand") {
    // Ladder: 1 -> 2 -> 0 is the shortest way back, so C3 = (0, 1, 2).
    // z = 3 fits only between 2 and 0 (wrap arc); then z = 4 fits between 1 and 2.
    const Tournament t = king_of_out_degree_one();
    REQUIRE(is_strong(t));
    const auto ctx = king_context(t, 0);
    REQUIRE(ctx.out_set == VertexSet{1});
    auto [c4, r4] = extend_cycle(t, ctx, Cycle{{0, 1, 2}});
    CHECK(c4.vertices == VertexSet{0, 1, 2, 3});
    CHECK(r4 == InsertionRecord{2, 0, 3});
    auto [c5, r5] = extend_cycle(t, ctx, c4);
    CHECK(c5.vertices == VertexSet{0, 1, 4, 2, 3});
    CHECK(r5 == InsertionRecord{1, 2, 4});

    const auto chain = build_chain(t, 0);
    CHECK(chain.cycles == std::vector<Cycle>{{{0, 1, 2}}, c4, c5});
    CHECK(oracle::verify_chain(t, chain).passed);
  }
  SUBCASE("preconditions are tripwires") {
    const Tournament t = king_of_out_degree_one();
    const auto ctx = king_context(t, 0);
    CHECK(error_of([&] { extend_cycle(t, ctx, Cycle{{1, 2, 0}}); }) == Errc::InternalContradiction);
    CHECK(error_of([&] { extend_cycle(t, ctx, Cycle{{0, 2, 3}}); }) == Errc::InternalContradiction);
  }
}

TEST_CASE("build_chain worked examples") {
  {
    const auto chain = build_chain(three_cycle(), 0);
    CHECK(chain.cycles == std::vector<Cycle>{{{0, 1, 2}}});
    CHECK(chain.insertions.empty());
  }
  {
    const auto chain = build_chain(t4a(), 1);
    CHECK(chain.king == 1);
    CHECK(chain.cycles == std::vector<Cycle>{{{1, 3, 0}}, {{1, 2, 3, 0}}});
    CHECK(chain.insertions == std::vector<InsertionRecord>{{1, 3, 2}});
    CHECK(chain.exit == ExitEdge{3, 0});
    CHECK(chain.spine.vertices == VertexSet{2, 3});
  }
  CHECK(error_of([] { build_chain(transitive_triangle(), 0); }) == Errc::NotStrong);
  CHECK(error_of([] { build_chain(t4a(), 3); }) == Errc::NotAKing);
  CHECK(error_of([] { build_chain(from_edge_list({2, {{0, 1}}}), 0); }) == Errc::OrderTooSmall);
}

TEST_CASE("chain invariants, exhaustive n <= 5 and random n <= 40") {
  auto check = [](const Tournament& t, VertexId k) {
    const auto chain = build_chain(t, k);
    const std::size_t n = t.order();
    const std::size_t d = chain.context.out_degree();
    REQUIRE(chain.cycles.size() == n - 2);
    REQUIRE(chain.insertions.size() == n - 3);
    for (std::size_t j = 0; j < chain.cycles.size(); ++j) {
      const auto& c = chain.cycles[j].vertices;
      REQUIRE(c.size() == j + 3);
      REQUIRE(c.front() == k);
      REQUIRE(fixtures::is_valid_cycle(t, c));
      if (j < d) {
        // Ladder rung: {k, b*} plus the last j+1 spine vertices.
        VertexSet expected{k, chain.exit.b_star};
        expected.insert(expected.end(), chain.spine.vertices.end() - static_cast<std::ptrdiff_t>(j + 1),
                        chain.spine.vertices.end());
        REQUIRE(fixtures::sorted(c) == fixtures::sorted(expected));
      } else {
        for (VertexId a : chain.context.out_set)
          REQUIRE(contains(c, a));
      }
    }
    for (std::size_t j = 0; j < chain.insertions.size(); ++j) {
      const auto& r = chain.insertions[j];
      REQUIRE_FALSE(contains(chain.cycles[j].vertices, r.z));
      REQUIRE(t.beats(r.x, r.z));
      REQUIRE(t.beats(r.z, r.y));
    }
    REQUIRE(oracle::verify_chain(t, chain).passed);
    REQUIRE(build_chain(t, k) == chain);
  };
  for (std::size_t n = 3; n <= 5; ++n)
    for (const auto& t : enumerate_all(n))
      if (is_strong(t))
        for (VertexId k : kings(t))
          check(t, k);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Tournament t = random_strong_tournament(3 + seed % 38, seed);
    for (VertexId k : kings(t))
      check(t, k);
  }
}

TEST_SUITE_END();
