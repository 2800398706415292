#include "tourney/analysis.hpp"
#include "tourney/error.hpp"
#include "tourney/hamiltonian.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <random>

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

const std::vector<VertexId>& cycle_of(const SpanningCycle& s) { return std::get<Cycle>(s).vertices; }

// Triangle 0->1->2->0; 3 beats the triangle, the triangle beats 4, and 4->3.
Tournament triangle_with_dominator_and_dominated() {
  return from_edge_list({5, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {3, 2}, {0, 4}, {1, 4}, {2, 4}, {4, 3}}});
}

} // namespace

TEST_SUITE_BEGIN("hamiltonian");

TEST_CASE("hamiltonian_path") {
  CHECK(hamiltonian_path(transitive_triangle(), VertexSet{0, 1, 2}).vertices == VertexSet{0, 1, 2});
  // 0; 1 appended after 0; 2 beats the head 0 and is prepended.
  CHECK(hamiltonian_path(three_cycle(), VertexSet{0, 1, 2}).vertices == VertexSet{2, 0, 1});
  CHECK(hamiltonian_path(t4a(), VertexSet{3}).vertices == VertexSet{3});
  CHECK(error_of([] { hamiltonian_path(three_cycle(), VertexSet{}); }) == Errc::EmptySubset);
  CHECK(error_of([] { hamiltonian_path(three_cycle(), VertexSet{4}); }) == Errc::VertexOutOfRange);
}

TEST_CASE("hamiltonian_cycle") {
  CHECK(cycle_of(hamiltonian_cycle(three_cycle(), VertexSet{0, 1, 2})) == VertexSet{0, 1, 2});
  CHECK(std::get<Singleton>(hamiltonian_cycle(t4a(), VertexSet{2})).vertex == 2);

  const auto c = cycle_of(hamiltonian_cycle(t4a(), VertexSet{0, 1, 2, 3}));
  CHECK(c.size() == 4);
  CHECK(fixtures::is_valid_cycle(t4a(), c));
  CHECK(fixtures::sorted(c) == VertexSet{0, 1, 2, 3});

  CHECK(error_of([] { hamiltonian_cycle(t4a(), VertexSet{2, 3}); }) == Errc::OrderTwoSubset);
  CHECK(error_of([] { hamiltonian_cycle(transitive_triangle(), VertexSet{0, 1, 2}); }) == Errc::NotStrongSubset);
  CHECK(error_of([] { hamiltonian_cycle(t4a(), VertexSet{}); }) == Errc::EmptySubset);
}

TEST_CASE("hamiltonian_cycle absorbs a dominated/dominating pair") {
  const Tournament t = triangle_with_dominator_and_dominated();
  REQUIRE(is_strong(t));
  CHECK(cycle_of(hamiltonian_cycle(t, VertexSet{0, 1, 2, 3, 4})) == VertexSet{0, 1, 2, 4, 3});
}

TEST_CASE("path_ending_at") {
  CHECK(path_ending_at(t4a(), VertexSet{3}, 3).vertices == VertexSet{3});
  CHECK(path_ending_at(three_cycle(), VertexSet{0, 1, 2}, 2).vertices == VertexSet{0, 1, 2});
  CHECK(path_ending_at(three_cycle(), VertexSet{0, 1, 2}, 0).vertices == VertexSet{1, 2, 0});
  CHECK(error_of([] { path_ending_at(three_cycle(), VertexSet{0, 1, 2}, 5); }) == Errc::TargetNotInSubset);
  CHECK(error_of([] { path_ending_at(transitive_triangle(), VertexSet{0, 1, 2}, 1); }) == Errc::NotStrongSubset);
}

TEST_CASE("hamiltonian_path property: 10000 random tournaments and subsets") {
  std::mt19937_64 rng(2024);
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const Tournament t = random_tournament(1 + seed % 50, seed);
    const VertexSet s = fixtures::random_subset(t.order(), rng);
    const auto p = hamiltonian_path(t, s).vertices;
    REQUIRE(fixtures::sorted(p) == s);
    REQUIRE(fixtures::is_valid_path(t, p));
  }
}

TEST_CASE("hamiltonian_cycle property: strong blocks of random subsets") {
  std::mt19937_64 rng(99);
  std::size_t cycles_checked = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const Tournament t = random_tournament(3 + seed % 48, seed);
    const VertexSet s = fixtures::random_subset(t.order(), rng);
    for (const auto& block : condensation(t, s).blocks) {
      if (block.size() < 3)
        continue;
      const auto c = cycle_of(hamiltonian_cycle(t, block));
      REQUIRE(fixtures::sorted(c) == block);
      REQUIRE(fixtures::is_valid_cycle(t, c));
      const VertexId target = block[seed % block.size()];
      const auto p = path_ending_at(t, block, target).vertices;
      REQUIRE(p.back() == target);
      REQUIRE(fixtures::sorted(p) == block);
      REQUIRE(fixtures::is_valid_path(t, p));
      ++cycles_checked;
    }
  }
  CHECK(cycles_checked > 5000);
}

TEST_CASE("hamiltonian_cycle on every strong tournament, n <= 6") {
  for (std::size_t n = 3; n <= 6; ++n) {
    VertexSet all(n);
    for (VertexId v = 0; v < n; ++v)
      all[v] = v;
    for (const auto& t : enumerate_all(n)) {
      if (!is_strong(t))
        continue;
      const auto c = cycle_of(hamiltonian_cycle(t, all));
      REQUIRE(c.size() == n);
      REQUIRE(fixtures::is_valid_cycle(t, c));
    }
  }
}

TEST_SUITE_END();
