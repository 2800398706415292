#include "tourney/tournament.hpp"

#include "tourney/error.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace tourney {

namespace {

std::vector<std::uint64_t> zero_words(std::size_t pairs) { return std::vector<std::uint64_t>((pairs + 63) / 64, 0); }

void check_vertex(const Tournament& t, VertexId v) {
  if (v >= t.order())
    throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " not in [0, " + std::to_string(t.order()) + ")");
}

// Forward and backward search from vertex 0; used only to drive rejection sampling.
bool reaches_everything(const Tournament& t, bool forward) {
  const std::size_t n = t.order();
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (VertexId v = 0; v < n; ++v) {
      if (seen[v] || !(forward ? t.beats(u, v) : t.beats(v, u)))
        continue;
      seen[v] = 1;
      ++count;
      stack.push_back(v);
    }
  }
  return count == n;
}

} // namespace

Tournament::Tournament(std::size_t n) : n_(n), words_(zero_words(pair_count())) {
  for (std::size_t i = 0; i < pair_count(); ++i)
    set_bit(i, true);
}

Tournament Tournament::from_mask(std::size_t n, std::uint64_t mask) {
  Tournament t;
  t.n_ = n;
  t.words_ = zero_words(t.pair_count());
  if (!t.words_.empty()) {
    const std::size_t pairs = t.pair_count();
    t.words_[0] = pairs >= 64 ? mask : mask & ((std::uint64_t{1} << pairs) - 1);
  }
  return t;
}

std::size_t Tournament::out_degree(VertexId v) const {
  check_vertex(*this, v);
  std::size_t d = 0;
  for (VertexId u = 0; u < n_; ++u)
    d += beats(v, u);
  return d;
}

VertexSet Tournament::out_neighbors(VertexId v) const {
  check_vertex(*this, v);
  VertexSet out;
  for (VertexId u = 0; u < n_; ++u)
    if (beats(v, u))
      out.push_back(u);
  return out;
}

VertexSet Tournament::in_neighbors(VertexId v) const {
  check_vertex(*this, v);
  VertexSet in;
  for (VertexId u = 0; u < n_; ++u)
    if (beats(u, v))
      in.push_back(u);
  return in;
}

EdgeList Tournament::edge_list() const {
  EdgeList list{n_, {}};
  list.edges.reserve(pair_count());
  for (VertexId u = 0; u < n_; ++u)
    for (VertexId v = 0; v < n_; ++v)
      if (beats(u, v))
        list.edges.emplace_back(u, v);
  return list;
}

Tournament from_edge_list(const EdgeList& list) {
  if (list.n == 0)
    throw Error(Errc::OrderTooSmall, "a tournament needs at least one vertex");
  Tournament t;
  t.n_ = list.n;
  t.words_ = zero_words(t.pair_count());
  std::vector<char> seen(t.pair_count(), 0);
  for (const auto& [u, v] : list.edges) {
    if (u >= list.n || v >= list.n)
      throw Error(Errc::VertexOutOfRange,
                  "edge " + std::to_string(u) + " " + std::to_string(v) + " outside [0, " + std::to_string(list.n) + ")");
    if (u == v)
      throw Error(Errc::SelfLoop, "edge " + std::to_string(u) + " " + std::to_string(v));
    const auto [lo, hi] = std::minmax(u, v);
    const std::size_t i = Tournament::pair_index(list.n, lo, hi);
    if (seen[i])
      throw Error(Errc::DuplicatePair, "pair {" + std::to_string(lo) + "," + std::to_string(hi) + "} oriented twice");
    seen[i] = 1;
    t.set_bit(i, u < v);
  }
  for (VertexId lo = 0; lo < list.n; ++lo)
    for (VertexId hi = lo + 1; hi < list.n; ++hi)
      if (!seen[Tournament::pair_index(list.n, lo, hi)])
        throw Error(Errc::MissingPair, "pair {" + std::to_string(lo) + "," + std::to_string(hi) + "} never oriented");
  return t;
}

Neighborhood neighborhood(const Tournament& t, VertexId v) { return {t.out_neighbors(v), t.in_neighbors(v)}; }

Tournament random_tournament(std::size_t n, std::uint64_t seed) {
  Tournament t;
  t.n_ = n;
  t.words_ = zero_words(t.pair_count());
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < t.pair_count(); ++i)
    t.set_bit(i, (rng() >> 63) != 0);
  return t;
}

Tournament random_strong_tournament(std::size_t n, std::uint64_t seed, std::size_t max_tries) {
  if (n == 2)
    throw Error(Errc::OrderTwoImpossible, "no tournament on 2 vertices is strong");
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    Tournament t = random_tournament(n, seed + attempt);
    if (n <= 1 || (reaches_everything(t, true) && reaches_everything(t, false)))
      return t;
  }
  throw Error(Errc::ExhaustedTries, "no strong tournament of order " + std::to_string(n) + " within " +
                                        std::to_string(max_tries) + " tries");
}

std::uint64_t enumeration_size(std::size_t n) {
  if (n == 0)
    throw Error(Errc::OrderTooSmall, "enumeration needs n >= 1");
  if (n > 8)
    throw Error(Errc::OrderTooLarge, "enumeration is limited to n <= 8, got " + std::to_string(n));
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

std::vector<TournamentRange> TournamentRange::split(std::size_t parts) const {
  std::vector<TournamentRange> out;
  parts = std::max<std::size_t>(parts, 1);
  const std::uint64_t total = size();
  for (std::size_t p = 0; p < parts; ++p) {
    const std::uint64_t lo = first_ + total * p / parts;
    const std::uint64_t hi = first_ + total * (p + 1) / parts;
    out.emplace_back(n_, lo, hi);
  }
  return out;
}

TournamentRange enumerate_all(std::size_t n) { return {n, 0, enumeration_size(n)}; }

TournamentRange enumerate_range(std::size_t n, std::uint64_t first, std::uint64_t last) {
  const std::uint64_t total = enumeration_size(n);
  if (first > last || last > total)
    throw Error(Errc::OrderOutOfRange, "slice [" + std::to_string(first) + ", " + std::to_string(last) +
                                           ") outside enumeration of size " + std::to_string(total));
  return {n, first, last};
}

} // namespace tourney
