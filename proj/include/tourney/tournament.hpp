#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <utility>
#include <vector>

namespace tourney {

/// Vertices are the contiguous integers [0, n) of the tournament they belong to.
using VertexId = std::size_t;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<VertexId>;

struct EdgeList {
  std::size_t n = 0;
  std::vector<std::pair<VertexId, VertexId>> edges; // (u, v) means u -> v
};

/// A complete orientation on n labeled vertices.
///
/// Storage is one bit per unordered pair {u, v} with u < v; the pairs are
/// numbered in lexicographic order (0,1), (0,2), ..., (0,n-1), (1,2), ...
/// and a set bit means the lower vertex beats the higher one. Equality is
/// therefore bit equality, and for n <= 8 the whole table fits in one word,
/// which is what the enumeration index is.
class Tournament {
public:
  Tournament() = default;

  /// The transitive tournament on n vertices where u beats v whenever u < v.
  explicit Tournament(std::size_t n);

  /// Bit i of mask orients pair i (see class comment). Requires n <= 11.
  static Tournament from_mask(std::size_t n, std::uint64_t mask);

  std::size_t order() const noexcept { return n_; }
  std::size_t pair_count() const noexcept { return n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2; }

  static std::size_t pair_index(std::size_t n, VertexId lo, VertexId hi) noexcept {
    return lo * n - lo * (lo + 1) / 2 + (hi - lo - 1);
  }

  /// True iff u -> v is an edge. False for u == v.
  bool beats(VertexId u, VertexId v) const noexcept {
    if (u == v)
      return false;
    if (u < v)
      return bit(pair_index(n_, u, v));
    return !bit(pair_index(n_, v, u));
  }

  std::size_t out_degree(VertexId v) const;
  VertexSet out_neighbors(VertexId v) const;
  VertexSet in_neighbors(VertexId v) const;

  /// Every arc (u, v), sorted ascending by u, then v.
  EdgeList edge_list() const;

  const std::vector<std::uint64_t>& orientation_words() const noexcept { return words_; }

  friend bool operator==(const Tournament&, const Tournament&) = default;

private:
  friend Tournament from_edge_list(const EdgeList& list);
  friend Tournament random_tournament(std::size_t n, std::uint64_t seed);

  bool bit(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set_bit(std::size_t i, bool lower_wins) noexcept {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (lower_wins)
      words_[i >> 6] |= m;
    else
      words_[i >> 6] &= ~m;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Throws DuplicatePair, MissingPair, SelfLoop, VertexOutOfRange, OrderTooSmall (n = 0).
Tournament from_edge_list(const EdgeList& list);

struct Neighborhood {
  VertexSet out_set;
  VertexSet in_set;
};

Neighborhood neighborhood(const Tournament& t, VertexId v);

/// Each pair oriented by one fair coin from a 64-bit Mersenne twister seeded
/// with `seed`, drawn in pair-index order.
Tournament random_tournament(std::size_t n, std::uint64_t seed);

/// Rejection sampling: try random_tournament(n, seed + i) for i = 0, 1, ...
/// Throws OrderTwoImpossible for n = 2 and ExhaustedTries after max_tries.
Tournament random_strong_tournament(std::size_t n, std::uint64_t seed, std::size_t max_tries = 1000);

/// Number of labeled tournaments on n vertices, 2^(n(n-1)/2).
std::uint64_t enumeration_size(std::size_t n);

/// A contiguous slice [first, last) of the enumeration of all labeled
/// tournaments on n vertices, in pair-index bitmask order: index i yields
/// Tournament::from_mask(n, i). Disjoint slices can be consumed in parallel.
class TournamentRange {
public:
  class iterator {
  public:
    using value_type = Tournament;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(std::size_t n, std::uint64_t index) : n_(n), index_(index) {}

    Tournament operator*() const { return Tournament::from_mask(n_, index_); }
    std::uint64_t index() const noexcept { return index_; }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++index_;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

  private:
    std::size_t n_ = 0;
    std::uint64_t index_ = 0;
  };

  TournamentRange(std::size_t n, std::uint64_t first, std::uint64_t last) : n_(n), first_(first), last_(last) {}

  iterator begin() const { return {n_, first_}; }
  iterator end() const { return {n_, last_}; }
  std::uint64_t size() const noexcept { return last_ - first_; }

  /// Split into `parts` nearly equal contiguous slices (some may be empty).
  std::vector<TournamentRange> split(std::size_t parts) const;

private:
  std::size_t n_;
  std::uint64_t first_;
  std::uint64_t last_;
};

/// All labeled tournaments of order n. Throws OrderTooLarge for n > 8 and
/// OrderTooSmall for n = 0.
TournamentRange enumerate_all(std::size_t n);

/// Same ordering as enumerate_all, restricted to [first, last).
TournamentRange enumerate_range(std::size_t n, std::uint64_t first, std::uint64_t last);

} // namespace tourney
