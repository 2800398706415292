#include "tourney/oracle/harness.hpp"

#include "tourney/analysis.hpp"
#include "tourney/chain.hpp"
#include "tourney/error.hpp"
#include "tourney/format.hpp"
#include "tourney/oracle/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <thread>
#include <vector>

namespace tourney::oracle {

namespace {

// Builds and verifies one chain; returns the failure, if any.
std::optional<Counterexample> check_pair(const Tournament& t, VertexId k, std::uint64_t index) {
  Counterexample fail{index, t, k, {}, std::nullopt};
  try {
    CycleChain chain = build_chain(t, k);
    const VerificationReport report = verify_chain(t, chain);
    if (report.passed)
      return std::nullopt;
    fail.reason = report.first_failure;
    fail.partial = std::move(chain);
  } catch (const std::exception& e) {
    fail.reason = e.what();
  }
  return fail;
}

struct RangeResult {
  std::uint64_t tournaments = 0, strong = 0, king_pairs = 0, failures = 0;
  std::optional<Counterexample> counterexample;
};

RangeResult run_range(const TournamentRange& range, std::atomic<std::uint64_t>& lowest_failure) {
  RangeResult r;
  for (auto it = range.begin(); it != range.end(); ++it) {
    if (it.index() > lowest_failure.load(std::memory_order_relaxed))
      break;
    const Tournament t = *it;
    ++r.tournaments;
    const bool strong = is_strong(t);
    if (strong != brute_is_strong(t)) {
      r.failures = 1;
      r.counterexample = Counterexample{it.index(), t, 0, "strong-connectivity check disagrees with closure", {}};
    } else if (strong) {
      ++r.strong;
      for (VertexId k : brute_kings(t)) {
        ++r.king_pairs;
        if (auto fail = check_pair(t, k, it.index())) {
          r.failures = 1;
          r.counterexample = std::move(fail);
          break;
        }
      }
    }
    if (r.counterexample) {
      std::uint64_t seen = lowest_failure.load();
      while (it.index() < seen && !lowest_failure.compare_exchange_weak(seen, it.index())) {
      }
      break;
    }
  }
  return r;
}

double percentile(std::vector<double> sorted, double q) {
  if (sorted.empty())
    return 0;
  const std::size_t rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(sorted.size())));
  return sorted[std::min(sorted.size() - 1, rank == 0 ? 0 : rank - 1)];
}

} // namespace

ExhaustiveSummary exhaustive_check(std::size_t n, std::size_t jobs) {
  if (n < 3 || n > 7)
    throw Error(Errc::OrderOutOfRange, "exhaustive check supports 3 <= n <= 7, got " + std::to_string(n));
  const auto slices = enumerate_all(n).split(std::max<std::size_t>(jobs, 1));
  std::vector<RangeResult> results(slices.size());
  std::atomic<std::uint64_t> lowest_failure{~std::uint64_t{0}};

  if (slices.size() == 1) {
    results[0] = run_range(slices[0], lowest_failure);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(slices.size());
    for (std::size_t i = 0; i < slices.size(); ++i)
      workers.emplace_back([&, i] { results[i] = run_range(slices[i], lowest_failure); });
    for (auto& w : workers)
      w.join();
  }

  ExhaustiveSummary s;
  s.n = n;
  for (auto& r : results) {
    s.tournaments += r.tournaments;
    s.strong += r.strong;
    s.king_pairs += r.king_pairs;
    s.failures += r.failures;
    if (r.counterexample && (!s.counterexample || r.counterexample->index < s.counterexample->index))
      s.counterexample = std::move(r.counterexample);
  }
  return s;
}

StressSummary random_stress(std::size_t n, std::size_t trials, std::uint64_t seed) {
  if (n < 3)
    throw Error(Errc::OrderOutOfRange, "stress needs n >= 3, got " + std::to_string(n));
  StressSummary s;
  s.n = n;
  s.trials = trials;
  s.seed = seed;
  std::vector<double> times;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const Tournament t = random_strong_tournament(n, seed + trial * 1000003ull);
    for (VertexId k : kings(t)) {
      ++s.king_pairs;
      Counterexample fail{trial, t, k, {}, std::nullopt};
      try {
        const auto start = std::chrono::steady_clock::now();
        CycleChain chain = build_chain(t, k);
        const auto stop = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::micro>(stop - start).count());
        const VerificationReport report = verify_chain(t, chain);
        if (report.passed)
          continue;
        fail.reason = report.first_failure;
        fail.partial = std::move(chain);
      } catch (const std::exception& e) {
        fail.reason = e.what();
      }
      ++s.failures;
      if (!s.counterexample)
        s.counterexample = std::move(fail);
    }
  }
  std::sort(times.begin(), times.end());
  s.p50_us = percentile(times, 0.50);
  s.p90_us = percentile(times, 0.90);
  s.p99_us = percentile(times, 0.99);
  s.max_us = times.empty() ? 0 : times.back();
  return s;
}

std::string to_text(const ExhaustiveSummary& s) {
  std::string out = "n=" + std::to_string(s.n) + "\n";
  out += "tournaments=" + std::to_string(s.tournaments) + "\n";
  out += "strong=" + std::to_string(s.strong) + "\n";
  out += "king_pairs=" + std::to_string(s.king_pairs) + "\n";
  out += "failures=" + std::to_string(s.failures) + "\n";
  if (s.counterexample)
    out += "counterexample_index=" + std::to_string(s.counterexample->index) +
           "\ncounterexample_king=" + std::to_string(s.counterexample->king) +
           "\ncounterexample_reason=" + s.counterexample->reason + "\n";
  return out;
}

std::string to_text(const StressSummary& s) {
  char timing[160];
  std::snprintf(timing, sizeof timing, "p50_us=%.1f\np90_us=%.1f\np99_us=%.1f\nmax_us=%.1f\n", s.p50_us, s.p90_us,
                s.p99_us, s.max_us);
  std::string out = "n=" + std::to_string(s.n) + "\ntrials=" + std::to_string(s.trials) +
                    "\nseed=" + std::to_string(s.seed) + "\nking_pairs=" + std::to_string(s.king_pairs) +
                    "\nfailures=" + std::to_string(s.failures) + "\n" + timing;
  if (s.counterexample)
    out += "counterexample_trial=" + std::to_string(s.counterexample->index) +
           "\ncounterexample_king=" + std::to_string(s.counterexample->king) +
           "\ncounterexample_reason=" + s.counterexample->reason + "\n";
  return out;
}

nlohmann::json to_json(const ExhaustiveSummary& s) {
  nlohmann::json j{{"n", s.n},
                   {"tournaments", s.tournaments},
                   {"strong", s.strong},
                   {"king_pairs", s.king_pairs},
                   {"failures", s.failures}};
  if (s.counterexample)
    j["counterexample"] = counterexample_json(*s.counterexample);
  return j;
}

nlohmann::json to_json(const StressSummary& s) {
  nlohmann::json j{{"n", s.n},         {"trials", s.trials}, {"seed", s.seed},     {"king_pairs", s.king_pairs},
                   {"failures", s.failures}, {"p50_us", s.p50_us}, {"p90_us", s.p90_us}, {"p99_us", s.p99_us},
                   {"max_us", s.max_us}};
  if (s.counterexample)
    j["counterexample"] = counterexample_json(*s.counterexample);
  return j;
}

nlohmann::json counterexample_json(const Counterexample& c) {
  nlohmann::json j;
  if (c.partial)
    j = tourney::to_json(Certificate{c.tournament, *c.partial});
  else
    j = {{"n", c.tournament.order()}, {"king", c.king}, {"tournament", tourney::to_json(c.tournament)}};
  j["reason"] = c.reason;
  return j;
}

} // namespace tourney::oracle
