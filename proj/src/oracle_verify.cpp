#include "tourney/oracle/verify.hpp"

#include "tourney/error.hpp"

#include <algorithm>
#include <string>

namespace tourney::oracle {

bool brute_is_king_of_induced(const Tournament& t, VertexId k, std::span<const VertexId> subset) {
  if (std::find(subset.begin(), subset.end(), k) == subset.end())
    throw Error(Errc::KingNotInSubset, "vertex " + std::to_string(k) + " is not in the subset");
  for (VertexId v : subset) {
    if (v == k || t.beats(k, v))
      continue;
    bool two_step = false;
    for (VertexId w : subset) {
      if (t.beats(k, w) && t.beats(w, v)) {
        two_step = true;
        break;
      }
    }
    if (!two_step)
      return false;
  }
  return true;
}

VertexSet brute_kings(const Tournament& t) {
  VertexSet all(t.order());
  for (VertexId v = 0; v < t.order(); ++v)
    all[v] = v;
  VertexSet out;
  for (VertexId v = 0; v < t.order(); ++v)
    if (brute_is_king_of_induced(t, v, all))
      out.push_back(v);
  return out;
}

bool brute_is_strong(const Tournament& t) {
  const std::size_t n = t.order();
  std::vector<char> reach(n * n, 0);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v)
      reach[u * n + v] = (u == v) || t.beats(u, v);
  for (VertexId w = 0; w < n; ++w)
    for (VertexId u = 0; u < n; ++u)
      if (reach[u * n + w])
        for (VertexId v = 0; v < n; ++v)
          reach[u * n + v] = reach[u * n + v] || reach[w * n + v];
  return std::all_of(reach.begin(), reach.end(), [](char r) { return r != 0; });
}

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(Errc::MalformedCertificate, what); }

std::string arc(VertexId u, VertexId v) { return std::to_string(u) + "->" + std::to_string(v); }

void check_shape(const Tournament& t, const CycleChain& chain) {
  const std::size_t n = t.order();
  if (n < 3)
    malformed("tournament of order " + std::to_string(n) + " has no chain");
  if (chain.king >= n)
    malformed("king " + std::to_string(chain.king) + " out of range");
  if (chain.cycles.size() != n - 2)
    malformed("expected " + std::to_string(n - 2) + " cycles, found " + std::to_string(chain.cycles.size()));
  if (chain.insertions.size() != chain.cycles.size() - 1)
    malformed("expected " + std::to_string(chain.cycles.size() - 1) + " insertion records, found " +
              std::to_string(chain.insertions.size()));
  for (const auto& c : chain.cycles)
    for (VertexId v : c.vertices)
      if (v >= n)
        malformed("cycle vertex " + std::to_string(v) + " out of range");
  for (const auto& r : chain.insertions)
    if (r.x >= n || r.y >= n || r.z >= n)
      malformed("insertion record vertex out of range");
}

} // namespace

VerificationReport verify_chain(const Tournament& t, const CycleChain& chain) {
  check_shape(t, chain);
  const std::size_t n = t.order();
  VerificationReport report;
  auto fail = [&](const std::string& why) {
    if (report.first_failure.empty())
      report.first_failure = why;
  };

  for (std::size_t j = 0; j < chain.cycles.size(); ++j) {
    const auto& c = chain.cycles[j].vertices;
    const std::string name = "C" + std::to_string(j + 3);
    CycleCheck check;
    check.expected_length = j + 3;

    check.is_cycle = !c.empty();
    for (std::size_t i = 0; i < c.size() && check.is_cycle; ++i) {
      const VertexId u = c[i], v = c[(i + 1) % c.size()];
      if (!t.beats(u, v)) {
        check.is_cycle = false;
        fail(name + " (a): arc " + arc(u, v) + " is not in the tournament");
      }
    }
    if (c.empty())
      fail(name + " (a): empty cycle");

    std::vector<char> present(n, 0);
    std::size_t distinct = 0;
    for (VertexId v : c)
      if (!present[v]++)
        ++distinct;
    check.correct_length = c.size() == check.expected_length && distinct == c.size();
    if (!check.correct_length)
      fail(name + " (b): " + std::to_string(c.size()) + " entries, " + std::to_string(distinct) +
           " distinct, expected " + std::to_string(check.expected_length));

    check.contains_king = present[chain.king] != 0;
    if (!check.contains_king)
      fail(name + " (c): king " + std::to_string(chain.king) + " is not on the cycle");

    if (check.contains_king) {
      check.king_of_induced = brute_is_king_of_induced(t, chain.king, c);
      if (!check.king_of_induced)
        fail(name + " (d): king " + std::to_string(chain.king) + " is not a king of the induced subtournament");
    } else {
      fail(name + " (d): king not in the vertex set");
    }
    report.cycles.push_back(check);
  }

  for (std::size_t j = 0; j < chain.insertions.size(); ++j) {
    const auto& before = chain.cycles[j].vertices;
    const auto& after = chain.cycles[j + 1].vertices;
    const InsertionRecord& r = chain.insertions[j];
    const std::string name = "step C" + std::to_string(j + 3) + "->C" + std::to_string(j + 4);

    bool consecutive = false;
    for (std::size_t i = 0; i < before.size(); ++i)
      if (before[i] == r.x && before[(i + 1) % before.size()] == r.y)
        consecutive = true;
    const bool arcs = t.beats(r.x, r.z) && t.beats(r.z, r.y);
    const bool fresh = std::find(before.begin(), before.end(), r.z) == before.end();

    std::vector<char> expected(n, 0), actual(n, 0);
    for (VertexId v : before)
      expected[v] = 1;
    expected[r.z] = 1;
    for (VertexId v : after)
      actual[v] = 1;
    const bool sets_match = expected == actual;

    StepCheck step{consecutive && arcs && fresh && sets_match};
    if (!consecutive)
      fail(name + " (e): " + arc(r.x, r.y) + " is not an arc of the previous cycle");
    if (!arcs)
      fail(name + " (e): " + arc(r.x, r.z) + " or " + arc(r.z, r.y) + " missing");
    if (!fresh)
      fail(name + " (e): inserted vertex " + std::to_string(r.z) + " was already on the cycle");
    if (!sets_match)
      fail(name + " (e): vertex sets do not differ by exactly the inserted vertex");
    report.steps.push_back(step);
  }

  report.passed =
      std::all_of(report.cycles.begin(), report.cycles.end(), [](const CycleCheck& c) { return c.passed(); }) &&
      std::all_of(report.steps.begin(), report.steps.end(), [](const StepCheck& s) { return s.valid_insertion; });
  return report;
}

std::string format_report(const VerificationReport& report) {
  auto mark = [](bool ok) { return ok ? "pass" : "FAIL"; };
  std::string out;
  for (const auto& c : report.cycles) {
    out += "C" + std::to_string(c.expected_length) + ": (a) " + mark(c.is_cycle) + "  (b) " + mark(c.correct_length) +
           "  (c) " + mark(c.contains_king) + "  (d) " + mark(c.king_of_induced) + "\n";
  }
  for (std::size_t j = 0; j < report.steps.size(); ++j)
    out += "C" + std::to_string(j + 3) + "->C" + std::to_string(j + 4) + ": (e) " +
           mark(report.steps[j].valid_insertion) + "\n";
  out += std::string("result: ") + (report.passed ? "PASS" : "FAIL") + "\n";
  if (!report.passed)
    out += "first failure: " + report.first_failure + "\n";
  return out;
}

} // namespace tourney::oracle
