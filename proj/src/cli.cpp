#include "tourney/cli.hpp"

#include "tourney/analysis.hpp"
#include "tourney/chain.hpp"
#include "tourney/error.hpp"
#include "tourney/format.hpp"
#include "tourney/oracle/harness.hpp"
#include "tourney/oracle/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace tourney::cli {

namespace {

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

// Raised for unreadable files; maps to the usage/parse exit status.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file)
    throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << content))
    throw InputError("cannot write '" + path + "'");
}

std::string join(const std::vector<VertexId>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i)
    out += (i ? " " : "") + std::to_string(vs[i]);
  return out;
}

std::string chain_summary(const Tournament& t, const CycleChain& c) {
  std::string out = "n=" + std::to_string(t.order()) + " king=" + std::to_string(c.king) + "\n";
  out += "A: " + join(c.context.out_set) + "\n";
  out += "B: " + join(c.context.in_set) + "\n";
  out += "reid blocks:";
  for (const auto& b : c.reid.blocks)
    out += " {" + join(b) + "}";
  out += "\nexit arc: " + std::to_string(c.exit.a_star) + " -> " + std::to_string(c.exit.b_star) + "\n";
  out += "spine: " + join(c.spine.vertices) + "\n";
  for (std::size_t j = 0; j < c.cycles.size(); ++j) {
    out += "C" + std::to_string(j + 3) + ": " + join(c.cycles[j].vertices);
    if (j > 0) {
      const auto& r = c.insertions[j - 1];
      out += "  (inserted " + std::to_string(r.z) + " between " + std::to_string(r.x) + " and " +
             std::to_string(r.y) + ")";
    }
    out += "\n";
  }
  return out;
}

void dump_counterexample(const oracle::Counterexample& c, std::ostream& err) {
  write_file("counterexample.txt", to_text(c.tournament));
  write_file("counterexample.json", oracle::counterexample_json(c).dump(2) + "\n");
  err << "counterexample written to counterexample.txt and counterexample.json\n";
}

} // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chains of cycles through a king of a strong tournament"};
  app.require_subcommand(1);

  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t jobs = 1;
  bool strong = false;
  bool json_output = false;
  std::string input, king_arg = "auto", certificate_path, dot_path;

  auto* generate = app.add_subcommand("generate", "Print a random tournament in text format");
  generate->add_option("--n", n, "Order")->required()->check(CLI::PositiveNumber);
  generate->add_option("--seed", seed, "Generator seed")->required();
  generate->add_flag("--strong", strong, "Reject until strongly connected");

  auto* chain = app.add_subcommand("chain", "Build the chain of cycles for a king");
  chain->add_option("--input", input, "Tournament text file, or - for standard input")->required();
  chain->add_option("--king", king_arg, "King vertex, or 'auto' for the lowest-index king");
  chain->add_option("--certificate", certificate_path, "Write the certificate JSON here");
  chain->add_option("--dot", dot_path, "Write a DOT drawing with the spanning cycle highlighted");

  auto* verify = app.add_subcommand("verify", "Check a certificate with the brute-force oracle");
  verify->add_option("--certificate", certificate_path, "Certificate JSON")->required();

  auto* exhaustive = app.add_subcommand("exhaustive", "Check every labeled tournament of order n");
  exhaustive->add_option("--n", n, "Order, 3..7")->required();
  exhaustive->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  exhaustive->add_flag("--json", json_output, "Print the summary as JSON");

  auto* stress = app.add_subcommand("stress", "Random strong tournaments, every king");
  stress->add_option("--n", n, "Order")->required();
  stress->add_option("--trials", trials, "Number of tournaments")->required();
  stress->add_option("--seed", seed, "Base seed")->required();
  stress->add_flag("--json", json_output, "Print the summary as JSON");

  auto* list_kings = app.add_subcommand("kings", "List all kings of a tournament");
  list_kings->add_option("--input", input, "Tournament text file, or - for standard input")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsageError;
  }

  try {
    if (*generate) {
      out << to_text(strong ? random_strong_tournament(n, seed) : random_tournament(n, seed));
      return 0;
    }

    if (*chain) {
      const Tournament t = tournament_from_text(read_input(input, in));
      VertexId k = 0;
      if (king_arg == "auto") {
        k = kings(t).front();
      } else {
        std::size_t used = 0;
        try {
          k = std::stoul(king_arg, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used == 0 || used != king_arg.size() || king_arg.front() == '-') {
          err << "error: --king expects a vertex index or 'auto', got '" << king_arg << "'\n";
          return kUsageError;
        }
      }
      const CycleChain c = build_chain(t, k);
      if (!certificate_path.empty())
        write_file(certificate_path, certificate_to_string(Certificate{t, c}));
      if (!dot_path.empty()) {
        const auto& last = c.cycles.back().vertices;
        std::vector<std::pair<VertexId, VertexId>> arcs;
        for (std::size_t i = 0; i < last.size(); ++i)
          arcs.emplace_back(last[i], last[(i + 1) % last.size()]);
        write_file(dot_path, to_dot(t, arcs));
      }
      out << chain_summary(t, c);
      return 0;
    }

    if (*verify) {
      const Certificate cert = certificate_from_string(read_input(certificate_path, in));
      const auto report = oracle::verify_chain(cert.tournament, cert.chain);
      out << oracle::format_report(report);
      return report.passed ? 0 : kDomainError;
    }

    if (*exhaustive) {
      const auto summary = oracle::exhaustive_check(n, jobs);
      out << (json_output ? oracle::to_json(summary).dump() + "\n" : oracle::to_text(summary));
      if (summary.counterexample) {
        dump_counterexample(*summary.counterexample, err);
        return kDomainError;
      }
      return 0;
    }

    if (*stress) {
      const auto summary = oracle::random_stress(n, trials, seed);
      out << (json_output ? oracle::to_json(summary).dump() + "\n" : oracle::to_text(summary));
      if (summary.counterexample) {
        dump_counterexample(*summary.counterexample, err);
        return kDomainError;
      }
      return 0;
    }

    if (*list_kings) {
      out << join(kings(tournament_from_text(read_input(input, in)))) << "\n";
      return 0;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::ParseError ? kUsageError : kDomainError;
  }
  return kUsageError;
}

} // namespace tourney::cli
