// kforce: command-line front end for k-forcing computations and campaigns.

#include "kforce/harness.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int kExitUsage = 4;

kforce::InputFormat parse_format(const std::string& name, const std::string& path) {
  if (name == "g6" || name == "graph6") return kforce::InputFormat::graph6;
  if (name == "edges") return kforce::InputFormat::edges;
  // auto
  if (path.ends_with(".edges") || path.ends_with(".txt")) return kforce::InputFormat::edges;
  return kforce::InputFormat::graph6;
}

std::vector<kforce::Graph> read_input(const std::string& path, const std::string& format) {
  const auto fmt = parse_format(format, path);
  if (path == "-") return kforce::load_graphs(std::cin, fmt);
  return kforce::load_graphs_file(path, fmt);
}

/// Opens `path` for writing, or returns stdout for "" / "-".
std::ostream& open_out(const std::string& path, std::unique_ptr<std::ofstream>& holder) {
  if (path.empty() || path == "-") return std::cout;
  holder = std::make_unique<std::ofstream>(path);
  if (!*holder) throw std::runtime_error("cannot write " + path);
  return *holder;
}

std::size_t default_jobs() {
  if (const char* env = std::getenv("KFORCE_JOBS")) {
    try {
      return std::max<std::size_t>(1, std::stoul(env));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact k-forcing numbers, companion invariants and bound verification"};
  app.set_config("--config", "", "Read options from a TOML/INI file; command-line flags take precedence");
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "auto";
  std::size_t max_n = 12;
  std::size_t jobs = default_jobs();
  std::uint64_t seed = 1;

  // compute
  auto* compute = app.add_subcommand("compute", "Compute one invariant exactly for each input graph");
  std::string invariant = "forcing";
  std::size_t compute_k = 1;
  std::size_t star_r = 3;
  compute->add_option("--input", input, "Graph file ('-' for stdin)");
  compute->add_option("--format", format, "g6 | edges | auto")->check(CLI::IsMember({"g6", "graph6", "edges", "auto"}));
  compute->add_option("--invariant", invariant,
                      "forcing | greedy | gamma_c | alpha | path_cover | max_leaf | connectivity | "
                      "hamiltonian | k1r_free | cycle_tree | connected_complement | all");
  compute->add_option("--k", compute_k, "k (positive)")->check(CLI::PositiveNumber);
  compute->add_option("--r", star_r, "r for k1r_free (>= 3)");
  compute->add_option("--max-n", max_n, "Exact-scope cap on n");

  // verify
  auto* verify = app.add_subcommand("verify", "Check every bound against exact values over a corpus");
  std::vector<std::size_t> ks;
  std::vector<std::string> bound_names;
  std::string out_jsonl;
  std::string out_csv;
  bool strict_scope = false;
  verify->add_option("--input", input, "Graph file ('-' for stdin)");
  verify->add_option("--format", format, "g6 | edges | auto")->check(CLI::IsMember({"g6", "graph6", "edges", "auto"}));
  verify->add_option("--k", ks, "k values (default 1..Delta per graph)")->delimiter(',');
  verify->add_option("--bounds", bound_names, "Bound ids (default all)")->delimiter(',');
  verify->add_option("--max-n", max_n, "Exact-scope cap on n; larger graphs are reported as skipped");
  verify->add_flag("--strict-scope", strict_scope, "Fail with exit 3 instead of skipping graphs above --max-n");
  verify->add_option("--jobs", jobs, "Worker threads (default $KFORCE_JOBS or 1)")->check(CLI::PositiveNumber);
  verify->add_option("--out-jsonl", out_jsonl, "JSON-lines report path (default stdout)");
  verify->add_option("--out-csv", out_csv, "Per-graph CSV summary path");
  verify->add_option("--seed", seed, "Seed recorded in the summary");

  // search
  auto* search = app.add_subcommand("search", "List equality cases of COR3 or CONN_DOM over a corpus");
  std::string target = "cor3";
  std::string out_json;
  search->add_option("--input", input, "Graph file ('-' for stdin)");
  search->add_option("--format", format, "g6 | edges | auto")->check(CLI::IsMember({"g6", "graph6", "edges", "auto"}));
  search->add_option("--target", target, "cor3 | conn_dom")->check(CLI::IsMember({"cor3", "conn_dom"}));
  search->add_option("--max-n", max_n, "Exact-scope cap on n");
  search->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->add_option("--out", out_json, "Result JSON path (default stdout)");

  // gen
  auto* gen = app.add_subcommand("gen", "Write graph6 lines for a family sweep");
  std::string family;
  std::vector<std::string> sweeps;
  std::string gen_out;
  std::size_t count = 100;
  double edge_p = 0.5;
  gen->add_option("family", family, "Family name, or random_connected")->required();
  gen->add_option("sweeps", sweeps, "Parameter tuples such as 3..6 or 3,4 (one graph per tuple)")->required();
  gen->add_option("--out", gen_out, "Output path (default stdout)");
  gen->add_option("--count", count, "random_connected: number of graphs");
  gen->add_option("--p", edge_p, "random_connected: edge probability")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", seed, "random_connected: RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*compute) {
      const auto sel = kforce::selector_from_name(invariant);
      if (!sel) {
        std::cerr << "unknown invariant: " << invariant << '\n';
        return kExitUsage;
      }
      for (const auto& g : read_input(input, format))
        std::cout << kforce::compute_one(g, *sel, compute_k, max_n, star_r).dump() << '\n';
      return kforce::kExitClean;
    }

    if (*verify) {
      kforce::CampaignConfig cfg;
      cfg.ks = ks;
      for (const auto& name : bound_names) {
        auto id = kforce::bound_from_name(name);
        if (!id) {
          std::cerr << "unknown bound: " << name << '\n';
          return kExitUsage;
        }
        cfg.bounds.push_back(*id);
      }
      cfg.max_n = max_n;
      cfg.jobs = jobs;
      cfg.seed = seed;
      cfg.report_skipped = !strict_scope;
      const auto graphs = read_input(input, format);
      std::unique_ptr<std::ofstream> jh;
      std::unique_ptr<std::ofstream> ch;
      std::ostream& jsonl = open_out(out_jsonl, jh);
      std::ostream* csv = out_csv.empty() ? nullptr : &open_out(out_csv, ch);
      const auto summary = kforce::run_verify(graphs, cfg, &jsonl, csv);
      auto j = kforce::summary_to_json(summary);
      j["seed"] = seed;
      std::cerr << j.dump() << '\n';
      for (const auto& g6 : summary.violating_graphs) std::cerr << "VIOLATION " << g6 << '\n';
      return summary.exit_code();
    }

    if (*search) {
      const auto graphs = read_input(input, format);
      const auto tgt = target == "cor3" ? kforce::EqualityTarget::cor3 : kforce::EqualityTarget::conn_dom;
      const auto result = kforce::run_equality_search(graphs, tgt, max_n, jobs);
      std::unique_ptr<std::ofstream> holder;
      open_out(out_json, holder) << kforce::equality_to_json(result).dump(2) << '\n';
      for (const auto& a : result.achievers)
        if (a.shape == kforce::Shape::other) std::cerr << "OTHER " << a.graph6 << " (n=" << a.n << ")\n";
      std::cerr << result.status() << ": " << result.achievers.size() << " achievers, " << result.others()
                << " OTHER\n";
      return kforce::kExitClean;
    }

    if (*gen) {
      std::vector<kforce::Graph> graphs;
      if (family == "random_connected") {
        for (const auto& arg : sweeps)
          for (const auto& params : kforce::expand_parameter_sweep(arg)) {
            if (params.size() != 1) throw kforce::PreconditionError("random_connected takes n only");
            auto batch = kforce::random_connected_graphs(count, params[0], edge_p, seed);
            graphs.insert(graphs.end(), batch.begin(), batch.end());
          }
      } else {
        const auto fam = kforce::family_from_name(family);
        if (!fam) {
          std::cerr << "unknown family: " << family << '\n';
          return kExitUsage;
        }
        graphs = kforce::generate_sweep(*fam, sweeps);
      }
      std::unique_ptr<std::ofstream> holder;
      std::ostream& out = open_out(gen_out, holder);
      for (const auto& g : graphs) out << kforce::write_graph6(g) << '\n';
      return kforce::kExitClean;
    }
  } catch (const kforce::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kforce::kExitParse;
  } catch (const kforce::ScopeError& e) {
    std::cerr << "scope exceeded: " << e.what() << '\n';
    return kforce::kExitScope;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
