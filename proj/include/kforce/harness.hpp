#pragma once

// Campaign driver behind the command-line tool: bound verification over a
// corpus, equality searches, single-graph computations and generation.

#include "kforce/bounds.hpp"
#include "kforce/errors.hpp"
#include "kforce/forcing.hpp"
#include "kforce/generators.hpp"
#include "kforce/graph.hpp"
#include "kforce/invariants.hpp"
#include "kforce/io.hpp"
#include "kforce/record.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace kforce {

using Json = nlohmann::ordered_json;

/// Stable process exit codes of the command-line tool.
enum ExitCode : int { kExitClean = 0, kExitViolation = 1, kExitParse = 2, kExitScope = 3 };

enum class InputFormat { graph6, edges };

/// graph6 files hold one graph per line; an edge-list file holds one graph.
inline std::vector<Graph> load_graphs(std::istream& in, InputFormat format) {
  if (format == InputFormat::graph6) return read_graph6_stream(in);
  return {parse_edge_list(in)};
}

inline std::vector<Graph> load_graphs_file(const std::string& path, InputFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_graphs(in, format);
}

// ---------------------------------------------------------------------------
// Ordered parallel map.

/// Runs task(i) for i in [0, count) on `jobs` workers, handing each result to
/// `sink` strictly in index order as soon as its prefix is complete.
template <typename Result, typename Task, typename Sink>
void ordered_parallel(std::size_t count, std::size_t jobs, Task&& task, Sink&& sink) {
  jobs = std::max<std::size_t>(1, std::min(jobs, std::max<std::size_t>(count, 1)));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) sink(i, task(i));
    return;
  }
  std::vector<std::optional<Result>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::condition_variable ready;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      std::optional<Result> r;
      std::exception_ptr err;
      try {
        r = task(i);
      } catch (...) {
        err = std::current_exception();
      }
      {
        std::lock_guard lock(mu);
        slots[i] = std::move(r);
        errors[i] = err;
        if (!slots[i]) slots[i].emplace();  // mark done; error rethrown below
      }
      ready.notify_all();
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < jobs; ++w) pool.emplace_back(worker);
  for (std::size_t i = 0; i < count; ++i) {
    Result r;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return slots[i].has_value(); });
      if (errors[i]) {
        next = count;
        lock.unlock();
        pool.clear();
        std::rethrow_exception(errors[i]);
      }
      r = std::move(*slots[i]);
      slots[i].reset();
    }
    sink(i, std::move(r));
  }
}

// ---------------------------------------------------------------------------
// verify

struct CampaignConfig {
  std::vector<std::size_t> ks;    // empty: 1..Delta for each graph
  std::vector<BoundId> bounds;    // empty: all
  std::size_t max_n = 10;         // exact-scope cap
  std::size_t jobs = 1;
  std::uint64_t seed = 1;
  bool report_skipped = true;     // graphs above max_n are listed, not fatal
};

struct VerifySummary {
  std::size_t graphs = 0;
  std::size_t skipped = 0;
  std::size_t checked = 0;        // applicable reports
  std::size_t satisfied = 0;
  std::size_t equality = 0;
  std::size_t not_applicable = 0;
  std::size_t not_established = 0;
  std::size_t violations = 0;
  std::vector<std::string> violating_graphs;  // graph6, in input order, deduplicated

  int exit_code() const { return violations > 0 ? kExitViolation : kExitClean; }
};

inline Json report_to_json(const BoundReport& r, const std::string& graph6) {
  auto opt = [](const std::optional<Rational>& q) -> Json { return q ? Json(to_string(*q)) : Json(nullptr); };
  Json j;
  j["graph"] = r.graph;
  j["graph6"] = graph6;
  j["k"] = r.k;
  j["bound"] = std::string(bound_name(r.id));
  j["status"] = std::string(status_name(r.status));
  if (r.applicable()) {
    j["quantity"] = r.quantity;
    j["exact"] = r.exact;
    j["lower"] = opt(r.lower);
    j["upper"] = opt(r.upper);
    j["slack"] = opt(r.slack);
    j["equality"] = r.equality;
  }
  return j;
}

inline std::string csv_header() { return "graph,graph6,n,m,max_degree,min_degree,F,gamma_c,alpha_1,equalities"; }

inline std::string csv_row(std::size_t index, const std::string& graph6, const InvariantRecord& rec,
                           const std::vector<BoundReport>& reports) {
  std::ostringstream os;
  os << index << ',' << graph6 << ',' << rec.n << ',' << rec.m << ',' << rec.degrees.max_degree << ','
     << rec.degrees.min_degree << ',';
  const std::size_t top = std::max<std::size_t>(rec.degrees.max_degree, 1);
  for (std::size_t k = 1; k <= top; ++k) os << (k > 1 ? ";" : "") << rec.forcing_number(k);
  os << ',';
  if (auto gamma = rec.connected_k_domination(1)) os << *gamma;
  os << ',' << rec.k_independence(1) << ',';
  bool first = true;
  for (const auto& r : reports) {
    if (!r.equality) continue;
    os << (first ? "" : ";") << r.k << ':' << bound_name(r.id);
    first = false;
  }
  return os.str();
}

struct GraphOutcome {
  std::string graph6;
  bool skipped = false;
  std::optional<InvariantRecord> record;
  std::vector<BoundReport> reports;
};

inline std::vector<std::size_t> ks_for(const Graph& g, const CampaignConfig& cfg) {
  if (!cfg.ks.empty()) return cfg.ks;
  std::vector<std::size_t> ks;
  for (std::size_t k = 1; k <= std::max<std::size_t>(g.max_degree(), 1); ++k) ks.push_back(k);
  return ks;
}

inline GraphOutcome verify_one(const Graph& g, std::size_t index, const CampaignConfig& cfg) {
  GraphOutcome out;
  out.graph6 = write_graph6(g);
  if (g.order() == 0 || g.order() > cfg.max_n) {
    out.skipped = true;
    return out;
  }
  const auto ks = ks_for(g, cfg);
  InvariantOptions opt;
  opt.max_k = std::max(*std::max_element(ks.begin(), ks.end()), std::max<std::size_t>(g.max_degree(), 1));
  out.record = compute_invariants(g, opt);
  out.reports = evaluate_bounds(*out.record, ks, cfg.bounds.empty() ? all_bounds() : cfg.bounds, index);
  return out;
}

/// Verifies every selected bound on every graph. JSON lines (and CSV rows)
/// are written in input order, then k, then bound id, whatever `jobs` is.
inline VerifySummary run_verify(const std::vector<Graph>& graphs, const CampaignConfig& cfg, std::ostream* jsonl,
                                std::ostream* csv) {
  if (!cfg.report_skipped)
    for (const auto& g : graphs)
      if (g.order() > cfg.max_n)
        throw ScopeError("graph with n=" + std::to_string(g.order()) + " exceeds max-n=" + std::to_string(cfg.max_n));
  VerifySummary sum;
  sum.graphs = graphs.size();
  if (csv) *csv << csv_header() << '\n';
  ordered_parallel<GraphOutcome>(
      graphs.size(), cfg.jobs, [&](std::size_t i) { return verify_one(graphs[i], i, cfg); },
      [&](std::size_t i, GraphOutcome out) {
        if (out.skipped) {
          ++sum.skipped;
          if (jsonl) {
            Json j;
            j["graph"] = i;
            j["graph6"] = out.graph6;
            j["status"] = "skipped";
            j["reason"] = "n exceeds max-n";
            *jsonl << j.dump() << '\n';
          }
          return;
        }
        bool violated = false;
        for (const auto& r : out.reports) {
          switch (r.status) {
            case BoundStatus::satisfied: ++sum.checked; ++sum.satisfied; break;
            case BoundStatus::violated: ++sum.checked; ++sum.violations; violated = true; break;
            case BoundStatus::not_applicable: ++sum.not_applicable; break;
            case BoundStatus::not_established: ++sum.not_established; break;
          }
          if (r.equality) ++sum.equality;
          if (jsonl) *jsonl << report_to_json(r, out.graph6).dump() << '\n';
        }
        if (violated) sum.violating_graphs.push_back(out.graph6);
        if (csv) *csv << csv_row(i, out.graph6, *out.record, out.reports) << '\n';
        if (jsonl) jsonl->flush();
      });
  return sum;
}

inline Json summary_to_json(const VerifySummary& s) {
  Json j;
  j["graphs"] = s.graphs;
  j["skipped"] = s.skipped;
  j["checked"] = s.checked;
  j["satisfied"] = s.satisfied;
  j["equality"] = s.equality;
  j["not_applicable"] = s.not_applicable;
  j["not_established"] = s.not_established;
  j["violations"] = s.violations;
  j["violating_graphs"] = s.violating_graphs;
  return j;
}

// ---------------------------------------------------------------------------
// Equality search

enum class EqualityTarget { cor3, conn_dom };

/// Shapes an equality achiever is classified into.
enum class Shape { complete, complete_bipartite_balanced, cycle, complete_bipartite, other };

inline std::string_view shape_name(Shape s) {
  switch (s) {
    case Shape::complete: return "K_{Delta+1}";
    case Shape::complete_bipartite_balanced: return "K_{Delta,Delta}";
    case Shape::cycle: return "C_n";
    case Shape::complete_bipartite: return "K_{p,q}";
    case Shape::other: return "OTHER";
  }
  return "?";
}

/// Part sizes when the graph is connected and bipartite.
inline std::optional<std::pair<std::size_t, std::size_t>> bipartition_sizes(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0 || !g.is_connected()) return std::nullopt;
  std::vector<int> side(n, -1);
  side[0] = 0;
  std::vector<Vertex> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    bool clash = false;
    for_each_member(g.neighbors(v), [&](Vertex w) {
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        queue.push_back(w);
      } else if (side[w] == side[v]) {
        clash = true;
      }
    });
    if (clash) return std::nullopt;
  }
  const auto a = static_cast<std::size_t>(std::count(side.begin(), side.end(), 0));
  return std::pair{a, n - a};
}

inline bool is_complete(const Graph& g) { return g.size() * 2 == g.order() * (g.order() - 1); }

inline bool is_complete_bipartite(const Graph& g, std::size_t min_part) {
  const auto parts = bipartition_sizes(g);
  return parts && std::min(parts->first, parts->second) >= min_part && g.size() == parts->first * parts->second;
}

inline Shape classify_cor3(const Graph& g) {
  const std::size_t delta = g.max_degree();
  if (g.order() == delta + 1 && is_complete(g)) return Shape::complete;
  if (g.order() == 2 * delta && g.is_regular() && is_complete_bipartite(g, 1)) return Shape::complete_bipartite_balanced;
  return Shape::other;
}

inline Shape classify_conn_dom(const Graph& g) {
  if (is_complete(g)) return Shape::complete;
  if (g.order() >= 3 && g.is_regular() && g.max_degree() == 2 && g.is_connected()) return Shape::cycle;
  if (is_complete_bipartite(g, 2)) return Shape::complete_bipartite;
  return Shape::other;
}

struct EqualityAchiever {
  std::size_t graph = 0;
  std::string graph6;
  std::size_t n = 0;
  std::size_t max_degree = 0;
  std::size_t forcing = 0;   // F_1
  std::size_t gamma_c = 0;
  Rational bound;
  Shape shape = Shape::other;
};

struct EqualitySearchResult {
  EqualityTarget target = EqualityTarget::cor3;
  std::size_t searched = 0;  // connected graphs examined
  std::size_t skipped = 0;   // disconnected or beyond max-n
  std::vector<EqualityAchiever> achievers;

  std::size_t others() const {
    return static_cast<std::size_t>(std::count_if(achievers.begin(), achievers.end(),
                                                   [](const auto& a) { return a.shape == Shape::other; }));
  }

  /// For COR3 the conjectured characterization either survives the range or not.
  std::string status() const {
    if (target == EqualityTarget::conn_dom) return others() ? "additional achievers found" : "only known families";
    return others() ? "counterexamples found" : "consistent with conjecture";
  }
};

inline std::optional<EqualityAchiever> check_equality(const Graph& g, std::size_t index, EqualityTarget target) {
  const BoundId id = target == EqualityTarget::cor3 ? BoundId::COR3 : BoundId::CONN_DOM;
  InvariantOptions opt;
  opt.max_k = 1;
  opt.hamiltonian_max_n = 0;
  const InvariantRecord rec = compute_invariants(g, opt);
  const BoundReport rep = evaluate_bound(id, 1, rec, index);
  if (!rep.applicable() || !rep.equality) return std::nullopt;
  EqualityAchiever a;
  a.graph = index;
  a.graph6 = write_graph6(g);
  a.n = rec.n;
  a.max_degree = rec.degrees.max_degree;
  a.forcing = rec.forcing_number(1);
  a.gamma_c = rec.connected_k_domination(1).value_or(0);
  a.bound = *rep.upper;
  a.shape = target == EqualityTarget::cor3 ? classify_cor3(g) : classify_conn_dom(g);
  return a;
}

inline EqualitySearchResult run_equality_search(const std::vector<Graph>& graphs, EqualityTarget target,
                                                std::size_t max_n = 10, std::size_t jobs = 1) {
  EqualitySearchResult res;
  res.target = target;
  struct Slot {
    bool searched = false;
    std::optional<EqualityAchiever> hit;
  };
  ordered_parallel<Slot>(
      graphs.size(), jobs,
      [&](std::size_t i) {
        const Graph& g = graphs[i];
        if (g.order() < 2 || g.order() > max_n || !g.is_connected()) return Slot{};
        return Slot{true, check_equality(g, i, target)};
      },
      [&](std::size_t, Slot s) {
        s.searched ? ++res.searched : ++res.skipped;
        if (s.hit) res.achievers.push_back(std::move(*s.hit));
      });
  return res;
}

inline Json equality_to_json(const EqualitySearchResult& r) {
  Json j;
  j["target"] = r.target == EqualityTarget::cor3 ? "COR3_EQUALITY" : "CONN_DOM_EQUALITY";
  j["searched"] = r.searched;
  j["skipped"] = r.skipped;
  j["status"] = r.status();
  j["others"] = r.others();
  Json list = Json::array();
  for (const auto& a : r.achievers) {
    Json e;
    e["graph"] = a.graph;
    e["graph6"] = a.graph6;
    e["n"] = a.n;
    e["max_degree"] = a.max_degree;
    e["F_1"] = a.forcing;
    e["gamma_c"] = a.gamma_c;
    e["bound"] = to_string(a.bound);
    e["class"] = std::string(shape_name(a.shape));
    list.push_back(std::move(e));
  }
  j["achievers"] = std::move(list);
  return j;
}

// ---------------------------------------------------------------------------
// compute

enum class Selector {
  forcing, greedy, connected_domination, independence, path_cover, max_leaf,
  connectivity, hamiltonian, k1r_free, cycle_tree, connected_complement, record,
};

inline std::optional<Selector> selector_from_name(std::string_view s) {
  static constexpr std::pair<std::string_view, Selector> table[] = {
      {"forcing", Selector::forcing},
      {"greedy", Selector::greedy},
      {"gamma_c", Selector::connected_domination},
      {"alpha", Selector::independence},
      {"path_cover", Selector::path_cover},
      {"max_leaf", Selector::max_leaf},
      {"connectivity", Selector::connectivity},
      {"hamiltonian", Selector::hamiltonian},
      {"k1r_free", Selector::k1r_free},
      {"cycle_tree", Selector::cycle_tree},
      {"connected_complement", Selector::connected_complement},
      {"all", Selector::record},
  };
  for (auto [name, sel] : table)
    if (name == s) return sel;
  return std::nullopt;
}

inline Json set_json(const VertexSet& s) { return Json(s.members()); }

inline Json record_to_json(const InvariantRecord& r) {
  Json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["max_degree"] = r.degrees.max_degree;
  j["min_degree"] = r.degrees.min_degree;
  j["leaves"] = r.degrees.leaves;
  j["components"] = r.component_count;
  j["connected"] = r.connected;
  j["tree"] = r.tree;
  j["F"] = r.forcing;
  Json gamma = Json::array();
  for (const auto& v : r.connected_domination) gamma.push_back(v ? Json(*v) : Json(nullptr));
  j["gamma_kc"] = std::move(gamma);
  j["alpha_k"] = r.independence;
  Json conn = Json::array();
  for (bool b : r.k_connected) conn.push_back(b);
  j["k_connected"] = std::move(conn);
  j["hamiltonian"] = r.hamiltonian ? Json(r.hamiltonian->hamiltonian) : Json(nullptr);
  if (r.hamiltonian && r.hamiltonian->hamiltonian) j["chords"] = r.hamiltonian->chords;
  j["cycle_tree"] = r.cycle_tree.is_cycle_tree;
  if (r.cycle_tree.is_cycle_tree) j["cycles"] = r.cycle_tree.cycles;
  j["path_cover"] = r.path_cover ? Json(*r.path_cover) : Json(nullptr);
  j["max_leaf"] = r.max_leaf ? Json(*r.max_leaf) : Json(nullptr);
  j["free_star_r"] = r.free_star;
  return j;
}

/// One exact computation on one graph. Throws ScopeError beyond `max_n`.
inline Json compute_one(const Graph& g, Selector sel, std::size_t k, std::size_t max_n, std::size_t r = 3) {
  if (g.order() > max_n)
    throw ScopeError("n=" + std::to_string(g.order()) + " exceeds max-n=" + std::to_string(max_n));
  Json j;
  j["graph6"] = write_graph6(g);
  j["k"] = k;
  switch (sel) {
    case Selector::forcing: {
      auto res = k_forcing_number(g, k);
      j["invariant"] = "F_k";
      j["value"] = res.value;
      j["witness"] = set_json(res.witness);
      break;
    }
    case Selector::greedy: {
      auto [value, witness] = greedy_k_forcing_upper(g, k);
      j["invariant"] = "greedy_F_k_upper";
      j["value"] = value;
      j["witness"] = set_json(witness);
      break;
    }
    case Selector::connected_domination: {
      j["invariant"] = "gamma_kc";
      if (auto d = connected_k_domination(g, k)) {
        j["value"] = d->value;
        j["witness"] = set_json(d->witness);
      } else {
        j["value"] = nullptr;
      }
      break;
    }
    case Selector::independence: {
      auto res = k_independence_number(g, k);
      j["invariant"] = "alpha_k";
      j["value"] = res.value;
      j["witness"] = set_json(res.witness);
      break;
    }
    case Selector::path_cover: {
      auto res = path_cover_number(g);
      j["invariant"] = "path_cover";
      j["value"] = res.value;
      j["witness"] = res.paths;
      break;
    }
    case Selector::max_leaf:
      j["invariant"] = "max_leaf";
      j["value"] = max_leaf_spanning_tree(g);
      break;
    case Selector::connectivity:
      j["invariant"] = "k_connected";
      j["value"] = vertex_k_connected(g, k);
      break;
    case Selector::hamiltonian: {
      j["invariant"] = "hamiltonian";
      auto cyc = hamiltonian_cycle(g);
      j["value"] = cyc.has_value();
      if (cyc) {
        j["witness"] = *cyc;
        j["chords"] = g.size() - g.order();
      }
      break;
    }
    case Selector::k1r_free:
      j["invariant"] = "k1r_free";
      j["r"] = r;
      j["value"] = is_k1r_free(g, r);
      break;
    case Selector::cycle_tree: {
      auto res = is_cycle_tree(g);
      j["invariant"] = "cycle_tree";
      j["value"] = res.is_cycle_tree;
      if (res.is_cycle_tree) j["cycles"] = res.cycles;
      break;
    }
    case Selector::connected_complement: {
      auto res = min_forcing_connected_complement(g, k);
      j["invariant"] = "forcing_with_connected_complement";
      j["value"] = res.value;
      j["witness"] = set_json(res.set);
      break;
    }
    case Selector::record: {
      InvariantOptions opt;
      opt.max_k = std::max(k, std::max<std::size_t>(g.max_degree(), 1));
      j["invariant"] = "all";
      j["value"] = record_to_json(compute_invariants(g, opt));
      break;
    }
  }
  return j;
}

// ---------------------------------------------------------------------------
// gen

/// Graphs of one family for each parameter sweep argument, in order.
inline std::vector<Graph> generate_sweep(Family family, const std::vector<std::string>& sweeps) {
  std::vector<Graph> out;
  for (const auto& arg : sweeps)
    for (auto& params : expand_parameter_sweep(arg)) out.push_back(generate(FamilySpec{family, std::move(params)}));
  return out;
}

/// Uniform edge probability, redrawn until connected.
inline Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  while (true) {
    std::vector<Edge> es;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) es.emplace_back(u, v);
    Graph g(n, es);
    if (g.is_connected()) return g;
  }
}

inline std::vector<Graph> random_connected_graphs(std::size_t count, std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_connected_graph(n, p, rng));
  return out;
}

}  // namespace kforce
