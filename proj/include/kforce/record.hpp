#pragma once

#include "kforce/connectivity.hpp"
#include "kforce/errors.hpp"
#include "kforce/forcing.hpp"
#include "kforce/graph.hpp"
#include "kforce/invariants.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace kforce {

/// A bound needed an invariant the record does not carry.
class MissingInvariant : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

struct HamiltonianInfo {
  bool hamiltonian = false;
  std::size_t chords = 0;  // m - n when hamiltonian
  std::vector<Vertex> cycle;
};

/// Exact invariant values of one graph. Per-k tables cover k = 1..K with
/// K = max(Delta, 1); entries are indexed by k - 1.
struct InvariantRecord {
  std::size_t n = 0;
  std::size_t m = 0;
  DegreeProfile degrees;
  std::size_t component_count = 0;
  bool connected = false;
  bool tree = false;

  std::vector<std::size_t> forcing;
  std::vector<VertexSet> forcing_witness;
  std::vector<std::optional<std::size_t>> connected_domination;  // none when disconnected
  std::vector<std::size_t> independence;
  std::vector<bool> k_connected;

  std::optional<HamiltonianInfo> hamiltonian;  // none: search not run
  CycleTreeResult cycle_tree;
  std::optional<std::size_t> path_cover;       // trees only
  std::optional<std::size_t> max_leaf;         // connected, 3 <= n <= 10
  std::size_t free_star = 3;                   // smallest r >= 3 with K_{1,r}-free

  std::size_t table_size() const { return forcing.size(); }

  /// F_j for any j >= 1. For j >= Delta every colored vertex qualifies as a
  /// forcer whenever it has an uncolored neighbor, so F_j = F_Delta.
  std::size_t forcing_number(std::size_t j) const {
    if (forcing.empty()) throw MissingInvariant("record has no k-forcing numbers");
    if (j == 0) throw PreconditionError("k must be a positive integer");
    return forcing[std::min(j, forcing.size()) - 1];
  }

  std::optional<std::size_t> connected_k_domination(std::size_t k) const {
    return at(connected_domination, k, "connected k-domination");
  }
  std::size_t k_independence(std::size_t k) const { return at(independence, k, "k-independence"); }
  bool is_k_connected(std::size_t k) const { return at(k_connected, k, "k-connectivity"); }

 private:
  template <typename T>
  static T at(const std::vector<T>& table, std::size_t k, const char* what) {
    if (k == 0 || k > table.size())
      throw MissingInvariant(std::string(what) + " not computed for k=" + std::to_string(k));
    return table[k - 1];
  }
};

struct InvariantOptions {
  std::size_t max_k = 0;                 // 0: up to max(Delta, 1)
  std::size_t hamiltonian_max_n = 16;    // larger graphs: Hamiltonicity not established
};

inline InvariantRecord compute_invariants(const Graph& g, const InvariantOptions& opt = {}) {
  if (g.order() == 0) throw PreconditionError("invariants of the empty graph");
  InvariantRecord r;
  r.n = g.order();
  r.m = g.size();
  r.degrees = degree_profile(g);
  r.component_count = components(g).size();
  r.connected = r.component_count == 1;
  r.tree = is_tree(g);

  const std::size_t table = opt.max_k ? opt.max_k : std::max<std::size_t>(r.degrees.max_degree, 1);
  for (std::size_t k = 1; k <= table; ++k) {
    auto f = k_forcing_number(g, k);
    r.forcing.push_back(f.value);
    r.forcing_witness.push_back(std::move(f.witness));
    if (auto d = connected_k_domination(g, k))
      r.connected_domination.push_back(d->value);
    else
      r.connected_domination.push_back(std::nullopt);
    r.independence.push_back(k_independence_number(g, k).value);
    r.k_connected.push_back(vertex_k_connected(g, k));
  }

  if (r.n >= 3 && r.n <= opt.hamiltonian_max_n) {
    HamiltonianInfo h;
    if (auto cyc = hamiltonian_cycle(g)) {
      h.hamiltonian = true;
      h.chords = r.m - r.n;
      h.cycle = std::move(*cyc);
    }
    r.hamiltonian = std::move(h);
  }
  r.cycle_tree = is_cycle_tree(g);
  if (r.tree) r.path_cover = path_cover_number(g).value;
  if (r.connected && r.n >= 3 && r.n <= kMaxLeafMaxN) r.max_leaf = max_leaf_spanning_tree(g);
  r.free_star = min_free_star(g);
  return r;
}

}  // namespace kforce
