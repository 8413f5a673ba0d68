#pragma once

// The k-forcing process. A colored vertex with between 1 and k non-colored
// neighbors colors all of them; rounds are synchronous, and the fixpoint does
// not depend on the schedule.

#include "kforce/connectivity.hpp"
#include "kforce/errors.hpp"
#include "kforce/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kforce {

struct Force {
  Vertex forcer = 0;
  VertexSet forced;
};

struct ForcingTrace {
  VertexSet initial;
  std::vector<std::vector<Force>> rounds;
  VertexSet final_set;
};

namespace detail {

inline void require_positive_k(std::size_t k) {
  if (k == 0) throw PreconditionError("k must be a positive integer");
}

inline void require_same_universe(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw PreconditionError("vertex set universe " + std::to_string(s.universe()) +
                            " does not match graph order " + std::to_string(g.order()));
}

/// Forcers eligible at the start of a round, with what each would color.
inline std::vector<Force> eligible_forces(const Graph& g, const VertexSet& colored, std::size_t k) {
  std::vector<Force> out;
  for_each_member(colored, [&](Vertex v) {
    const std::size_t open = g.neighbors(v).count_outside(colored);
    if (open >= 1 && open <= k) out.push_back({v, g.neighbors(v) - colored});
  });
  return out;
}

}  // namespace detail

inline ForcingTrace closure(const Graph& g, const VertexSet& initial, std::size_t k) {
  detail::require_positive_k(k);
  detail::require_same_universe(g, initial);
  ForcingTrace trace{initial, {}, initial};
  while (true) {
    auto round = detail::eligible_forces(g, trace.final_set, k);
    if (round.empty()) break;
    for (const auto& f : round) trace.final_set |= f.forced;
    trace.rounds.push_back(std::move(round));
  }
  return trace;
}

/// Fixpoint only, without recording who forced whom.
inline VertexSet closure_set(const Graph& g, const VertexSet& initial, std::size_t k) {
  detail::require_positive_k(k);
  detail::require_same_universe(g, initial);
  VertexSet colored = initial;
  bool changed = true;
  while (changed) {
    changed = false;
    VertexSet gained(g.order());
    for_each_member(colored, [&](Vertex v) {
      const std::size_t open = g.neighbors(v).count_outside(colored);
      if (open >= 1 && open <= k) gained |= g.neighbors(v);
    });
    gained -= colored;
    if (!gained.empty()) {
      colored |= gained;
      changed = true;
    }
  }
  return colored;
}

inline bool is_k_forcing_set(const Graph& g, const VertexSet& s, std::size_t k) {
  return closure_set(g, s, k).is_full();
}

struct KForcingResult {
  std::size_t k = 1;
  std::size_t value = 0;
  VertexSet witness;
  std::vector<VertexSet> all_minimum;  // filled only on request
};

/// Smallest cardinality worth trying: every component needs a colored vertex,
/// and the first force needs at least delta-k+1 colored vertices.
inline std::size_t forcing_search_start(const Graph& g, std::size_t k) {
  std::size_t start = std::max<std::size_t>(components(g).size(), 1);
  const std::size_t delta = g.min_degree();
  if (delta + 1 > k) start = std::max(start, delta - k + 1);
  return std::min(start, g.order());
}

/// Exact F_k(G). Cardinalities are tried upward; within one, subsets go in
/// colexicographic order and the first forcing set found is the witness.
inline KForcingResult k_forcing_number(const Graph& g, std::size_t k, bool collect_all_minimum = false) {
  detail::require_positive_k(k);
  const std::size_t n = g.order();
  if (n == 0) throw PreconditionError("k-forcing number of the empty graph");
  if (n > kMaxSubsetUniverse) throw ScopeError("exact k-forcing search is limited to 63 vertices");

  KForcingResult result;
  result.k = k;
  for (std::size_t c = forcing_search_start(g, k); c <= n; ++c) {
    bool found = false;
    for_each_subset_colex(n, c, [&](std::uint64_t mask) {
      VertexSet s = VertexSet::from_mask(n, mask);
      if (!is_k_forcing_set(g, s, k)) return false;
      if (!found) {
        found = true;
        result.value = c;
        result.witness = s;
      }
      if (collect_all_minimum) result.all_minimum.push_back(std::move(s));
      return !collect_all_minimum;
    });
    if (found) return result;
  }
  throw std::logic_error("the full vertex set always forces");  // unreachable
}

/// Greedy upper bound: repeatedly add the vertex whose addition colors the
/// most vertices after closure (smallest index on ties) until all are colored.
inline std::pair<std::size_t, VertexSet> greedy_k_forcing_upper(const Graph& g, std::size_t k) {
  detail::require_positive_k(k);
  const std::size_t n = g.order();
  VertexSet chosen(n);
  VertexSet colored = closure_set(g, chosen, k);
  while (!colored.is_full()) {
    std::size_t best_size = 0;
    Vertex best = VertexSet::npos;
    VertexSet best_colored;
    for (Vertex v = 0; v < n; ++v) {
      if (chosen.contains(v)) continue;
      VertexSet trial = chosen;
      trial.insert(v);
      VertexSet reached = closure_set(g, trial, k);
      if (best == VertexSet::npos || reached.count() > best_size) {
        best = v;
        best_size = reached.count();
        best_colored = std::move(reached);
      }
    }
    chosen.insert(best);
    colored = std::move(best_colored);
  }
  return {chosen.count(), chosen};
}

/// Whether deleting any single vertex or edge moves F_1 by at most one.
inline bool check_spread(const Graph& g) {
  if (g.order() < 2) throw PreconditionError("spread check needs at least two vertices");
  const auto base = static_cast<long>(k_forcing_number(g, 1).value);
  auto close = [&](const Graph& h) {
    const auto value = static_cast<long>(k_forcing_number(h, 1).value);
    return value - base <= 1 && base - value <= 1;
  };
  for (Vertex v = 0; v < g.order(); ++v)
    if (!close(g.remove_vertex(v))) return false;
  for (auto [u, v] : g.edges())
    if (!close(g.remove_edge(u, v))) return false;
  return true;
}

struct ConnectedComplementResult {
  VertexSet set;
  std::size_t value = 0;
};

/// Smallest k-forcing set S whose complement induces a connected subgraph
/// (vacuously so when |V-S| <= 1). Requires a k-connected graph.
inline ConnectedComplementResult min_forcing_connected_complement(const Graph& g, std::size_t k) {
  detail::require_positive_k(k);
  const std::size_t n = g.order();
  if (!vertex_k_connected(g, k))
    throw PreconditionError("graph is not " + std::to_string(k) + "-connected");
  for (std::size_t c = 1; c <= n; ++c) {
    std::optional<VertexSet> hit;
    for_each_subset_colex(n, c, [&](std::uint64_t mask) {
      VertexSet s = VertexSet::from_mask(n, mask);
      if (!g.induces_connected(s.complement()) || !is_k_forcing_set(g, s, k)) return false;
      hit = std::move(s);
      return true;
    });
    if (hit) return {*hit, c};
  }
  throw std::logic_error("n-1 vertices always qualify");  // unreachable
}

/// Neighborhood structure every minimum k-forcing set S must have.
struct MinimumSetStructure {
  bool members_reach_out = true;     // v in S: >= min(deg v, k) neighbors outside S
  bool high_degree_outside = true;   // k >= 2, w outside, deg w >= k: >= k-1 neighbors outside
  bool low_degree_outside = true;    // k >= 2, w outside, 2 <= deg w < k: <= 1 neighbor in S

  bool all() const { return members_reach_out && high_degree_outside && low_degree_outside; }
};

inline MinimumSetStructure check_minimum_set_structure(const Graph& g, const VertexSet& s, std::size_t k) {
  MinimumSetStructure out;
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::size_t deg = g.degree(v);
    const std::size_t in_s = (g.neighbors(v) & s).count();
    const std::size_t out_s = deg - in_s;
    if (s.contains(v)) {
      if (out_s < std::min(deg, k)) out.members_reach_out = false;
    } else if (k >= 2) {
      if (deg >= k && out_s + 1 < k) out.high_degree_outside = false;
      if (deg >= 2 && deg < k && in_s > 1) out.low_degree_outside = false;
    }
  }
  return out;
}

}  // namespace kforce
