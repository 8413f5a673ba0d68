#include "corpus.hpp"
#include "oracles.hpp"

#include "kforce/connectivity.hpp"
#include "kforce/generators.hpp"
#include "kforce/invariants.hpp"
#include "kforce/record.hpp"

#include <gtest/gtest.h>

using namespace kforce;

namespace {

void expect_valid_path_cover(const Graph& t, const PathCover& pc) {
  VertexSet covered(t.order());
  EXPECT_EQ(pc.paths.size(), pc.value);
  for (const auto& path : pc.paths) {
    VertexSet part(t.order(), path);
    EXPECT_EQ(part.count(), path.size());
    EXPECT_FALSE(covered.intersects(part));
    covered |= part;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) EXPECT_TRUE(t.adjacent(path[i], path[i + 1]));
    EXPECT_EQ(t.induced(part).size() + 1, path.size());  // induced, no shortcuts
  }
  EXPECT_TRUE(covered.is_full());
}

}  // namespace

TEST(ConnectedDomination, Examples) {
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(connected_k_domination(complete_graph(n), 1)->value, 1U);
  EXPECT_EQ(connected_k_domination(cycle_graph(6), 1)->value, 4U);
  const auto p5 = connected_k_domination(path_graph(5), 1);
  EXPECT_EQ(p5->value, 3U);
  EXPECT_EQ(p5->witness, VertexSet(5, {1, 2, 3}));
  const Graph k33 = complete_bipartite_graph(3, 3);
  EXPECT_EQ(connected_k_domination(k33, 2)->value, *oracle::connected_k_domination(k33, 2));
  EXPECT_EQ(connected_k_domination(k33, 2)->value, 4U);
  EXPECT_FALSE(connected_k_domination(Graph(2), 1));
}

TEST(ConnectedDomination, MatchesOracle) {
  for (const auto& g : corpus::connected_corpus(1, 6))
    for (std::size_t k = 1; k <= g.max_degree() + 1; ++k) {
      const auto got = connected_k_domination(g, k);
      ASSERT_TRUE(got);
      EXPECT_EQ(got->value, oracle::connected_k_domination(g, k).value());
      EXPECT_TRUE(is_k_dominating(g, got->witness, k));
      EXPECT_TRUE(g.induces_connected(got->witness));
    }
}

TEST(Independence, Examples) {
  EXPECT_EQ(k_independence_number(cycle_graph(5), 1).value, 2U);
  EXPECT_EQ(k_independence_number(complete_graph(4), 2).value, 2U);
  EXPECT_EQ(k_independence_number(cycle_graph(5), 3).value, 5U);
}

TEST(Independence, MatchesOracle) {
  for (const auto& g : corpus::connected_corpus(1, 6))
    for (std::size_t k = 1; k <= g.max_degree() + 1; ++k) {
      const auto r = k_independence_number(g, k);
      EXPECT_EQ(r.value, oracle::k_independence(g, k));
      EXPECT_TRUE(is_k_independent(g, r.witness, k));
      if (k > g.max_degree()) { EXPECT_EQ(r.value, g.order()); }
    }
}

TEST(PathCover, Examples) {
  for (std::size_t n = 1; n <= 12; ++n) EXPECT_EQ(path_cover_number(path_graph(n)).value, 1U);
  EXPECT_EQ(path_cover_number(star_graph(4)).value, 3U);
  EXPECT_EQ(oracle::path_partition(star_graph(4)), 3U);
  for (std::size_t s = 1; s <= 6; ++s) EXPECT_EQ(path_cover_number(double_leaf_caterpillar_graph(s)).value, s);
  for (std::size_t rays = 3; rays <= 6; ++rays)
    for (std::size_t sub = 0; sub <= 2; ++sub)
      EXPECT_EQ(path_cover_number(subdivided_star_graph(rays, sub)).value, rays - 1);
  EXPECT_THROW(path_cover_number(cycle_graph(4)), PreconditionError);
}

TEST(PathCover, BruteForceDpAndOracleAgree) {
  for (const auto& t : corpus::tree_corpus(1, 10)) {
    const auto brute = path_cover_brute_force(t);
    const auto dp = path_cover_dp(t);
    EXPECT_EQ(brute.value, dp.value) << write_graph6(t);
    expect_valid_path_cover(t, brute);
    expect_valid_path_cover(t, dp);
    if (t.order() <= 8) { EXPECT_EQ(brute.value, oracle::path_partition(t)); }
  }
}

TEST(PathCover, LargerTreesUseDp) {
  const Graph t = double_leaf_caterpillar_graph(7);  // 21 vertices
  const auto pc = path_cover_number(t);
  EXPECT_EQ(pc.value, 7U);
  expect_valid_path_cover(t, pc);
}

TEST(MaxLeaf, Examples) {
  for (std::size_t n = 3; n <= 9; ++n) {
    EXPECT_EQ(max_leaf_spanning_tree(cycle_graph(n)), 2U);
    EXPECT_EQ(max_leaf_spanning_tree(complete_graph(n)), n - 1);
  }
  EXPECT_THROW(max_leaf_spanning_tree(path_graph(2)), PreconditionError);
  EXPECT_THROW(max_leaf_spanning_tree(disjoint_union(path_graph(3), path_graph(3))), PreconditionError);
  EXPECT_THROW(max_leaf_spanning_tree(cycle_graph(11)), ScopeError);
}

TEST(MaxLeaf, MatchesOracleAndConnectedDomination) {
  for (const auto& g : corpus::connected_corpus(3, 6)) {
    const std::size_t leaves = max_leaf_spanning_tree(g);
    EXPECT_EQ(leaves, oracle::max_leaf(g)) << write_graph6(g);
    EXPECT_EQ(g.order() - leaves, connected_k_domination(g, 1)->value) << write_graph6(g);
  }
}

TEST(Connectivity, Examples) {
  for (std::size_t n = 3; n <= 8; ++n) {
    EXPECT_TRUE(vertex_k_connected(cycle_graph(n), 2));
    EXPECT_FALSE(vertex_k_connected(cycle_graph(n), 3));
  }
  for (std::size_t k = 1; k <= 5; ++k) {
    EXPECT_TRUE(vertex_k_connected(complete_graph(k + 1), k));
    EXPECT_FALSE(vertex_k_connected(complete_graph(k), k));
  }
}

TEST(Connectivity, MatchesOracleAndImpliesMinDegree) {
  for (const auto& g : corpus::connected_corpus(1, 6))
    for (std::size_t k = 1; k <= g.order(); ++k) {
      const bool kc = vertex_k_connected(g, k);
      EXPECT_EQ(kc, oracle::k_connected(g, k));
      if (kc) { EXPECT_GE(g.min_degree(), k); }
    }
}

TEST(Hamiltonian, Examples) {
  const auto c = hamiltonian_cycle(cycle_graph(6));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->size(), 6U);
  const auto k4 = compute_invariants(complete_graph(4));
  ASSERT_TRUE(k4.hamiltonian);
  EXPECT_TRUE(k4.hamiltonian->hamiltonian);
  EXPECT_EQ(k4.hamiltonian->chords, 2U);
  EXPECT_FALSE(hamiltonian_cycle(complete_bipartite_graph(2, 3)));
  EXPECT_THROW(hamiltonian_cycle(path_graph(2)), PreconditionError);
}

TEST(Hamiltonian, MatchesOracleWithValidCycles) {
  for (const auto& g : corpus::connected_corpus(3, 7)) {
    const auto cyc = hamiltonian_cycle(g);
    EXPECT_EQ(cyc.has_value(), oracle::hamiltonian(g)) << write_graph6(g);
    if (!cyc) continue;
    ASSERT_EQ(cyc->size(), g.order());
    EXPECT_EQ(VertexSet(g.order(), *cyc).count(), g.order());
    for (std::size_t i = 0; i < cyc->size(); ++i)
      EXPECT_TRUE(g.adjacent((*cyc)[i], (*cyc)[(i + 1) % cyc->size()]));
  }
}

TEST(StarFree, Examples) {
  EXPECT_FALSE(is_k1r_free(star_graph(3), 3));
  EXPECT_TRUE(is_k1r_free(cycle_graph(6), 3));
  EXPECT_TRUE(is_k1r_free(star_graph(3), 4));
  EXPECT_THROW(is_k1r_free(cycle_graph(4), 2), PreconditionError);
  EXPECT_EQ(min_free_star(star_graph(5)), 6U);
  EXPECT_EQ(min_free_star(complete_graph(5)), 3U);
}

// In a K_{1,r}-free graph with delta >= 1, a vertex outside a maximum
// k-independent set has at most k(r-1) neighbors inside it.
TEST(StarFree, NeighborBoundOnMaximumIndependentSets) {
  for (const auto& g : corpus::connected_corpus(2, 6)) {
    const std::size_t r = min_free_star(g);
    for (std::size_t k = 1; k <= g.max_degree(); ++k)
      for (const auto& i : k_independence_number(g, k, true).all_maximum)
        for (Vertex v = 0; v < g.order(); ++v)
          if (!i.contains(v)) { EXPECT_LE((g.neighbors(v) & i).count(), k * (r - 1)) << write_graph6(g); }
  }
}

TEST(CycleTree, Examples) {
  const auto c5 = is_cycle_tree(cycle_graph(5));
  EXPECT_TRUE(c5.is_cycle_tree);
  EXPECT_EQ(c5.cycles, 1U);
  const auto three = is_cycle_tree(cycle_tree_graph({3, 4, 5}));
  EXPECT_TRUE(three.is_cycle_tree);
  EXPECT_EQ(three.cycles, 3U);
  EXPECT_FALSE(is_cycle_tree(path_graph(4)).is_cycle_tree);
  EXPECT_FALSE(is_cycle_tree(complete_graph(4)).is_cycle_tree);
  // a pendant vertex lies on no cycle
  EXPECT_FALSE(is_cycle_tree(Graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})).is_cycle_tree);
}

TEST(GammaLower, EqualityFamilies) {
  for (std::size_t n = 3; n <= 8; ++n) {
    EXPECT_EQ(connected_k_domination(path_graph(n), 1)->value, n - 2);  // (n-2)/(2-1)
    EXPECT_EQ(connected_k_domination(cycle_graph(n), 1)->value, n - 2);
    EXPECT_EQ(connected_k_domination(star_graph(n - 1), 1)->value, 1U);  // (n-2)/(n-2)
  }
}

TEST(Record, TablesAndMissingValues) {
  const auto r = compute_invariants(cycle_graph(5));
  EXPECT_EQ(r.table_size(), 2U);
  EXPECT_EQ(r.forcing_number(1), 2U);
  EXPECT_EQ(r.forcing_number(7), 1U);
  EXPECT_EQ(r.connected_k_domination(1), 3U);
  EXPECT_THROW(r.k_independence(3), MissingInvariant);
  EXPECT_THROW(compute_invariants(Graph(0)), PreconditionError);
  InvariantOptions small;
  small.hamiltonian_max_n = 4;
  EXPECT_FALSE(compute_invariants(cycle_graph(5), small).hamiltonian);
}
