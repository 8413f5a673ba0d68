#include "corpus.hpp"
#include "kforce/generators.hpp"
#include "kforce/graph.hpp"
#include "kforce/invariants.hpp"
#include "kforce/io.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace kforce;

namespace {

std::set<Edge> edge_set(const Graph& g) {
  auto es = g.edges();
  return {es.begin(), es.end()};
}

}  // namespace

TEST(Graph, RejectsSelfLoopsAndBadEndpoints) {
  EXPECT_THROW(Graph(3, {{1, 1}}), PreconditionError);
  EXPECT_THROW(Graph(3, {{0, 3}}), PreconditionError);
}

TEST(Graph, DuplicateEdgesCollapse) {
  const Graph g(3, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(g.size(), 1U);
  EXPECT_TRUE(g.adjacent(1, 0));
}

TEST(Graph, AdjacencyIsSymmetricOnCorpus) {
  for (const auto& g : corpus::connected_corpus(1, 6)) {
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      EXPECT_FALSE(g.adjacent(v, v));
      degree_sum += g.degree(v);
      for (Vertex w : g.neighbors(v).members()) EXPECT_TRUE(g.adjacent(w, v));
    }
    EXPECT_EQ(degree_sum, 2 * g.size());
  }
}

TEST(Graph, RemoveVertexReindexesDensely) {
  const Graph p = path_graph(4);  // 0-1-2-3
  const Graph h = p.remove_vertex(1);
  EXPECT_EQ(h.order(), 3U);
  EXPECT_EQ(edge_set(h), (std::set<Edge>{{1, 2}}));
  EXPECT_EQ(p.remove_edge(2, 1).size(), 2U);
  EXPECT_EQ(p.remove_edge(2, 1).order(), 4U);
}

TEST(Graph6, EmptyGraphOnFive) {
  const Graph g = parse_graph6("D??");
  EXPECT_EQ(g.order(), 5U);
  EXPECT_EQ(g.size(), 0U);
}

TEST(Graph6, HandDecodedSample) {
  // 'Q' = 18 = 010010, 'o' = 48 = 110000 over columns (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),(0,4),(1,4),...
  const Graph g = parse_graph6("DQo");
  EXPECT_EQ(edge_set(g), (std::set<Edge>{{0, 2}, {1, 3}, {0, 4}, {1, 4}}));
}

TEST(Graph6, HandEncodedCycleAndSingleton) {
  EXPECT_EQ(write_graph6(cycle_graph(5)), "Dhc");
  EXPECT_EQ(write_graph6(Graph(1)), "@");
  EXPECT_EQ(parse_graph6(">>graph6<<Dhc"), cycle_graph(5));
}

TEST(Graph6, RoundTripsCorpus) {
  for (const auto& name : {"connected_n5.g6", "connected_n7.g6", "trees_n10.g6"}) {
    std::ifstream in(std::string(KFORCE_DATA_DIR) + "/" + name);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const Graph g = parse_graph6(line);
      EXPECT_EQ(write_graph6(g), line);
      EXPECT_EQ(parse_graph6(write_graph6(g)), g);
    }
  }
}

TEST(Graph6, LongFormRoundTrip) {
  const Graph g = cycle_graph(70);
  const std::string s = write_graph6(g);
  EXPECT_EQ(s.front(), '~');
  EXPECT_EQ(parse_graph6(s), g);
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("D?"), ParseError);       // too short
  EXPECT_THROW(parse_graph6("D???"), ParseError);     // too long
  EXPECT_THROW(parse_graph6("D?\x7f"), ParseError);   // out of range
  EXPECT_THROW(parse_graph6("D?@"), ParseError);      // padding bit set
}

TEST(EdgeList, ParsesCommentsAndCount) {
  const Graph g = parse_edge_list("# hexagon\n6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
  EXPECT_EQ(g, cycle_graph(6));
  EXPECT_EQ(parse_edge_list("0 1\n1 2\n").order(), 3U);
  EXPECT_EQ(parse_edge_list("4\n0 1\n").order(), 4U);
  EXPECT_THROW(parse_edge_list("0 x\n"), ParseError);
  EXPECT_EQ(parse_edge_list(write_edge_list(complete_graph(4))), complete_graph(4));
}

TEST(Generators, CycleTreeShape) {
  const Graph g = cycle_tree_graph({3, 3});
  EXPECT_EQ(g.order(), 6U);
  EXPECT_EQ(g.size(), 7U);
  EXPECT_EQ(bridges(g).size(), 1U);
  for (const auto& lengths : std::vector<std::vector<std::size_t>>{{3}, {4, 5}, {3, 4, 5}, {5, 3, 3, 4}}) {
    const Graph t = cycle_tree_graph(lengths);
    const std::size_t q = lengths.size();
    EXPECT_EQ(t.size(), t.order() + q - 1);
    EXPECT_EQ(bridges(t).size(), q - 1);
  }
}

TEST(Generators, SmallFamilies) {
  EXPECT_EQ(path_graph(1), Graph(1));
  const Graph cat = double_leaf_caterpillar_graph(4);
  EXPECT_EQ(cat.order(), 12U);
  EXPECT_EQ(degree_profile(cat).leaves, 8U);
  EXPECT_EQ(star_graph(4), complete_bipartite_graph(1, 4));
  EXPECT_EQ(subdivided_star_graph(3, 2).order(), 10U);
  EXPECT_EQ(pendant_path_graph(4).order(), 8U);
  EXPECT_EQ(circulant_graph(8, {1, 4}).max_degree(), 3U);
}

TEST(Generators, ProfilesMatchClosedForms) {
  for (std::size_t p = 1; p <= 5; ++p) {
    EXPECT_TRUE(complete_bipartite_graph(p, p).is_regular());
    EXPECT_EQ(complete_bipartite_graph(p, p).max_degree(), p);
    EXPECT_EQ(complete_graph(p + 1).min_degree(), p);
  }
  for (std::size_t n = 3; n <= 9; ++n) {
    auto c = degree_profile(cycle_graph(n));
    EXPECT_EQ(c.histogram, (std::map<std::size_t, std::size_t>{{2, n}}));
    auto p = degree_profile(path_graph(n));
    EXPECT_EQ(p.leaves, 2U);
  }
}

TEST(Generators, ValidationAndSweeps) {
  EXPECT_THROW(generate({Family::cycle, {2}}), PreconditionError);
  EXPECT_THROW(generate({Family::cycle_tree, {3, 2}}), PreconditionError);
  EXPECT_EQ(generate({Family::cycle, {4}}), cycle_graph(4));
  EXPECT_EQ(expand_parameter_sweep("3..6").size(), 4U);
  EXPECT_EQ(expand_parameter_sweep("3,4..5"), (std::vector<std::vector<std::size_t>>{{3, 4}, {3, 5}}));
  EXPECT_THROW(expand_parameter_sweep("5..3"), PreconditionError);
}

TEST(Components, Examples) {
  const auto two = components(disjoint_union(complete_graph(3), complete_graph(3)));
  ASSERT_EQ(two.size(), 2U);
  EXPECT_EQ(two[0].count(), 3U);
  EXPECT_EQ(two[1].count(), 3U);
  EXPECT_EQ(components(cycle_graph(5)).size(), 1U);
  EXPECT_EQ(components(Graph(4)).size(), 4U);
}

TEST(Components, PartitionWithoutCrossEdges) {
  const Graph g = disjoint_union(disjoint_union(path_graph(3), cycle_graph(4)), Graph(2));
  const auto parts = components(g);
  VertexSet seen(g.order());
  for (const auto& c : parts) {
    EXPECT_FALSE(seen.intersects(c));
    seen |= c;
  }
  EXPECT_TRUE(seen.is_full());
  for (const Edge& e : g.edges()) {
    const auto owner = std::find_if(parts.begin(), parts.end(), [&](const VertexSet& c) { return c.contains(e.first); });
    EXPECT_TRUE(owner->contains(e.second));
  }
}

TEST(DegreeProfile, Examples) {
  const auto c6 = degree_profile(cycle_graph(6));
  EXPECT_EQ(c6.max_degree, 2U);
  EXPECT_EQ(c6.min_degree, 2U);
  EXPECT_EQ(c6.leaves, 0U);
  const auto star = degree_profile(star_graph(4));
  EXPECT_EQ(star.max_degree, 4U);
  EXPECT_EQ(star.min_degree, 1U);
  EXPECT_EQ(star.leaves, 4U);
  EXPECT_EQ(star.histogram, (std::map<std::size_t, std::size_t>{{1, 4}, {4, 1}}));
  EXPECT_THROW(degree_profile(Graph(0)), PreconditionError);
}

TEST(DegreeProfile, HamiltonianCubicChordCount) {
  // the Wagner graph and K_{3,3} are Hamiltonian with Delta = 3
  for (const Graph& g : {circulant_graph(8, {1, 4}), circulant_graph(6, {1, 3})}) {
    ASSERT_TRUE(hamiltonian_cycle(g));
    EXPECT_EQ(degree_profile(g).histogram.at(3), 2 * (g.size() - g.order()));
  }
}

TEST(VertexSet, ColexOrderAndScope) {
  std::vector<std::uint64_t> seen;
  for_each_subset_colex(4, 2, [&](std::uint64_t m) {
    seen.push_back(m);
    return false;
  });
  EXPECT_EQ(seen, (std::vector<std::uint64_t>{0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100}));
  EXPECT_THROW(for_each_subset_colex(64, 1, [](std::uint64_t) { return false; }), ScopeError);
}
