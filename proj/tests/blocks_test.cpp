#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "raag/blocks.hpp"
#include "raag/enumerate.hpp"
#include "raag/error.hpp"

namespace raag {
namespace {

using fixtures::gamma1;
using fixtures::gamma2;

TEST(CutVertices, Examples) {
  EXPECT_EQ(cut_vertices(fixtures::path3()), VertexSubset{"b"});
  EXPECT_EQ(cut_vertices(gamma2()), (VertexSubset{"c", "d"}));
  EXPECT_TRUE(cut_vertices(fixtures::triangle()).empty());
  EXPECT_TRUE(cut_vertices(SimplicialGraph{}).empty());
}

TEST(CutVertices, DisconnectedInput) {
  EXPECT_EQ(cut_vertices(parse_graph("a b\nb c\nx y\nz\n")), VertexSubset{"b"});
}

TEST(CutVertices, MatchesRemovalOracleOnAllSmallGraphs) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for_each_labeled_graph(n, [](const SimplicialGraph& g) {
      const auto expected = oracle::cut_vertices(g);
      const auto fast = cut_vertices(g);
      EXPECT_EQ(std::set<VertexId>(fast.begin(), fast.end()), expected);
      EXPECT_EQ(cut_vertices_by_removal(g), fast);
    });
  }
}

TEST(CutVertices, MatchesRemovalOracleOnRandomEightVertexGraphs) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto g = labeled_graph(8, rng() & ((std::uint64_t{1} << 28) - 1));
    const auto fast = cut_vertices(g);
    EXPECT_EQ(std::set<VertexId>(fast.begin(), fast.end()), oracle::cut_vertices(g));
  }
}

TEST(IsBiconnected, Examples) {
  EXPECT_TRUE(is_biconnected(fixtures::k2()));
  EXPECT_FALSE(is_biconnected(gamma1()));
  EXPECT_TRUE(is_biconnected(fixtures::triangle()));
  EXPECT_FALSE(is_biconnected(parse_graph("x")));
  EXPECT_FALSE(is_biconnected(parse_graph("a b\nc d\n")));
  EXPECT_THROW(is_biconnected(SimplicialGraph{}), EmptyGraphError);
}

TEST(Bicomponents, Examples) {
  EXPECT_EQ(bicomponents(gamma2()), (std::vector<VertexSubset>{{"a", "b", "c"}, {"c", "d"}, {"d", "e", "f"}}));
  EXPECT_EQ(bicomponents(gamma1()), (std::vector<VertexSubset>{{"c", "l1"}, {"c", "l2"}, {"c", "l3"}}));
  EXPECT_EQ(bicomponents(fixtures::triangle()), (std::vector<VertexSubset>{{"a", "b", "c"}}));
}

TEST(Bicomponents, PreconditionErrors) {
  EXPECT_THROW(bicomponents(parse_graph("a b\nc\n")), DomainError);
  EXPECT_THROW(bicomponents(parse_graph("x")), DomainError);
}

TEST(BlockTree, StarOfGamma1) {
  const auto tree = block_tree(gamma1());
  ASSERT_EQ(tree.black.size(), 1u);
  EXPECT_EQ(tree.black[0].cut_vertex, "c");
  EXPECT_EQ(tree.white.size(), 3u);
  EXPECT_EQ(tree.edges.size(), 3u);
  EXPECT_EQ(tree.black_valence(0), 3u);
}

TEST(BlockTree, PathOfGamma2) {
  const auto tree = block_tree(gamma2());
  ASSERT_EQ(tree.black.size(), 2u);
  ASSERT_EQ(tree.white.size(), 3u);
  // w0 - b0(c) - w1 - b1(d) - w2
  EXPECT_EQ(tree.edges, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {0, 1}, {1, 1}, {1, 2}}));
  EXPECT_EQ(tree.white_valence(0), 1u);
  EXPECT_EQ(tree.white_valence(1), 2u);
  EXPECT_EQ(tree.white_valence(2), 1u);
}

TEST(BlockTree, BiconnectedInput) {
  const auto tree = block_tree(fixtures::triangle());
  EXPECT_TRUE(tree.black.empty());
  EXPECT_EQ(tree.white.size(), 1u);
  EXPECT_TRUE(tree.edges.empty());
}

// Block cover, tree shape and leaf color on every connected graph up to 6 vertices.
TEST(BlockTree, StructuralInvariants) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for_each_labeled_graph(n, [](const SimplicialGraph& g) {
      if (!oracle::connected(g)) return;
      const auto blocks = bicomponents(g);
      const auto tree = block_tree(g);

      std::vector<VertexId> covered;
      for (const auto& b : blocks) covered.insert(covered.end(), b.begin(), b.end());
      EXPECT_EQ(VertexSubset(covered), g.vertex_set());

      for (const auto& [u, v] : g.edges()) {
        const auto holders = std::count_if(blocks.begin(), blocks.end(),
                                           [&](const VertexSubset& b) { return b.contains(u) && b.contains(v); });
        EXPECT_EQ(holders, 1);
      }
      for (const auto& b : blocks) {
        const auto sub = induced_subgraph(g, b);
        if (b.size() == 2) {
          EXPECT_TRUE(g.adjacent(b.members()[0], b.members()[1]));
        } else {
          EXPECT_TRUE(oracle::biconnected(sub));
        }
      }
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
          const auto shared = set_intersection(blocks[i], blocks[j]);
          EXPECT_LE(shared.size(), 1u);
          if (shared.size() == 1) EXPECT_TRUE(oracle::cut_vertices(g).contains(shared.front()));
        }
      }

      EXPECT_EQ(tree.edges.size() + 1, tree.black.size() + tree.white.size());
      // Connected: flood from white node 0 over the bipartite edges.
      std::set<std::size_t> whites{0};
      std::set<std::size_t> blacks;
      for (bool grew = true; grew;) {
        grew = false;
        for (const auto& [b, w] : tree.edges) {
          if (whites.contains(w) && blacks.insert(b).second) grew = true;
          if (blacks.contains(b) && whites.insert(w).second) grew = true;
        }
      }
      EXPECT_EQ(whites.size(), tree.white.size());
      EXPECT_EQ(blacks.size(), tree.black.size());
      for (const auto& b : tree.black) {
        EXPECT_GE(tree.black_valence(b.id), 2u);
        for (const auto& w : tree.white) {
          const bool linked = std::find(tree.edges.begin(), tree.edges.end(), std::make_pair(b.id, w.id)) !=
                              tree.edges.end();
          EXPECT_EQ(linked, w.block.contains(b.cut_vertex));
        }
      }
    });
  }
}

}  // namespace
}  // namespace raag
