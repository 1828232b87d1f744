#include <vector>

#include <gtest/gtest.h>

#include "graphsep/errors.hpp"
#include "graphsep/linalg.hpp"
#include "graphsep/transforms.hpp"
#include "test_util.hpp"

using namespace graphsep;
using graphsep::test::make_graph;

namespace {

// Direct rewrite from labels: swap coordinate `axis` between the endpoints.
EdgeSet oracle_gtpt(const MultipartiteGraph& g, std::size_t axis) {
  EdgeSet out;
  for (const Edge& e : g.edges()) {
    auto u = vertex_label(e.a, g.profile());
    auto v = vertex_label(e.b, g.profile());
    std::swap(u.coords[axis - 1], v.coords[axis - 1]);
    out.insert(Edge::of(vertex_index(u, g.profile()), vertex_index(v, g.profile())));
  }
  return out;
}

}  // namespace

TEST(Gtpt, SingleEdge) {
  const auto g = make_graph({2, 2, 2}, {{1, 6}});
  EXPECT_EQ(gtpt(g, 1).edges(), (EdgeSet{Edge{2, 5}}));
}

TEST(Gtpt, IntraLayerEdgesUnchanged) {
  const auto g = make_graph({2, 2, 2}, {{1, 2}, {1, 4}, {5, 8}, {6, 7}});
  EXPECT_EQ(gtpt(g, 1), g);
}

TEST(Gtpt, PairedEdgesFixed) {
  const auto g = make_graph({2, 2, 2}, {{1, 6}, {2, 5}});
  EXPECT_EQ(gtpt(g, 1), g);
}

TEST(Gtpt, MatchesLabelOracleOnEveryAxis) {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = test::random_profile(rng, 4, 64);
    const auto g = test::random_graph(p, rng, 1, 3);
    for (std::size_t axis = 1; axis <= p.parties(); ++axis) EXPECT_EQ(gtpt(g, axis).edges(), oracle_gtpt(g, axis));
  }
}

TEST(Gtpt, AxisOutOfRange) {
  const auto g = make_graph({2, 2}, {{1, 4}});
  EXPECT_THROW(gtpt(g, 0), DomainError);
  EXPECT_THROW(gtpt(g, 3), DomainError);
}

TEST(DegreeSymmetry, Examples) {
  EXPECT_TRUE(is_degree_symmetric(MultipartiteGraph(DimensionProfile({2, 2, 2}), EdgeSet{}), 1).symmetric);
  const auto r = is_degree_symmetric(make_graph({2, 2, 2}, {{1, 6}}), 1);
  EXPECT_FALSE(r.symmetric);
  // G: vertices 1 and 6 have degree 1; G' = {{2,5}}.
  ASSERT_EQ(r.deltas.size(), 4u);
  EXPECT_EQ(r.deltas[0].vertex, 1u);
  EXPECT_EQ(r.deltas[0].before, 1);
  EXPECT_EQ(r.deltas[0].after, 0);
  EXPECT_EQ(r.deltas[1].vertex, 2u);
  EXPECT_EQ(r.deltas[1].before, 0);
  EXPECT_EQ(r.deltas[1].after, 1);
  EXPECT_TRUE(is_degree_symmetric(make_graph({2, 2, 2}, {{1, 6}, {2, 5}}), 1).symmetric);
}

TEST(PartialSymmetry, Examples) {
  const auto r = is_partially_symmetric(make_graph({2, 2, 2}, {{1, 6}}), 1);
  EXPECT_FALSE(r.symmetric);
  ASSERT_TRUE(r.violating_edge && r.missing_partner);
  EXPECT_EQ(*r.violating_edge, (Edge{1, 6}));
  EXPECT_EQ(*r.missing_partner, (Edge{2, 5}));
  EXPECT_TRUE(is_partially_symmetric(make_graph({2, 2, 2}, {{1, 6}, {2, 5}}), 1).symmetric);
  EXPECT_TRUE(is_partially_symmetric(test::m222(), 1).symmetric);
}

TEST(PartialSymmetry, EquivalentToFixedPoint) {
  SplitMix64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = test::random_profile(rng, 3, 27);
    const auto g = test::random_graph(p, rng, 1, 8);
    for (std::size_t axis = 1; axis <= p.parties(); ++axis)
      EXPECT_EQ(is_partially_symmetric(g, axis).symmetric, gtpt(g, axis) == g);
  }
}

TEST(MatrixIdentity, Examples) {
  EXPECT_TRUE(gtpt_matrix_identity(MultipartiteGraph(DimensionProfile({2, 2, 2}), EdgeSet{}), 1).holds);
  EXPECT_TRUE(gtpt_matrix_identity(make_graph({2, 2, 2}, {{1, 6}}), 1).holds);
  const auto g = make_graph({2, 2, 2}, {{1, 6}});
  EXPECT_EQ(adjacency_matrix(gtpt(g, 1)), partial_transpose_matrix(adjacency_matrix(g), g.profile(), 1));
}

TEST(MatrixIdentity, RandomSweep) {
  SplitMix64 rng(33);
  for (const auto& dims : {std::vector<int>{2, 2, 2}, std::vector<int>{2, 3, 2}}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto g = test::random_graph(DimensionProfile(dims), rng, 1, 3);
      for (std::size_t axis = 1; axis <= dims.size(); ++axis) {
        EXPECT_TRUE(gtpt_matrix_identity(g, axis).holds);
        // independent restatement through the matrix routines
        EXPECT_EQ(adjacency_matrix(gtpt(g, axis)), partial_transpose_matrix(adjacency_matrix(g), g.profile(), axis));
      }
    }
  }
}

TEST(Gtpt, InvolutionPreservesEdgeCount) {
  SplitMix64 rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = test::random_profile(rng, 4, 64);
    const auto g = test::random_graph(p, rng, 1, 5);
    const std::size_t axis = 1 + rng.below(p.parties());
    const auto image = gtpt(g, axis);
    EXPECT_EQ(image.edge_count(), g.edge_count());
    EXPECT_EQ(gtpt(image, axis), g);
  }
}
