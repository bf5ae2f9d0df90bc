#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "becurv/edge_list.hpp"
#include "becurv/graph.hpp"
#include "becurv/tilings.hpp"
#include "oracle/random_graphs.hpp"

using namespace becurv;

namespace {

Graph complete4() { return from_edge_list("a b\na c\na d\nb c\nb d\nc d\n"); }

std::vector<std::string> sorted(std::span<const std::string> s) {
  std::vector<std::string> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(EdgeList, ParsesInFirstAppearanceOrder) {
  const Graph g = from_edge_list("a b\nb c");
  ASSERT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.label(0), "a");
  EXPECT_EQ(g.label(1), "b");
  EXPECT_EQ(g.label(2), "c");
  EXPECT_TRUE(g.adjacent(g.id("a"), g.id("b")));
  EXPECT_TRUE(g.adjacent(g.id("c"), g.id("b")));
  EXPECT_FALSE(g.adjacent(g.id("a"), g.id("c")));
}

TEST(EdgeList, SelfLoopRejected) { EXPECT_THROW(from_edge_list("a a"), SelfLoopError); }

TEST(EdgeList, CommentsSkippedAndDuplicatesMerged) {
  const Graph g = from_edge_list("# comment\na b\na b");
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.degree("a"), 1u);
}

TEST(EdgeList, BlankLinesIndentedCommentsAndCrlf) {
  const Graph g = from_edge_list("\n   \n  # indented\r\na\tb\r\n b  a \n");
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(EdgeList, MalformedLinesReportLineNumber) {
  try {
    from_edge_list("a b\nlonely\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(from_edge_list("a b c"), ParseError);
}

TEST(Graph, Degree) {
  const Graph k4 = complete4();
  for (const auto& v : k4.labels()) EXPECT_EQ(degree(k4, v), 3u);
  const Graph oct = platonic(4);
  for (const auto& v : oct.labels()) EXPECT_EQ(degree(oct, v), 4u);
  EXPECT_EQ(degree(from_edge_list("a b\nb c"), "b"), 2u);
  EXPECT_THROW(degree(k4, "z"), UnknownVertexError);
}

TEST(TwoBall, CompleteGraphHasEmptyOuterSphere) {
  const LocalBall ball = two_ball(complete4(), "a");
  EXPECT_EQ(ball.center(), "a");
  EXPECT_EQ(ball.s1_size(), 3u);
  EXPECT_EQ(ball.s2_size(), 0u);
  EXPECT_EQ(ball.edges().size(), 6u);
}

TEST(TwoBall, Octahedron) {
  const Graph oct = platonic(4);
  for (const auto& x : oct.labels()) {
    const LocalBall ball = two_ball(oct, x);
    EXPECT_EQ(ball.s1_size(), 4u);
    EXPECT_EQ(ball.s2_size(), 1u);
    EXPECT_EQ(ball.edges().size(), 12u);
  }
}

TEST(TwoBall, PathDropsEdgesBeyondInnerBall) {
  const LocalBall ball = two_ball(from_edge_list("a b\nb c\nc d"), "a");
  EXPECT_EQ(sorted(ball.s1()), std::vector<std::string>{"b"});
  EXPECT_EQ(sorted(ball.s2()), std::vector<std::string>{"c"});
  ASSERT_EQ(ball.edges().size(), 2u);
  EXPECT_FALSE(ball.find("d").has_value());
}

TEST(TwoBall, OuterSphereEdgesDropped) {
  // Icosahedron: the apex pentagon lies in S2 and must not appear.
  const LocalBall ball = two_ball(platonic(5), "x");
  EXPECT_EQ(ball.s1_size(), 5u);
  EXPECT_EQ(ball.s2_size(), 5u);
  for (auto [u, v] : ball.edges()) EXPECT_FALSE(ball.in_s2(u) && ball.in_s2(v));
  EXPECT_EQ(ball.edges().size(), 20u);
}

TEST(TwoBall, Errors) {
  Graph g = from_edge_list("a b");
  g.add_vertex("lonely");
  EXPECT_THROW(two_ball(g, "z"), UnknownVertexError);
  EXPECT_THROW(two_ball(g, "lonely"), IsolatedVertexError);
}

// Properties over random graphs.

TEST(GraphProperties, EdgeListRoundTrip) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_connected_graph(rng, 2 + trial % 12, 0.3);
    const Graph h = from_edge_list(to_edge_list(g));
    ASSERT_EQ(h.vertex_count(), g.vertex_count());
    ASSERT_EQ(h.edge_count(), g.edge_count());
    for (auto [u, v] : g.edges()) EXPECT_TRUE(h.adjacent(h.id(g.label(u)), h.id(g.label(v))));
  }
}

TEST(GraphProperties, TwoBallInvariantsAndOrderIndependence) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_connected_graph(rng, 3 + trial % 10, 0.2);

    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    Graph shuffled;
    for (auto [u, v] : edges) {
      if (rng() & 1) std::swap(u, v);
      shuffled.add_edge(g.label(u), g.label(v));
    }

    for (const auto& x : g.labels()) {
      const LocalBall ball = two_ball(g, x);
      const LocalBall other = two_ball(shuffled, x);
      EXPECT_EQ(sorted(ball.s1()), sorted(other.s1()));
      EXPECT_EQ(sorted(ball.s2()), sorted(other.s2()));
      EXPECT_EQ(ball.edges().size(), other.edges().size());

      const auto s1 = sorted(ball.s1());
      EXPECT_EQ(s1.size(), g.degree(x));
      std::set<std::string> inner(s1.begin(), s1.end());
      EXPECT_FALSE(inner.count(x));
      for (LocalBall::Index w = ball.s1_size() + 1; w < ball.size(); ++w) {
        EXPECT_FALSE(inner.count(ball.label(w)));
        const auto n = ball.neighbors(w);
        EXPECT_TRUE(std::any_of(n.begin(), n.end(), [&](auto i) { return ball.in_s1(i); }));
        for (auto i : n) EXPECT_TRUE(ball.in_s1(i));
      }
    }
  }
}
