#include <gtest/gtest.h>

#include <random>

#include "ghdinc/error.hpp"
#include "ghdinc/hypergraph.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"
#include "support/random_instances.hpp"

using namespace ghdinc;
using fixtures::names;

namespace {

std::set<NameSet> edge_sets(const Hypergraph& h) {
  std::set<NameSet> out;
  for (EdgeId e = 0; e < h.num_edges(); ++e) out.insert(h.names_of(h.edge(e)));
  return out;
}

}  // namespace

TEST(Parse, TwoEdges) {
  auto h = parse_hypergraph("w1(a,b,c),\nw2(f,g,h).");
  EXPECT_EQ(h.num_edges(), 2u);
  EXPECT_EQ(h.num_vertices(), 6u);
  EXPECT_EQ(h.vertex_names(), (std::vector<std::string>{"a", "b", "c", "f", "g", "h"}));
}

TEST(Parse, RunningExample) {
  auto h = fixtures::hp_prime();
  ASSERT_EQ(h.num_edges(), 6u);
  EXPECT_EQ(h.names_of(h.edge(*h.find_edge("w1"))), names("a b c"));
  EXPECT_EQ(h.names_of(h.edge(*h.find_edge("w2"))), names("f g h"));
  EXPECT_EQ(h.names_of(h.edge(*h.find_edge("w3"))), names("e i k"));
  EXPECT_EQ(h.names_of(h.edge(*h.find_edge("w4"))), names("a d f"));
  EXPECT_EQ(h.names_of(h.edge(*h.find_edge("w5"))), names("c e h"));
  EXPECT_EQ(h.names_of(h.edge(*h.find_edge("w6"))), names("j k l"));
}

TEST(Parse, CommentsAndSeparators) {
  auto h = parse_hypergraph("% header\n  e1 ( x , y )\ne2(y,z) , e3(z)\n% done\n.\n");
  EXPECT_EQ(h.num_edges(), 3u);
  EXPECT_EQ(h.num_vertices(), 3u);
}

TEST(Parse, NoTrailingDot) {
  EXPECT_EQ(parse_hypergraph("e1(a,b),\ne2(b,c),").num_edges(), 2u);
}

TEST(Parse, DuplicateVertex) { EXPECT_THROW(parse_hypergraph("w1(a,a)"), ParseError); }
TEST(Parse, DuplicateEdge) { EXPECT_THROW(parse_hypergraph("w1(a),w1(b)."), ParseError); }
TEST(Parse, EmptyEdge) { EXPECT_THROW(parse_hypergraph("w1()."), ParseError); }
TEST(Parse, Unterminated) { EXPECT_THROW(parse_hypergraph("w1(a,b"), ParseError); }

TEST(Parse, ErrorCarriesPosition) {
  try {
    parse_hypergraph("w1(a,b),\nw2(c,,d).");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_GT(e.column(), 0u);
  }
}

TEST(Parse, SerializeRoundTrip) {
  auto h = fixtures::hp2();
  const std::string text = serialize_hypergraph(h);
  EXPECT_EQ(text.substr(0, 11), "w1(a,b,c),\n");
  EXPECT_EQ(text.substr(text.size() - 9), "w7(c,i).\n");
  EXPECT_EQ(serialize_hypergraph(parse_hypergraph(text)), text);
}

TEST(CoverUnion, Examples) {
  auto h = fixtures::hp_prime();
  EXPECT_EQ(cover_union(h, names("w5 w3")), names("c e h i k"));
  EXPECT_TRUE(cover_union(h, NameSet{}).empty());
  EXPECT_EQ(cover_union(h, names("w6")), names("j k l"));
  EXPECT_THROW(cover_union(h, names("w9")), Error);
}

TEST(Induced, TraceOnSmallSet) {
  auto h = fixtures::hp_prime();
  auto sub = induced_subhypergraph(h, h.vertex_set(names("a d f")));
  EXPECT_EQ(edge_sets(sub), (std::set<NameSet>{names("a"), names("f"), names("a d f")}));
  EXPECT_EQ(sub.num_vertices(), 3u);
}

TEST(Induced, CoalescesWithProvenance) {
  auto h = fixtures::hp_prime();
  auto sub = induced_subhypergraph(h, h.vertex_set(names("a")));
  ASSERT_EQ(sub.num_edges(), 1u);
  EXPECT_EQ(sub.edge_name(0), "w1");
  EXPECT_EQ(sub.provenance(0), names("w1 w4"));
}

TEST(Induced, IdentityAndEmpty) {
  auto h = fixtures::hp_prime();
  EXPECT_EQ(edge_sets(induced_subhypergraph(h, h.all_vertices())), edge_sets(h));
  EXPECT_TRUE(induced_subhypergraph(h, h.no_vertices()).empty());
}

TEST(Induced, TracesIgnoreUnknownNames) {
  auto h = fixtures::hp_prime();
  EXPECT_EQ(induced_traces(h, names("a d f zz")), (std::set<NameSet>{names("a"), names("f"), names("a d f")}));
}

TEST(Components, Examples) {
  auto h = fixtures::hp_prime();
  auto comps = components(h, h.all_edges(), h.vertex_set(names("c e h i k")));
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(h.edge_names_of(comps[0]), names("w1 w2 w4"));
  EXPECT_EQ(h.edge_names_of(comps[1]), names("w6"));

  comps = components(h, h.all_edges(), h.no_vertices());
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].count(), 6u);

  EXPECT_TRUE(components(h, h.all_edges(), h.all_vertices()).empty());
}

TEST(Components, MatchTransitiveClosure) {
  std::mt19937_64 rng(20240611);
  for (int t = 0; t < 300; ++t) {
    auto h = fixtures::random_hypergraph(rng, {6, 8, 3});
    VertexSet u = h.no_vertices();
    for (VertexId v = 0; v < h.num_vertices(); ++v)
      if (rng() % 3 == 0) u.set(v);
    auto comps = components(h, h.all_edges(), u);
    EXPECT_EQ(fixtures::as_family(h, comps), fixtures::closure_components(h, h.all_edges(), u));
    // disjoint, and the union is exactly the edges leaving U
    EdgeSet all = h.no_edges();
    for (const auto& c : comps) {
      EXPECT_FALSE(c.intersects(all));
      all |= c;
    }
    for (EdgeId e = 0; e < h.num_edges(); ++e) EXPECT_EQ(all.test(e), !h.edge(e).is_subset_of(u));
  }
}

TEST(Components, RefineUnderLargerSeparator) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    auto h = fixtures::random_hypergraph(rng, {7, 9, 3});
    VertexSet u = h.no_vertices(), bigger = h.no_vertices();
    for (VertexId v = 0; v < h.num_vertices(); ++v) {
      const auto r = rng() % 4;
      if (r == 0) u.set(v);
      if (r <= 1) bigger.set(v);
    }
    auto coarse = components(h, h.all_edges(), u);
    for (const auto& c : components(h, h.all_edges(), bigger)) {
      bool inside = false;
      for (const auto& d : coarse) inside = inside || c.is_subset_of(d);
      EXPECT_TRUE(inside);
    }
  }
}

TEST(Induced, Idempotent) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    auto h = fixtures::random_hypergraph(rng, {8, 10, 4});
    VertexSet u = h.no_vertices();
    for (VertexId v = 0; v < h.num_vertices(); ++v)
      if (rng() % 2) u.set(v);
    auto once = induced_subhypergraph(h, u);
    auto twice = induced_subhypergraph(once, once.all_vertices());
    EXPECT_EQ(edge_sets(once), edge_sets(twice));
  }
}

TEST(Stats, DegreeAndRank) {
  auto s = degree_and_rank_stats(fixtures::hp_prime());
  EXPECT_EQ(s.avg_degree_ceil, 2u);
  EXPECT_EQ(s.avg_rank_ceil, 3u);
  s = degree_and_rank_stats(parse_hypergraph("e(a)."));
  EXPECT_EQ(s.avg_degree_ceil, 1u);
  EXPECT_EQ(s.avg_rank_ceil, 1u);
  s = degree_and_rank_stats(fixtures::hp());
  EXPECT_EQ(s.avg_degree_ceil, 2u);
  EXPECT_EQ(s.avg_rank_ceil, 3u);
  EXPECT_THROW(degree_and_rank_stats(Hypergraph{}), PreconditionError);
}

TEST(Model, RejectsBadIdentifiers) {
  EXPECT_THROW(Hypergraph::from_edges({{"e 1", {"a"}}}), PreconditionError);
  EXPECT_THROW(Hypergraph::from_edges({{"e1", {"a/b"}}}), PreconditionError);
}
