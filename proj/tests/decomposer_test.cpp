#include <gtest/gtest.h>

#include <random>

#include "ghdinc/decomposer.hpp"
#include "ghdinc/error.hpp"
#include "support/fixtures.hpp"
#include "support/random_instances.hpp"

using namespace ghdinc;
using fixtures::names;

TEST(Decompose, RunningExampleWidthTwo) {
  auto h = fixtures::hp_prime();
  auto r = decompose(h, 2);
  ASSERT_EQ(r.outcome, Outcome::Found);
  EXPECT_TRUE(validate(h, *r.ghd, 2).empty());
  EXPECT_TRUE(is_normal_form(h, *r.ghd));
  EXPECT_EQ(r.ghd->root().id, "n1");
}

TEST(Decompose, RunningExampleRejectsWidthOne) {
  auto r = decompose(fixtures::hp_prime(), 1);
  EXPECT_EQ(r.outcome, Outcome::Reject);
  EXPECT_FALSE(r.ghd);
  EXPECT_GT(r.stats.separators_tried, 0u);
}

TEST(Decompose, AcyclicWidthOne) {
  auto h = fixtures::hp();
  auto r = decompose(h, 1);
  ASSERT_EQ(r.outcome, Outcome::Found);
  EXPECT_TRUE(validate(h, *r.ghd, 1).empty());
}

TEST(Decompose, Triangle) {
  EXPECT_EQ(decompose(fixtures::triangle(), 1).outcome, Outcome::Reject);
  EXPECT_EQ(decompose(fixtures::triangle(), 2).outcome, Outcome::Found);
}

TEST(Decompose, Preconditions) {
  EXPECT_THROW(decompose(fixtures::hp(), 0), PreconditionError);
  EXPECT_THROW(decompose(Hypergraph{}, 1), PreconditionError);
}

TEST(Decompose, ExpiredDeadlineTimesOut) {
  auto r = decompose(fixtures::hp_prime(), DecomposeOptions{2, Clock::now(), nullptr});
  EXPECT_EQ(r.outcome, Outcome::Timeout);
}

TEST(Decompose, Minimal) {
  auto r = decompose_minimal(fixtures::hp2(), 4);
  ASSERT_TRUE(r.ghd);
  EXPECT_EQ(r.ghd->width(), 2u);
}

TEST(Enumerator, RootCallYieldsRunningExampleSeparator) {
  auto h = fixtures::hp_prime();
  SearchContext ctx{h.all_edges(), h.no_vertices(), 2};
  SeparatorEnumerator it(h, ctx);
  bool seen = false;
  std::size_t count = 0;
  while (auto sep = it.next()) {
    ++count;
    if (h.edge_names_of(sep->cover) == names("w3 w5")) {
      seen = true;
      EXPECT_EQ(h.names_of(sep->bag), names("c e h i k"));
    }
  }
  EXPECT_TRUE(seen);
  EXPECT_EQ(count, 6u + 15u);
}

TEST(Enumerator, FullWidthIncludesAllEdges) {
  auto h = fixtures::hp_prime();
  SearchContext ctx{h.all_edges(), h.no_vertices(), h.num_edges()};
  SeparatorEnumerator it(h, ctx);
  bool seen = false;
  while (auto sep = it.next()) seen = seen || sep->cover.count() == h.num_edges();
  EXPECT_TRUE(seen);
}

TEST(Enumerator, ConnectorFiltersCovers) {
  auto h = fixtures::hp_prime();
  SearchContext ctx{h.edge_set(names("w6")), h.vertex_set(names("k")), 2};
  SeparatorEnumerator it(h, ctx);
  std::optional<Separator> first_with_w6;
  std::vector<NameSet> order;
  while (auto sep = it.next()) {
    EXPECT_TRUE(sep->bag.test(*h.find_vertex("k")));
    order.push_back(h.edge_names_of(sep->cover));
    if (!first_with_w6 && sep->cover.test(*h.find_edge("w6"))) first_with_w6 = sep;
  }
  ASSERT_TRUE(first_with_w6);
  EXPECT_EQ(h.names_of(first_with_w6->bag), names("j k l"));
  // only w3 and w6 reach {j,k,l}; lexicographic tuples
  EXPECT_EQ(order, (std::vector<NameSet>{names("w3"), names("w3 w6"), names("w6")}));
}

TEST(Decompose, SoundNormalAndMonotone) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 150; ++t) {
    auto h = fixtures::random_hypergraph(rng, {8, 10, 4});
    bool found_before = false;
    for (std::size_t k = 1; k <= 4; ++k) {
      auto r = decompose(h, k);
      if (found_before) EXPECT_EQ(r.outcome, Outcome::Found);
      if (r.ghd) {
        found_before = true;
        EXPECT_TRUE(validate(h, *r.ghd, k).empty());
        EXPECT_TRUE(is_normal_form(h, *r.ghd));
      }
    }
  }
}

TEST(Decompose, SceneProposalIsUsed) {
  // A source that proposes the running-example root for the whole graph.
  struct Root : SceneSource {
    explicit Root(const Hypergraph& h) : h(h) {}
    std::optional<SceneProposal> lookup(const EdgeSet& c) override {
      if (c != h.all_edges()) return std::nullopt;
      return SceneProposal{h.edge_set(names("w3 w5")), h.vertex_set(names("c e h i k")), "r"};
    }
    const Hypergraph& h;
  };
  auto h = fixtures::hp_prime();
  Root source(h);
  auto r = decompose(h, DecomposeOptions{2, std::nullopt, &source});
  ASSERT_TRUE(r.ghd);
  EXPECT_EQ(r.ghd->root().bag, names("c e h i k"));
  EXPECT_EQ(r.stats.scene_hits, 1u);
}
