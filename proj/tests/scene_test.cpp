#include <gtest/gtest.h>

#include <random>

#include "ghdinc/decomposer.hpp"
#include "ghdinc/error.hpp"
#include "ghdinc/scene.hpp"
#include "support/fixtures.hpp"
#include "support/random_instances.hpp"

using namespace ghdinc;
using fixtures::names;

namespace {

std::map<NameSet, std::pair<std::string, SceneKind>> view(const SceneMapping& m) {
  std::map<NameSet, std::pair<std::string, SceneKind>> out;
  for (const auto& [key, e] : m.entries()) out[key] = {e.node_id, e.kind};
  return out;
}

}  // namespace

TEST(SceneCreation, ExampleInstance) {
  auto h = fixtures::hp2();
  auto a = ghdinc::apply(DelConstr{"w7"}, h);
  auto r = scene_creation(fixtures::hp2_ghd(), a.hypergraph, MutableSubtree{{"u1", "u2"}}, a.correspondence);
  using P = std::pair<std::string, SceneKind>;
  EXPECT_EQ(view(r.mapping), (std::map<NameSet, P>{
                                 {names("w1 w2 w3 w4 w5 w6"), P{"u1", SceneKind::InScene}},
                                 {names("w3 w6"), P{"u2", SceneKind::InScene}},
                                 {names("w2 w4"), P{"u3", SceneKind::OutScene}},
                                 {names("w6"), P{"u4", SceneKind::OutScene}},
                             }));
  EXPECT_LE(r.components_computed, 2 * 4u);
}

TEST(SceneCreation, IdentityReplaysEveryNode) {
  auto h = fixtures::hp_prime();
  auto r = scene_creation(fixtures::hp_prime_ghd(), h, MutableSubtree{}, identity_correspondence(h));
  using P = std::pair<std::string, SceneKind>;
  EXPECT_EQ(view(r.mapping), (std::map<NameSet, P>{
                                 {names("w1 w2 w3 w4 w5 w6"), P{"n1", SceneKind::OutScene}},
                                 {names("w1 w2 w4"), P{"n2", SceneKind::OutScene}},
                                 {names("w4"), P{"n3", SceneKind::OutScene}},
                                 {names("w6"), P{"n4", SceneKind::OutScene}},
                             }));
  EXPECT_EQ(r.components_computed, 4u);
}

TEST(SceneCreation, BrokenRootCoverDefersToUpwardPhase) {
  // w3 is the only root cover edge holding i and k; k survives in w6.
  auto h = fixtures::hp_prime();
  auto a = ghdinc::apply(DelConstr{"w3"}, h);
  auto t = minimal_mutable_subtree(fixtures::hp_prime_ghd(), h, a.hypergraph, a.correspondence);
  ASSERT_TRUE(t.contains("n1"));
  auto r = scene_creation(fixtures::hp_prime_ghd(), a.hypergraph, t, a.correspondence);
  EXPECT_EQ(r.mapping.find(a.hypergraph.edge_names()), nullptr);
  for (const auto& [key, e] : r.mapping.entries()) {
    EXPECT_EQ(e.kind, SceneKind::OutScene);
    EXPECT_FALSE(t.contains(e.node_id));
  }
  // k sits in n1 and n4, so both are mutable; the untouched branch is
  // still offered bottom-up
  EXPECT_EQ(t.node_ids, (std::vector<std::string>{"n1", "n4"}));
  ASSERT_NE(r.mapping.find(names("w1 w2 w4")), nullptr);
  EXPECT_EQ(r.mapping.find(names("w1 w2 w4"))->node_id, "n2");
  ASSERT_NE(r.mapping.find(names("w4")), nullptr);
  EXPECT_EQ(r.mapping.find(names("w4"))->node_id, "n3");
  EXPECT_EQ(r.components_computed, 2u);
}

TEST(SceneMapping, InScenesAreHandedOutOnce) {
  SceneMapping m;
  m.set(names("w1"), {"n1", SceneKind::InScene, false});
  m.set(names("w2"), {"n2", SceneKind::OutScene, false});
  EXPECT_EQ(m.take(names("w1")), "n1");
  EXPECT_FALSE(m.take(names("w1")));
  EXPECT_EQ(m.take(names("w2")), "n2");
  EXPECT_EQ(m.take(names("w2")), "n2");
  EXPECT_FALSE(m.take(names("w3")));
  m.set(names("w2"), {"n9", SceneKind::OutScene, false});
  EXPECT_EQ(m.take(names("w2")), "n9");
}

TEST(SceneAdapter, ProposesImagesRestrictedToTheComponent) {
  auto h = fixtures::hp2();
  auto a = ghdinc::apply(DelConstr{"w7"}, h);
  const Hypergraph& dh = a.hypergraph;
  auto r = scene_creation(fixtures::hp2_ghd(), dh, MutableSubtree{{"u1", "u2"}}, a.correspondence);
  SceneAdapter adapter(fixtures::hp2_ghd(), dh, r.mapping, a.correspondence);
  auto p = adapter.lookup(dh.edge_set(names("w3 w6")));
  ASSERT_TRUE(p);
  EXPECT_EQ(dh.names_of(p->bag), names("e i k"));
  EXPECT_EQ(dh.edge_names_of(p->cover), names("w3"));
  EXPECT_FALSE(adapter.lookup(dh.edge_set(names("w3 w6"))));  // in-scene consumed
  EXPECT_TRUE(adapter.lookup(dh.edge_set(names("w6"))));
  EXPECT_TRUE(adapter.lookup(dh.edge_set(names("w6"))));
}

TEST(SceneCreation, ComponentBoundOnRandomInstances) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 200; ++t) {
    auto h = fixtures::random_hypergraph(rng, {8, 12, 4});
    auto g = decompose_minimal(h, 4);
    ASSERT_TRUE(g.ghd);
    for (ModClass c : kAllModClasses) {
      Applied a;
      try {
        a = ghdinc::apply(generate(c, h, rng()), h);
      } catch (const PreconditionError&) {
        continue;
      }
      auto ts = minimal_mutable_subtree(*g.ghd, h, a.hypergraph, a.correspondence);
      auto r = scene_creation(*g.ghd, a.hypergraph, ts, a.correspondence);
      EXPECT_LE(r.components_computed, 2 * g.ghd->size());
      for (const auto& [key, e] : r.mapping.entries())
        EXPECT_EQ(e.kind == SceneKind::InScene, ts.contains(e.node_id));
    }
  }
}
