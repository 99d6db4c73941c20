#include <gtest/gtest.h>

#include "pcqi/bisim.hpp"
#include "pcqi/classifier.hpp"
#include "pcqi/families.hpp"
#include "pcqi/ntree.hpp"

using namespace pcqi;

namespace {

SimplicialGraph disjoint_edges() { return SimplicialGraph({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}); }

std::vector<std::string> names(const SimplicialGraph& g) { return g.vertices(); }

SimplicialGraph pentagon_with_tail() {
  return SimplicialGraph({"v1", "v2", "v3", "v4", "v5", "t"},
                         {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v5"}, {"v5", "v1"}, {"v1", "t"}});
}

}  // namespace

TEST(Classifier, DromsExamples) {
  const auto k3 = droms_decompose(families::complete(3));
  EXPECT_EQ(k3.clique_rank, 3u);
  EXPECT_TRUE(k3.components.empty());

  const auto claw = droms_decompose(families::star(3));
  EXPECT_EQ(claw.clique_rank, 1u);
  EXPECT_EQ(claw.universal, (std::vector<std::string>{"c"}));
  ASSERT_EQ(claw.components.size(), 3u);
  for (const auto& c : claw.components) EXPECT_EQ(c.order(), 1u);

  const auto two = droms_decompose(disjoint_edges());
  EXPECT_EQ(two.clique_rank, 0u);
  ASSERT_EQ(two.components.size(), 2u);
  EXPECT_EQ(names(two.components[0]), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(names(two.components[1]), (std::vector<std::string>{"c", "d"}));

  EXPECT_THROW(droms_decompose(families::path(4)), GraphError);
}

TEST(Classifier, DromsReassembles) {
  const SimplicialGraph g({"u", "a", "b", "c", "d"},
                          {{"u", "a"}, {"u", "b"}, {"u", "c"}, {"u", "d"}, {"a", "b"}, {"c", "d"}});
  const auto d = droms_decompose(g);
  VertexSet universal;
  for (const auto& n : d.universal) universal.push_back(g.index_of(n));
  const SimplicialGraph rest = g.without(universal);
  std::size_t total = 0;
  for (const auto& c : d.components) {
    total += c.order();
    EXPECT_TRUE(is_triangle_built(c));
    EXPECT_TRUE(is_connected(c));
  }
  EXPECT_EQ(total, rest.order());
}

TEST(Classifier, ClassesOfFamilies) {
  EXPECT_EQ(classify_graph(families::complete(3)).classes.front(), GraphClass::clique);
  EXPECT_EQ(classify_graph(families::edgeless(3)).classes.front(), GraphClass::free);
  EXPECT_EQ(classify_graph(families::complete_bipartite(2, 3)).classes.front(), GraphClass::free_product);
  EXPECT_EQ(classify_graph(families::star(4)).classes.front(), GraphClass::z_times_free);
  EXPECT_EQ(classify_graph(families::path(5)).classes.front(), GraphClass::tree3);
  EXPECT_EQ(classify_graph(families::petersen()).classes.front(), GraphClass::atomic);
  const auto two_tree = classify_graph(
      SimplicialGraph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"b", "d"}, {"c", "d"}}));
  EXPECT_EQ(two_tree.classes.front(), GraphClass::ntree);
  EXPECT_EQ(two_tree.ntree_dimension, 2u);
  EXPECT_EQ(classify_graph(disjoint_edges()).classes.front(), GraphClass::triangle_built);
  EXPECT_EQ(classify_graph(families::cycle(6)).classes.front(), GraphClass::atomic);
  EXPECT_EQ(classify_graph(families::cycle(4)).classes.front(), GraphClass::free_product);
  EXPECT_TRUE(classify_graph(pentagon_with_tail()).classes.empty());
}

TEST(Classifier, PairExamples) {
  EXPECT_EQ(classify_pair(families::star(2), families::star(5)).verdict, Verdict::qi);
  EXPECT_EQ(classify_pair(families::path(4), families::tree_from_pruefer({0, 0, 3, 4})).verdict, Verdict::qi);
  const auto atomic = classify_pair(families::cycle(5), families::petersen());
  EXPECT_EQ(atomic.verdict, Verdict::not_qi);
  EXPECT_EQ(atomic.class_used, "atomic");
  EXPECT_EQ(classify_pair(families::edgeless(2), families::edgeless(3)).verdict, Verdict::qi);
  EXPECT_EQ(classify_pair(families::complete(3), families::complete(4)).verdict, Verdict::not_qi);
}

TEST(Classifier, AtomicIsomorphismCertificate) {
  const auto r = classify_pair(families::petersen(), families::kneser_5_2());
  EXPECT_EQ(r.verdict, Verdict::qi);
  EXPECT_EQ(r.certificate["isomorphism"].size(), 10u);
}

TEST(Classifier, UnknownOutsideCoveredClasses) {
  const auto r = classify_pair(pentagon_with_tail(), pentagon_with_tail());
  EXPECT_EQ(r.verdict, Verdict::unknown);
  EXPECT_TRUE(r.class_used.empty());
  EXPECT_EQ(classify_pair(families::cycle(5), families::wedge_c5_c5()).verdict, Verdict::unknown);
}

TEST(Classifier, Symmetric) {
  const std::vector<SimplicialGraph> gs{
      families::complete(1), families::complete(2), families::edgeless(2), families::star(3),
      families::path(4), families::path(6), families::cycle(5), families::petersen(),
      families::complete_bipartite(2, 2), disjoint_edges(), families::cycle(6), families::wedge_c5_c5(),
      pentagon_with_tail()};
  for (const auto& a : gs)
    for (const auto& b : gs) {
      const auto ab = classify_pair(a, b), ba = classify_pair(b, a);
      EXPECT_EQ(ab.verdict, ba.verdict);
      EXPECT_EQ(ab.class_used, ba.class_used);
    }
}

TEST(Classifier, TriangleBuiltKeys) {
  // Z^2 * Z^2 and Z^2 * Z are quasi-isometric; Z^2 * Z^2 and Z^2 are not.
  const SimplicialGraph edge_and_point({"a", "b", "c"}, {{"a", "b"}});
  EXPECT_EQ(classify_pair(disjoint_edges(), edge_and_point).verdict, Verdict::qi);
  EXPECT_EQ(classify_pair(disjoint_edges(), families::complete(2)).verdict, Verdict::not_qi);
  // Z x (Z^2 * Z) versus Z x (Z^2 * Z^2): same key. Neither is an n-tree.
  const SimplicialGraph cone1({"u", "a", "b", "c"}, {{"u", "a"}, {"u", "b"}, {"u", "c"}, {"a", "b"}});
  const SimplicialGraph cone2({"u", "a", "b", "c", "d"},
                              {{"u", "a"}, {"u", "b"}, {"u", "c"}, {"u", "d"}, {"a", "b"}, {"c", "d"}});
  const auto r = classify_pair(cone1, cone2);
  EXPECT_EQ(r.class_used, "triangle_built");
  EXPECT_EQ(r.verdict, Verdict::qi);
}

TEST(Classifier, NtreeRouteMatchesBisim) {
  const SimplicialGraph fan({"a", "b", "c", "d", "e"},
                            {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"a", "e"}, {"b", "c"}, {"c", "d"}, {"d", "e"}});
  const SimplicialGraph book({"a", "b", "c", "d", "e"},
                             {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"a", "e"}, {"b", "c"}, {"b", "d"}, {"b", "e"}});
  for (const auto& [x, y] : std::vector<std::pair<SimplicialGraph, SimplicialGraph>>{{fan, book}, {fan, fan}}) {
    const auto r = classify_pair(x, y);
    ASSERT_EQ(r.class_used, "ntree");
    const bool bis = bisimilar_up_to_pcolor_permutation(build_gph(*as_ntree(x)).graph,
                                                       build_gph(*as_ntree(y)).graph, 2)
                         .bisimilar;
    EXPECT_EQ(r.verdict == Verdict::qi, bis);
  }
}

TEST(Classifier, CriterionReports) {
  const auto c5 = families::cycle(5);
  const auto same = qi_via_extension_criterion(c5, c5);
  EXPECT_EQ(same.classification.verdict, Verdict::qi);
  EXPECT_TRUE(same.embeddings.both_found());
  EXPECT_TRUE(same.consistent);

  const auto wedge = qi_via_extension_criterion(families::wedge_c5_c5(), c5);
  EXPECT_TRUE(wedge.embeddings.both_found());
  ASSERT_TRUE(wedge.fixture_verdict);
  EXPECT_EQ(*wedge.fixture_verdict, Verdict::not_qi);
  bool flagged = false;
  for (const auto& f : wedge.flags) flagged = flagged || f.find("known counterexample") != std::string::npos;
  EXPECT_TRUE(flagged);

  const auto trees = qi_via_extension_criterion(families::path(4), families::path(6));
  EXPECT_EQ(trees.classification.verdict, Verdict::qi);
  EXPECT_TRUE(trees.embeddings.both_found());

  const auto split = qi_via_extension_criterion(families::edgeless(2), families::path(2));
  bool disconnected = false;
  for (const auto& f : split.flags) disconnected = disconnected || f.find("disconnected") != std::string::npos;
  EXPECT_TRUE(disconnected);
}

TEST(Classifier, JsonShape) {
  const auto j = to_json(classify_pair(families::cycle(5), families::petersen()));
  EXPECT_EQ(j["verdict"], "NotQI");
  EXPECT_EQ(j["class"], "atomic");
  EXPECT_TRUE(j.contains("certificate"));
  EXPECT_TRUE(j.contains("explanation"));
}
