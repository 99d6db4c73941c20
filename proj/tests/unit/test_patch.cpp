#include <gtest/gtest.h>

#include "pcqi/families.hpp"
#include "pcqi/patch.hpp"

using namespace pcqi;

namespace {

std::shared_ptr<const PcGroup> group_of(const SimplicialGraph& g) { return std::make_shared<const PcGroup>(g); }

ConjugateGenerator gen(const PcGroup& g, std::string_view v) { return parse_conjugate(g, v, ""); }

}  // namespace

TEST(Patch, BasePatchExamples) {
  for (const auto& g : {families::complete(3), families::cycle(5), families::complete(1)}) {
    const Patch p = base_patch(g);
    EXPECT_EQ(p.size(), g.order());
    EXPECT_TRUE(are_isomorphic(p.to_graph(), g));
    EXPECT_TRUE(p.self_check());
  }
  EXPECT_THROW(base_patch(SimplicialGraph()), PatchError);
}

TEST(Patch, CliqueDoublingIsFixed) {
  const Patch p = base_patch(families::complete(3));
  for (VertexId v = 0; v < 3; ++v) {
    const Patch q = double_along_star(p, p.vertex(v), 1);
    EXPECT_EQ(q.size(), 3u);
    EXPECT_TRUE(are_isomorphic(q.to_graph(), families::complete(3)));
  }
}

TEST(Patch, PathDoubledAtEndIsClaw) {
  const Patch p = base_patch(families::path(3));
  const Patch q = double_along_star(p, gen(p.group(), "a"), 1);
  const SimplicialGraph g = q.to_graph();
  EXPECT_TRUE(are_isomorphic(g, families::star(3)));
  EXPECT_EQ(g.vertices(), (std::vector<std::string>{"a", "b", "c", "c^{a}"}));
  EXPECT_EQ(g.degree(g.index_of("b")), 3u);
}

TEST(Patch, PentagonDoubledAtVertex) {
  const Patch p = base_patch(families::cycle(5));
  const Patch q = double_along_star(p, gen(p.group(), "v1"), 1);
  // v1, v2, v5 stay put; v3 and v4 get copies.
  EXPECT_EQ(q.size(), 7u);
  EXPECT_EQ(q.to_graph().vertices(),
            (std::vector<std::string>{"v1", "v2", "v3", "v3^{v1}", "v4", "v4^{v1}", "v5"}));
  EXPECT_EQ(girth(q.to_graph()), 5u);
  EXPECT_TRUE(q.self_check());
}

TEST(Patch, DoublingContainsOriginalAndMeetsInStar) {
  const Patch p = base_patch(families::petersen());
  const ConjugateGenerator center = gen(p.group(), "o0");
  const Patch q = double_along_star(p, center, 1);
  // The old patch is an induced subgraph at the same indices.
  for (std::size_t i = 0; i < p.size(); ++i) {
    EXPECT_EQ(q.vertex(i), p.vertex(i));
    for (std::size_t j = 0; j < p.size(); ++j) EXPECT_EQ(q.adjacent(i, j), p.adjacent(i, j));
  }
  const VertexSet st = p.star_of(*p.find(center));
  EXPECT_EQ(q.size(), 2 * p.size() - st.size());
}

TEST(Patch, StaleExponentAndMissingCenterRejected) {
  const Patch p = base_patch(families::cycle(5));
  const ConjugateGenerator v1 = gen(p.group(), "v1");
  const Patch q = double_along_star(p, v1, 1);
  EXPECT_THROW(double_along_star(q, v1, 1), PatchError);
  EXPECT_EQ(fresh_exponent(q, v1), 2);
  EXPECT_NO_THROW(double_along_star(q, v1, 2));
  EXPECT_THROW(double_along_star(p, v1, 0), PatchError);
  EXPECT_THROW(double_along_star(p, parse_conjugate(p.group(), "v3", "v1 v3"), 1), PatchError);
}

TEST(Patch, BallExamples) {
  const auto c5 = families::cycle(5);
  const Patch b0 = ball_patch(c5, 0);
  EXPECT_EQ(b0.to_graph(), base_patch(c5).to_graph());

  const Patch e = ball_patch(families::edgeless(2), 1);
  EXPECT_EQ(e.to_graph().vertices(),
            (std::vector<std::string>{"e1", "e1^{e2^-1}", "e1^{e2}", "e2", "e2^{e1^-1}", "e2^{e1}"}));
  EXPECT_EQ(e.to_graph().edge_count(), 0u);

  const Patch j = ball_patch(families::complete_bipartite(2, 2), 1);
  EXPECT_EQ(classify_shape(j.to_graph()).kind, ShapeKind::join_of_two_edgeless);
  EXPECT_TRUE(j.self_check());
}

TEST(Patch, BallBudget) {
  EXPECT_THROW(ball_patch(families::petersen(), 3, 100), BudgetExceeded);
  try {
    ball_patch(families::petersen(), 3, 100);
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.budget(), 100u);
  }
}

TEST(Patch, AtomicFamilyKeepsGirthAndBaseConjugatesMeetInStars) {
  const auto c5 = families::cycle(5);
  const auto group = group_of(c5);
  std::size_t seen = 0;
  enumerate_doubling_family(group, 2, [&](const Patch& p, std::size_t) {
    ++seen;
    EXPECT_GE(girth(p.to_graph()).value_or(99), 5u);
    EXPECT_TRUE(p.self_check());
    // Translates of the base copy that sit entirely inside the patch.
    std::vector<std::vector<std::size_t>> copies;
    for (const auto& x : p.vertices()) {
      std::vector<std::size_t> idx;
      for (VertexId v = 0; v < c5.order(); ++v)
        if (auto i = p.find(make_conjugate(*group, v, x.conjugator.letters()))) idx.push_back(*i);
      if (idx.size() == c5.order()) {
        std::sort(idx.begin(), idx.end());
        copies.push_back(idx);
      }
    }
    for (const auto& a : copies)
      for (const auto& b : copies) {
        if (a == b) continue;
        std::vector<std::size_t> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        if (common.empty()) continue;
        bool in_some_star = false;
        for (std::size_t c = 0; c < p.size() && !in_some_star; ++c) {
          const VertexSet st = p.star_of(c);
          in_some_star = std::includes(st.begin(), st.end(), common.begin(), common.end());
        }
        EXPECT_TRUE(in_some_star);
      }
    return true;
  });
  EXPECT_GT(seen, 1u);
}

TEST(Patch, ChordalFamilyStaysChordal) {
  const SimplicialGraph g({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"c", "d"}});
  ASSERT_TRUE(is_chordal(g));
  enumerate_doubling_family(group_of(g), 3, [&](const Patch& p, std::size_t) {
    EXPECT_TRUE(is_chordal(p.to_graph()));
    return true;
  });
}

TEST(Patch, FromVerticesRecomputesEdges) {
  const auto group = group_of(families::path(3));
  std::vector<ConjugateGenerator> vs{gen(*group, "c"), gen(*group, "b"), parse_conjugate(*group, "c", "a")};
  const Patch p = Patch::from_vertices(group, vs, {});
  EXPECT_TRUE(p.self_check());
  EXPECT_EQ(p.to_graph().edge_count(), 2u);
  vs.push_back(gen(*group, "b"));
  EXPECT_THROW(Patch::from_vertices(group, vs, {}), PatchError);
}

TEST(Patch, ConjugateNames) {
  const PcGroup g(families::path(3));
  const auto x = parse_conjugate(g, "c", "a b c");
  // b moves to the front and lies in St(c); the trailing c cannot pass a.
  EXPECT_EQ(to_string(g, x), "c^{a c}");
  EXPECT_TRUE(conjugates_commute(g, gen(g, "b"), x));
  EXPECT_FALSE(conjugates_commute(g, gen(g, "c"), x));
}
