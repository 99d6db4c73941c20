#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "pcqi/bisim.hpp"
#include "pcqi/families.hpp"
#include "pcqi/ntree.hpp"

using namespace pcqi;

namespace {

NTreeComplex path_complex(std::size_t vertices) {
  std::vector<Simplex> s;
  for (std::size_t i = 0; i + 1 < vertices; ++i)
    s.push_back({std::string(1, static_cast<char>('a' + i)), std::string(1, static_cast<char>('a' + i + 1))});
  return NTreeComplex(1, s);
}

NTreeComplex claw() { return NTreeComplex(1, {{"c", "l1"}, {"c", "l2"}, {"c", "l3"}}); }

std::vector<std::string> colors_of(const ColoredGraph& g) { return g.colors; }

}  // namespace

TEST(NTree, ConstructorNormalisesAndRejects) {
  const NTreeComplex k(2, {{"z", "y", "x"}, {"w", "y", "x"}});
  EXPECT_EQ(k.simplices().front(), (Simplex{"w", "x", "y"}));
  EXPECT_THROW(NTreeComplex(2, {{"a", "b"}}), NTreeError);
  EXPECT_THROW(NTreeComplex(1, {{"a", "a"}}), NTreeError);
  EXPECT_THROW(NTreeComplex(1, {{"a", "b"}, {"b", "a"}}), NTreeError);
  EXPECT_THROW(NTreeComplex(0, {{"a"}}), NTreeError);
}

TEST(NTree, ValidateExamples) {
  EXPECT_TRUE(validate_ntree(NTreeComplex(2, {{"x", "y", "z"}})).valid);
  EXPECT_TRUE(validate_ntree(NTreeComplex(3, {{"a", "b", "c", "d"}})).valid);
  const auto c4 = validate_ntree(NTreeComplex(1, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}}));
  EXPECT_FALSE(c4.valid);
  EXPECT_FALSE(c4.reason.empty());
  EXPECT_TRUE(validate_ntree(NTreeComplex(2, {{"x", "y", "z"}, {"x", "y", "w"}})).valid);
  EXPECT_FALSE(validate_ntree(NTreeComplex(2, {{"x", "y", "z"}, {"x", "u", "w"}})).valid);
  EXPECT_FALSE(validate_ntree(NTreeComplex(1, {{"a", "b"}, {"c", "d"}})).valid);
}

TEST(NTree, ValidateAgreesWithGluingOracle) {
  // Every set of at most four n-simplices on a small vertex pool.
  for (std::size_t n : {1u, 2u, 3u}) {
    const std::size_t pool = n + 4;
    std::vector<Simplex> all;
    for (std::uint32_t mask = 0; mask < (1u << pool); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != n + 1) continue;
      Simplex s;
      for (std::size_t i = 0; i < pool; ++i)
        if (mask >> i & 1u) s.push_back(std::string(1, static_cast<char>('a' + i)));
      all.push_back(s);
    }
    std::size_t valid = 0, checked = 0;
    std::function<void(std::size_t, std::vector<Simplex>&)> rec = [&](std::size_t from, std::vector<Simplex>& pick) {
      if (!pick.empty()) {
        ++checked;
        const bool got = validate_ntree(NTreeComplex(n, pick)).valid;
        const bool want = oracle::is_ntree_by_gluing(n, pick);
        EXPECT_EQ(got, want) << "n=" << n << " first " << simplex_name(pick.front()) << " size " << pick.size();
        valid += want;
      }
      if (pick.size() == 4) return;
      for (std::size_t i = from; i < all.size(); ++i) {
        pick.push_back(all[i]);
        rec(i + 1, pick);
        pick.pop_back();
      }
    };
    std::vector<Simplex> pick;
    rec(0, pick);
    EXPECT_GT(valid, 0u);
    EXPECT_GT(checked, valid);
  }
}

TEST(NTree, ColoringExamples) {
  const auto col = vertex_coloring(path_complex(4));
  EXPECT_EQ(col, (VertexColoring{{"a", 1}, {"b", 2}, {"c", 1}, {"d", 2}}));
  EXPECT_EQ(vertex_coloring(NTreeComplex(2, {{"x", "y", "z"}})),
            (VertexColoring{{"x", 1}, {"y", 2}, {"z", 3}}));
  const auto two = vertex_coloring(NTreeComplex(2, {{"x", "y", "z"}, {"x", "y", "w"}}));
  EXPECT_EQ(two.at("w"), two.at("z"));
  EXPECT_NE(two.at("x"), two.at("y"));
}

TEST(NTree, GphExamples) {
  const Gph p4 = build_gph(path_complex(4));
  EXPECT_EQ(p4.graph.names, (std::vector<std::string>{"p:b", "p:c", "f:b,c"}));
  EXPECT_EQ(colors_of(p4.graph), (std::vector<std::string>{"p1", "p2", "f"}));
  EXPECT_TRUE(p4.graph.adjacency(0, 2));
  EXPECT_TRUE(p4.graph.adjacency(1, 2));

  const Gph star = build_gph(claw());
  EXPECT_EQ(star.graph.order(), 1u);
  EXPECT_TRUE(star.f_simplices.empty());

  const Gph p5 = build_gph(path_complex(5));
  EXPECT_EQ(p5.graph.order(), 5u);
  std::vector<std::string> p_labels;
  for (std::size_t i = 0; i < p5.pieces.size(); ++i) p_labels.push_back(p5.graph.colors[i]);
  EXPECT_EQ(p_labels, (std::vector<std::string>{"p1", "p2", "p1"}));
}

TEST(NTree, GphIsBipartiteTree) {
  const NTreeComplex k(2, {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "e"}, {"b", "c", "f"}, {"a", "b", "g"}});
  ASSERT_TRUE(validate_ntree(k).valid);
  const Gph g = build_gph(k);
  std::size_t edges = 0;
  for (VertexId u = 0; u < g.graph.order(); ++u)
    for (VertexId v = u + 1; v < g.graph.order(); ++v)
      if (g.graph.adjacency(u, v)) {
        ++edges;
        EXPECT_NE(g.graph.colors[u] == "f", g.graph.colors[v] == "f");
      }
  EXPECT_EQ(edges + 1, g.graph.order());
  EXPECT_TRUE(is_connected(g.graph));
  for (VertexId v = g.pieces.size(); v < g.graph.order(); ++v) {
    const std::size_t deg = g.graph.adjacency.degree(v);
    EXPECT_GE(deg, 2u);
    EXPECT_LE(deg, 3u);
    std::set<std::string> labels;
    for (VertexId u : g.graph.adjacency.neighbors(v)) labels.insert(g.graph.colors[u]);
    EXPECT_EQ(labels.size(), deg);
  }
}

TEST(NTree, ColoringIsProperAndRejectsBadInput) {
  const NTreeComplex k(2, {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "e"}, {"c", "e", "f"}});
  const auto col = vertex_coloring(k);
  for (const auto& s : k.simplices()) {
    std::set<std::size_t> seen;
    for (const auto& v : s) seen.insert(col.at(v));
    EXPECT_EQ(seen, (std::set<std::size_t>{1, 2, 3}));
  }
  VertexColoring bad = col;
  bad["d"] = bad["a"];
  EXPECT_THROW(build_gph(k, bad), NTreeError);
}

TEST(NTree, DoubleExamples) {
  const NTreeComplex simplex(2, {{"x", "y", "z"}});
  EXPECT_EQ(double_ntree(simplex, "x").complex, simplex);

  const NTreeDouble d = double_ntree(path_complex(3), "a");
  EXPECT_TRUE(validate_ntree(d.complex).valid);
  EXPECT_TRUE(are_isomorphic(d.complex.one_skeleton(), families::star(3)));
  EXPECT_EQ(d.fold.at("c'"), "c");

  const NTreeComplex p4 = path_complex(4);
  const NTreeDouble db = double_ntree(p4, "b");
  const auto col = vertex_coloring(p4);
  EXPECT_TRUE(bisimilar(build_gph(db.complex, pull_back(col, db.fold)).graph, build_gph(p4, col).graph).bisimilar);
}

TEST(NTree, FoldIsWeakCovering) {
  const NTreeComplex p4 = path_complex(4);
  const NTreeDouble db = double_ntree(p4, "b");
  const auto col = vertex_coloring(p4);
  const Gph source = build_gph(db.complex, pull_back(col, db.fold));
  const Gph target = build_gph(p4, col);
  const auto f = gph_map(source, target, db.fold);
  const auto check = check_weak_covering(f, source.graph, target.graph);
  EXPECT_TRUE(check.ok) << check.violation;
  EXPECT_TRUE(check.surjective);
  EXPECT_TRUE(oracle::is_weak_covering(f, source.graph, target.graph));
}

TEST(NTree, WeakCoverToEmbeddingExamples) {
  const NTreeComplex p4 = path_complex(4);
  const Gph g = build_gph(p4);
  std::vector<VertexId> id(g.graph.order());
  std::iota(id.begin(), id.end(), 0);
  const auto cert = weak_cover_to_embedding(p4, p4, id);
  EXPECT_TRUE(verify_certificate(cert));
  for (const auto& x : cert.images) EXPECT_TRUE(x.conjugator.empty());

  // Default colourings label the claw's piece p2 and the path's p1, so
  // recolour the claw to make the one-vertex map colour-preserving.
  EXPECT_THROW(weak_cover_to_embedding(claw(), path_complex(3), {0}), NTreeError);
  const VertexColoring claw_col{{"c", 2}, {"l1", 1}, {"l2", 1}, {"l3", 1}};
  const auto claw_cert =
      weak_cover_to_embedding(claw(), claw_col, path_complex(3), vertex_coloring(path_complex(3)), {0});
  EXPECT_TRUE(verify_certificate(claw_cert));
  std::size_t conjugated = 0;
  for (const auto& x : claw_cert.images) conjugated += !x.conjugator.empty();
  EXPECT_EQ(conjugated, 1u);

  const NTreeComplex p5 = path_complex(5);
  // p1 f p2 f p1 folds onto p1 f p2.
  const auto five = weak_cover_to_embedding(p5, p4, {0, 1, 0, 2, 2});
  EXPECT_TRUE(verify_certificate(five));

  EXPECT_THROW(weak_cover_to_embedding(p5, p4, {0, 0, 0, 2, 2}), NTreeError);
}

TEST(NTree, AsNtree) {
  const auto t = as_ntree(families::path(4));
  ASSERT_TRUE(t);
  EXPECT_EQ(t->dimension(), 1u);
  const SimplicialGraph two({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
  const auto k = as_ntree(two);
  ASSERT_TRUE(k);
  EXPECT_EQ(k->dimension(), 2u);
  EXPECT_FALSE(as_ntree(families::cycle(5)));
  EXPECT_FALSE(as_ntree(families::cycle(4)));
  EXPECT_FALSE(as_ntree(families::complete(1)));
}
