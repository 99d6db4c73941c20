#include <gtest/gtest.h>

#include "pcqi/embed.hpp"
#include "pcqi/families.hpp"
#include "pcqi/serialization.hpp"

using namespace pcqi;

TEST(Serialization, GraphJsonRoundTrip) {
  for (const auto& g : {families::cycle(5), families::petersen(), families::edgeless(3), families::complete(1)}) {
    EXPECT_EQ(graph_from_json(to_json(g)), g);
    EXPECT_EQ(graph_from_json(json::parse(to_json(g).dump())), g);
  }
}

TEST(Serialization, GraphDotRoundTrip) {
  for (const auto& g : {families::path(4), families::petersen(), families::edgeless(2)})
    EXPECT_EQ(graph_from_dot(to_dot(g)), g);
  const auto chained = graph_from_dot("graph g {\n  a -- b -- c; // tail\n  d;\n}\n");
  EXPECT_EQ(chained, SimplicialGraph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}}));
  const auto quoted = graph_from_dot("graph { \"x y\" -- z }");
  EXPECT_TRUE(quoted.find("x y"));
}

TEST(Serialization, FixtureFiles) {
  const std::string dir = PCQI_FIXTURES;
  EXPECT_EQ(load_graph_text(read_file(dir + "/c5.json")), families::cycle(5));
  EXPECT_TRUE(are_isomorphic(load_graph_text(read_file(dir + "/petersen.json")), families::kneser_5_2()));
  EXPECT_EQ(load_graph_text(read_file(dir + "/path4.dot")), families::path(4));
}

TEST(Serialization, GraphErrors) {
  EXPECT_THROW(graph_from_json(json::parse(R"({"edges":[]})")), FormatError);
  EXPECT_THROW(graph_from_json(json::parse(R"({"vertices":["a"],"edges":[["a"]]})")), FormatError);
  EXPECT_ANY_THROW(graph_from_json(json::parse(R"({"vertices":["a","b"],"edges":[["a","c"]]})")));
  EXPECT_THROW(graph_from_dot("digraph { a -> b }"), FormatError);
  EXPECT_THROW(graph_from_dot("graph { a -- b [color=red] }"), FormatError);
  EXPECT_THROW(graph_from_dot("graph { a -- }"), FormatError);
  EXPECT_THROW(load_graph_text("{ not json"), FormatError);
  EXPECT_THROW(read_file("/nonexistent/pcqi-fixture.json"), Error);
}

TEST(Serialization, ColoredRoundTrip) {
  ColoredGraph g = ColoredGraph::from_graph(families::path(3), {{"a", "p1"}, {"b", "f"}, {"c", "p2"}});
  g.adjacency.set(0, 0);
  const json j = to_json(g);
  EXPECT_EQ(colored_from_json(j), g);
  EXPECT_NE(to_dot(g).find("p2"), std::string::npos);
  json bad = j;
  bad["colors"] = json::array();
  EXPECT_THROW(colored_from_json(bad), FormatError);
}

TEST(Serialization, ComplexRoundTrip) {
  const NTreeComplex k(2, {{"x", "y", "z"}, {"x", "y", "w"}});
  EXPECT_EQ(complex_from_json(to_json(k)), k);
  EXPECT_THROW(complex_from_json(json::parse(R"({"n":-1,"simplices":[]})")), FormatError);
  EXPECT_ANY_THROW(complex_from_json(json::parse(R"({"n":2,"simplices":[["a","b"]]})")));
}

TEST(Serialization, PatchRoundTrip) {
  const Patch p = base_patch(families::cycle(5));
  const Patch q = double_along_star(p, parse_conjugate(p.group(), "v1", ""), 1);
  const Patch r = double_along_star(q, parse_conjugate(q.group(), "v3", "v1"), -1);
  const Patch back = patch_from_json(json::parse(to_json(r).dump()));
  EXPECT_EQ(back.vertices(), r.vertices());
  EXPECT_EQ(back.adjacency(), r.adjacency());
  EXPECT_EQ(back.provenance(), r.provenance());

  json tampered = to_json(q);
  tampered["edges"].push_back({0, 3});
  EXPECT_THROW(patch_from_json(tampered), FormatError);
}

TEST(Serialization, CertificateRoundTrip) {
  const SearchReport s = search_embedding(families::star(3), families::path(3));
  ASSERT_TRUE(s.found);
  const EmbeddingCertificate back = certificate_from_json(json::parse(to_json(*s.certificate).dump()));
  EXPECT_EQ(back, *s.certificate);
  EXPECT_TRUE(verify_certificate(back));

  json missing = to_json(*s.certificate);
  missing["map"].erase("c");
  EXPECT_THROW(certificate_from_json(missing), FormatError);

  const json report = to_json(s);
  EXPECT_EQ(report["found"], true);
  EXPECT_EQ(report["family"], "doubling");
}

TEST(Serialization, RigidityReportShape) {
  const json j = to_json(rigidity_experiment(families::cycle(5), 0));
  EXPECT_EQ(j.dump(), to_json(rigidity_experiment(families::cycle(5), 0)).dump());
  EXPECT_TRUE(j.contains("failures"));
}
