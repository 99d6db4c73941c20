#include "pcqi/classifier.hpp"

#include <algorithm>
#include <set>

#include "pcqi/bisim.hpp"
#include "pcqi/families.hpp"
#include "pcqi/ntree.hpp"
#include "pcqi/serialization.hpp"

namespace pcqi {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::qi: return "QI";
    case Verdict::not_qi: return "NotQI";
    case Verdict::unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::clique: return "clique";
    case GraphClass::free: return "free";
    case GraphClass::free_product: return "free_times_free";
    case GraphClass::z_times_free: return "z_times_free";
    case GraphClass::tree3: return "tree_diameter_3";
    case GraphClass::atomic: return "atomic";
    case GraphClass::ntree: return "ntree";
    case GraphClass::triangle_built: return "triangle_built";
  }
  return "";
}

DromsDecomposition droms_decompose(const SimplicialGraph& g) {
  if (!is_triangle_built(g)) throw GraphError("graph is not triangle-built");
  DromsDecomposition d;
  VertexSet universal;
  for (VertexId v = 0; v < g.order(); ++v)
    if (g.degree(v) + 1 == g.order()) {
      universal.push_back(v);
      d.universal.push_back(g.name(v));
    }
  d.clique_rank = universal.size();
  const SimplicialGraph rest = g.without(universal);
  for (const auto& comp : connected_components(rest)) d.components.push_back(rest.induced(comp));
  std::sort(d.components.begin(), d.components.end(),
            [](const SimplicialGraph& a, const SimplicialGraph& b) { return a.name(0) < b.name(0); });
  return d;
}

GraphClasses classify_graph(const SimplicialGraph& g) {
  GraphClasses out;
  if (g.empty()) return out;
  const ShapeVerdict shape = classify_shape(g);
  const bool tree = is_connected(g) && g.edge_count() + 1 == g.order();
  if (shape.kind == ShapeKind::clique) out.classes.push_back(GraphClass::clique);
  if (shape.kind == ShapeKind::edgeless && g.order() >= 2) out.classes.push_back(GraphClass::free);
  if (shape.kind == ShapeKind::join_of_two_edgeless && shape.first >= 2 && shape.second >= 2)
    out.classes.push_back(GraphClass::free_product);
  const auto diam = tree ? diameter(g) : std::nullopt;
  if (tree && diam == 2) out.classes.push_back(GraphClass::z_times_free);
  if (tree && diam && *diam >= 3) out.classes.push_back(GraphClass::tree3);
  if (is_atomic(g)) out.classes.push_back(GraphClass::atomic);
  if (const auto k = as_ntree(g)) {
    out.classes.push_back(GraphClass::ntree);
    out.ntree_dimension = k->dimension();
  }
  if (is_triangle_built(g)) out.classes.push_back(GraphClass::triangle_built);
  return out;
}

namespace {

bool has(const GraphClasses& c, GraphClass x) {
  return std::find(c.classes.begin(), c.classes.end(), x) != c.classes.end();
}

// Recursive invariant of a triangle-built graph: clique rank, whether the
// rest is a nontrivial free product, and the set of invariants of its
// components with at least two vertices.
std::string droms_key(const SimplicialGraph& g) {
  const DromsDecomposition d = droms_decompose(g);
  std::set<std::string> parts;
  for (const auto& c : d.components)
    if (c.order() >= 2) parts.insert(droms_key(c));
  std::string out = "(" + std::to_string(d.clique_rank) + (d.components.size() >= 2 ? ",*" : ",-") + ",{";
  bool first = true;
  for (const auto& p : parts) {
    if (!first) out += ";";
    out += p;
    first = false;
  }
  return out + "})";
}

QIVerdict make(Verdict v, GraphClass c, nlohmann::json cert, std::string why) {
  return QIVerdict{v, to_string(c), std::move(cert), std::move(why)};
}

std::string shape_text(const SimplicialGraph& g) { return to_string(classify_shape(g)); }

}  // namespace

QIVerdict classify_pair(const SimplicialGraph& a, const SimplicialGraph& b) {
  const GraphClasses ca = classify_graph(a);
  const GraphClasses cb = classify_graph(b);
  if (ca.classes.empty() || cb.classes.empty())
    return QIVerdict{Verdict::unknown, "", nullptr,
                     std::string(ca.classes.empty() ? "first" : "second") + " graph is in no covered class"};

  const nlohmann::json shapes = {{"shape_a", shape_text(a)}, {"shape_b", shape_text(b)}};
  for (GraphClass u : {GraphClass::clique, GraphClass::free, GraphClass::free_product,
                       GraphClass::z_times_free, GraphClass::tree3}) {
    const bool in_a = has(ca, u), in_b = has(cb, u);
    if (in_a != in_b)
      return make(Verdict::not_qi, u, shapes,
                  std::string(in_a ? "first" : "second") + " graph is " + to_string(u) +
                      " and the other is not; this class is closed under quasi-isometry");
    if (!in_a) continue;
    if (u == GraphClass::clique) {
      const bool same = a.order() == b.order();
      return make(same ? Verdict::qi : Verdict::not_qi, u,
                  {{"rank_a", a.order()}, {"rank_b", b.order()}},
                  same ? "free abelian groups of equal rank" : "free abelian groups of different rank");
    }
    return make(Verdict::qi, u, shapes, "both graphs are " + to_string(u));
  }

  if (has(ca, GraphClass::atomic) && has(cb, GraphClass::atomic)) {
    if (const auto iso = are_isomorphic(a, b)) {
      nlohmann::json map = nlohmann::json::object();
      for (VertexId v = 0; v < a.order(); ++v) map[a.name(v)] = b.name(iso->map[v]);
      return make(Verdict::qi, GraphClass::atomic, {{"isomorphism", map}}, "isomorphic atomic graphs");
    }
    return make(Verdict::not_qi, GraphClass::atomic, nullptr, "non-isomorphic atomic graphs");
  }

  if (has(ca, GraphClass::ntree) && has(cb, GraphClass::ntree) &&
      ca.ntree_dimension == cb.ntree_dimension) {
    const std::size_t n = ca.ntree_dimension;
    const Gph ga = build_gph(*as_ntree(a));
    const Gph gb = build_gph(*as_ntree(b));
    const auto r = bisimilar_up_to_pcolor_permutation(ga.graph, gb.graph, n);
    if (!r.bisimilar)
      return make(Verdict::not_qi, GraphClass::ntree, {{"n", n}},
                  "gph invariants are not bisimilar under any p-colour permutation");
    return make(Verdict::qi, GraphClass::ntree,
                {{"n", n},
                 {"permutation", r.permutation},
                 {"common_quotient", to_json(*r.witness.common)}},
                "gph invariants are bisimilar after permuting p-colours");
  }

  if (has(ca, GraphClass::triangle_built) && has(cb, GraphClass::triangle_built)) {
    const std::string ka = droms_key(a), kb = droms_key(b);
    return make(ka == kb ? Verdict::qi : Verdict::not_qi, GraphClass::triangle_built,
                {{"key_a", ka}, {"key_b", kb}},
                ka == kb ? "equal clique rank, free-product status and factor classes"
                         : "decompositions differ in clique rank, free-product status or factor classes");
  }

  return QIVerdict{Verdict::unknown, "", nullptr, "the graphs share no covered class"};
}

std::optional<Verdict> known_fixture_verdict(const SimplicialGraph& a, const SimplicialGraph& b) {
  static const SimplicialGraph wedge = families::wedge_c5_c5();
  static const SimplicialGraph c5 = families::cycle(5);
  if ((are_isomorphic(a, wedge) && are_isomorphic(b, c5)) ||
      (are_isomorphic(a, c5) && are_isomorphic(b, wedge)))
    return Verdict::not_qi;
  return std::nullopt;
}

CriterionReport qi_via_extension_criterion(const SimplicialGraph& a, const SimplicialGraph& b,
                                           const SearchBudget& budget) {
  CriterionReport r;
  r.classification = classify_pair(a, b);
  r.fixture_verdict = known_fixture_verdict(a, b);
  r.embeddings = mutual_embeddability(a, b, budget);
  const bool both = r.embeddings.both_found();

  if (r.fixture_verdict) {
    r.flags.push_back("recorded verdict " + to_string(*r.fixture_verdict) + " for this pair");
    if (*r.fixture_verdict == Verdict::not_qi && both)
      r.flags.push_back("known counterexample: mutual embeddability holds but the groups are not quasi-isometric");
  }
  if (is_connected(a) != is_connected(b))
    r.flags.push_back("exactly one of the graphs is disconnected");

  const Verdict v = r.classification.verdict;
  if (v == Verdict::qi && !both) {
    r.consistent = false;
    r.flags.push_back("QI verdict but mutual embeddability was not found within the budget");
  }
  if (v == Verdict::not_qi && both && !r.fixture_verdict) {
    r.consistent = false;
    r.flags.push_back("NotQI verdict although both embeddings were found");
  }
  return r;
}

nlohmann::json to_json(const QIVerdict& v) {
  return {{"verdict", to_string(v.verdict)},
          {"class", v.class_used},
          {"certificate", v.certificate},
          {"explanation", v.explanation}};
}

nlohmann::json to_json(const CriterionReport& r) {
  nlohmann::json out = {{"classification", to_json(r.classification)},
                        {"embeddings", to_json(r.embeddings)},
                        {"flags", r.flags},
                        {"consistent", r.consistent},
                        {"fixture_verdict", nullptr}};
  if (r.fixture_verdict) out["fixture_verdict"] = to_string(*r.fixture_verdict);
  return out;
}

}  // namespace pcqi
