#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pcqi/embed.hpp"
#include "pcqi/graph.hpp"

namespace pcqi {

struct DromsDecomposition {
  std::size_t clique_rank = 0;
  std::vector<std::string> universal;       // vertex names
  std::vector<SimplicialGraph> components;  // ordered by smallest vertex name
};

// Splits off the universal vertices of a triangle-built graph.
DromsDecomposition droms_decompose(const SimplicialGraph& g);

enum class Verdict { qi, not_qi, unknown };
std::string to_string(Verdict v);

// Classes, finest first. A graph can lie in several.
enum class GraphClass {
  clique,
  free,            // edgeless, at least two vertices
  free_product,    // complete bipartite K_{a,b}, a, b >= 2
  z_times_free,    // star K_{1,k}, k >= 2
  tree3,           // tree of diameter >= 3
  atomic,
  ntree,           // 1-skeleton of an n-tree
  triangle_built,
};
std::string to_string(GraphClass c);

struct GraphClasses {
  std::vector<GraphClass> classes;  // finest first
  std::size_t ntree_dimension = 0;  // set when ntree is present
};

GraphClasses classify_graph(const SimplicialGraph& g);

struct QIVerdict {
  Verdict verdict = Verdict::unknown;
  std::string class_used;  // empty when no class applies
  nlohmann::json certificate;
  std::string explanation;
};

QIVerdict classify_pair(const SimplicialGraph& a, const SimplicialGraph& b);

// Pairs whose verdict is recorded from outside the covered classes.
std::optional<Verdict> known_fixture_verdict(const SimplicialGraph& a, const SimplicialGraph& b);

struct CriterionReport {
  QIVerdict classification;
  std::optional<Verdict> fixture_verdict;
  MutualReport embeddings;
  std::vector<std::string> flags;
  bool consistent = true;  // no unexplained disagreement between verdict and search
};

CriterionReport qi_via_extension_criterion(const SimplicialGraph& a, const SimplicialGraph& b,
                                           const SearchBudget& budget = {});

nlohmann::json to_json(const QIVerdict& v);
nlohmann::json to_json(const CriterionReport& r);

}  // namespace pcqi
