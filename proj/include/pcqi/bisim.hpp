#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcqi/graph.hpp"

namespace pcqi {

class ColorError : public Error {
 public:
  using Error::Error;
};

// Graph with one colour per vertex. Loops are allowed so that quotients of
// bipartite-but-symmetric graphs can be represented; inputs built from a
// SimplicialGraph never have them.
struct ColoredGraph {
  std::vector<std::string> names;
  std::vector<std::string> colors;
  AdjacencyMatrix adjacency;

  std::size_t order() const { return names.size(); }
  std::optional<VertexId> find(std::string_view name) const;

  static ColoredGraph from_graph(const SimplicialGraph& g,
                                 const std::map<std::string, std::string>& colors);

  bool operator==(const ColoredGraph&) const = default;
};

bool is_connected(const ColoredGraph& g);

// f maps vertex i of `source` to f[i] in `target`.
struct CoveringCheck {
  bool ok = false;
  bool surjective = false;
  std::string violation;
};

CoveringCheck check_weak_covering(const std::vector<VertexId>& f, const ColoredGraph& source,
                                  const ColoredGraph& target);

struct Quotient {
  std::vector<VertexSet> partition;  // classes ordered by smallest member
  ColoredGraph graph;                // class i named after its smallest member
  std::vector<VertexId> map;         // vertex -> class
};

// Coarsest refinement of the colour partition in which all members of a
// class see the same set of classes.
Quotient minimal_quotient(const ColoredGraph& g);

struct BisimResult {
  bool bisimilar = false;
  std::optional<ColoredGraph> common;  // quotient of the first graph
  std::vector<VertexId> map_a;         // a -> common
  std::vector<VertexId> map_b;         // b -> common
};

BisimResult bisimilar(const ColoredGraph& a, const ColoredGraph& b);

// Colours must be p1 .. p(n+1) or f.
void check_pf_colors(const ColoredGraph& g, std::size_t n);

ColoredGraph permute_p_colors(const ColoredGraph& g, const std::vector<std::size_t>& sigma);

struct PermutedBisimResult {
  bool bisimilar = false;
  std::vector<std::size_t> permutation;  // p(i+1) in a becomes p(sigma[i]+1)
  BisimResult witness;
};

PermutedBisimResult bisimilar_up_to_pcolor_permutation(const ColoredGraph& a,
                                                       const ColoredGraph& b, std::size_t n);

}  // namespace pcqi
