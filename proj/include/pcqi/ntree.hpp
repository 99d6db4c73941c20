#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcqi/bisim.hpp"
#include "pcqi/embed.hpp"
#include "pcqi/graph.hpp"

namespace pcqi {

class NTreeError : public Error {
 public:
  using Error::Error;
};

using Simplex = std::vector<std::string>;  // sorted vertex names

// Pure n-dimensional complex given by its top simplices.
class NTreeComplex {
 public:
  NTreeComplex() = default;
  // Sorts every simplex and the simplex list; rejects wrong sizes,
  // repeated vertices and repeated simplices.
  NTreeComplex(std::size_t n, std::vector<Simplex> simplices);

  std::size_t dimension() const { return n_; }
  const std::vector<Simplex>& simplices() const { return simplices_; }
  std::vector<std::string> vertices() const;
  SimplicialGraph one_skeleton() const;

  bool operator==(const NTreeComplex&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Simplex> simplices_;
};

struct NTreeValidation {
  bool valid = false;
  std::string reason;
  std::vector<Simplex> witness;
};

// Structural test: the incidence graph between top simplices and the
// (n-1)-faces shared by at least two of them is a tree, and for every vertex
// the part of that graph containing the vertex is connected.
NTreeValidation validate_ntree(const NTreeComplex& k);

using VertexColoring = std::map<std::string, std::size_t>;  // colours 1..n+1

// Seeds the least simplex with colours 1..n+1 in vertex order and propagates
// across shared faces.
VertexColoring vertex_coloring(const NTreeComplex& k);

struct Piece {
  Simplex spine;
  std::vector<std::string> tips;
  std::size_t label = 0;  // colour of the tips
};

std::vector<Piece> pieces(const NTreeComplex& k, const VertexColoring& coloring);

// gph(K): vertices 0..pieces-1 are the pieces ("p:<spine>", colour p<label>),
// the rest are simplices lying in more than one piece ("f:<simplex>", colour f).
struct Gph {
  ColoredGraph graph;
  std::vector<Piece> pieces;
  std::vector<Simplex> f_simplices;
};

Gph build_gph(const NTreeComplex& k, const VertexColoring& coloring);
Gph build_gph(const NTreeComplex& k);

struct NTreeDouble {
  NTreeComplex complex;
  std::map<std::string, std::string> fold;  // doubled vertex -> original vertex
};

// K doubled along the closed star of v; off-star vertices get fresh copies
// named with a trailing apostrophe.
NTreeDouble double_ntree(const NTreeComplex& k, std::string_view v);

VertexColoring pull_back(const VertexColoring& coloring,
                         const std::map<std::string, std::string>& fold);

// The gph map induced by a vertex map between complexes.
std::vector<VertexId> gph_map(const Gph& source, const Gph& target,
                              const std::map<std::string, std::string>& vertex_map);

// Builds an embedding of the 1-skeleton of delta into the extension graph of
// the 1-skeleton of gamma from a weak covering f: gph(delta) -> gph(gamma).
// The default overload uses the default colourings. The result is verified
// before it is returned.
EmbeddingCertificate weak_cover_to_embedding(const NTreeComplex& delta, const NTreeComplex& gamma,
                                             const std::vector<VertexId>& f);
// Same, with explicit colourings for the two gph's.
EmbeddingCertificate weak_cover_to_embedding(const NTreeComplex& delta, const VertexColoring& delta_coloring,
                                             const NTreeComplex& gamma, const VertexColoring& gamma_coloring,
                                             const std::vector<VertexId>& f);

std::string simplex_name(const Simplex& s);

// Maximal cliques, each as sorted vertex names, in lexicographic order.
std::vector<Simplex> maximal_cliques(const SimplicialGraph& g);

// The n-tree whose 1-skeleton is g, when g is one: connected, at least two
// vertices, all maximal cliques of size n+1 and a valid clique complex.
std::optional<NTreeComplex> as_ntree(const SimplicialGraph& g);

}  // namespace pcqi
