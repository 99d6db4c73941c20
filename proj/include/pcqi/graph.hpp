#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pcqi {

using VertexId = std::size_t;

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<VertexId>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GraphError : public Error {
 public:
  using Error::Error;
};

// Symmetric bit matrix. The diagonal is available for loops; simple graphs
// keep it clear.
class AdjacencyMatrix {
 public:
  AdjacencyMatrix() = default;
  explicit AdjacencyMatrix(std::size_t n);

  std::size_t size() const { return n_; }

  bool operator()(VertexId u, VertexId v) const {
    return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }

  void set(VertexId u, VertexId v, bool value = true);

  // Adds a trailing isolated vertex.
  void grow(std::size_t new_size);

  std::size_t degree(VertexId v) const;  // a loop counts once
  std::vector<VertexId> neighbors(VertexId v) const;

  // Raw row words, for set-style scans.
  const std::uint64_t* row(VertexId v) const { return bits_.data() + v * words_; }
  std::size_t words_per_row() const { return words_; }

  bool operator==(const AdjacencyMatrix& other) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Finite simple graph with named vertices. Vertices are kept in lexicographic
// order of their names; every index-based API refers to that order.
class SimplicialGraph {
 public:
  using NamedEdge = std::pair<std::string, std::string>;

  SimplicialGraph() = default;
  SimplicialGraph(std::vector<std::string> vertices, const std::vector<NamedEdge>& edges);

  // Builds from arbitrary-order names and an adjacency over those names.
  // The result is re-indexed lexicographically.
  static SimplicialGraph from_adjacency(const std::vector<std::string>& names,
                                        const AdjacencyMatrix& adjacency);

  std::size_t order() const { return names_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return names_.empty(); }

  const std::vector<std::string>& vertices() const { return names_; }
  const std::string& name(VertexId v) const { return names_.at(v); }
  std::optional<VertexId> find(std::string_view name) const;
  VertexId index_of(std::string_view name) const;

  bool adjacent(VertexId u, VertexId v) const { return adjacency_(u, v); }
  const AdjacencyMatrix& adjacency() const { return adjacency_; }
  std::size_t degree(VertexId v) const { return adjacency_.degree(v); }
  std::vector<VertexId> neighbors(VertexId v) const { return adjacency_.neighbors(v); }

  // Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;
  std::vector<NamedEdge> named_edges() const;

  SimplicialGraph induced(const VertexSet& keep) const;
  SimplicialGraph without(const VertexSet& drop) const;

  bool operator==(const SimplicialGraph& other) const = default;

 private:
  std::vector<std::string> names_;
  AdjacencyMatrix adjacency_;
  std::size_t edge_count_ = 0;
};

// Injective vertex map from a domain graph into a codomain graph, stored as
// codomain indices listed in domain-vertex order.
struct GraphEmbedding {
  std::vector<VertexId> map;

  bool operator==(const GraphEmbedding&) const = default;
  auto operator<=>(const GraphEmbedding&) const = default;
};

bool is_induced_embedding(const AdjacencyMatrix& domain, const AdjacencyMatrix& codomain,
                          const std::vector<VertexId>& map);
bool is_induced_embedding(const SimplicialGraph& domain, const SimplicialGraph& codomain,
                          const GraphEmbedding& embedding);

// ---------------------------------------------------------------------------
// Local structure

VertexSet star(const SimplicialGraph& g, VertexId v);
VertexSet star(const SimplicialGraph& g, std::string_view v);
VertexSet link(const SimplicialGraph& g, VertexId v);

bool is_connected(const SimplicialGraph& g);
std::vector<VertexSet> connected_components(const SimplicialGraph& g);

// Eccentricity-based diameter of a connected graph; nullopt when disconnected.
std::optional<std::size_t> diameter(const SimplicialGraph& g);

// Length of a shortest cycle, nullopt for forests.
std::optional<std::size_t> girth(const SimplicialGraph& g);

// Vertices of a shortest cycle in traversal order; empty for forests.
std::vector<VertexId> shortest_cycle(const SimplicialGraph& g);

// ---------------------------------------------------------------------------
// Structural predicates

enum class ShapeKind { clique, edgeless, tree, join_of_two_edgeless, other };

struct ShapeVerdict {
  ShapeKind kind = ShapeKind::other;
  std::size_t first = 0;   // clique/edgeless size, tree diameter, join side
  std::size_t second = 0;  // other join side
  bool also_edgeless = false;  // single vertex: clique(1) and edgeless(1)

  bool operator==(const ShapeVerdict&) const = default;
};

ShapeVerdict classify_shape(const SimplicialGraph& g);
std::string to_string(const ShapeVerdict& shape);

bool is_triangle_built(const SimplicialGraph& g);
bool is_chordal(const SimplicialGraph& g);

enum class AtomicViolation {
  none,
  empty,
  disconnected,
  valence_below_two,
  short_cycle,
  separating_star,
};

struct AtomicityReport {
  bool atomic = false;
  AtomicViolation violation = AtomicViolation::none;
  std::optional<VertexId> witness_vertex;
  std::vector<VertexId> witness_cycle;
};

AtomicityReport check_atomic(const SimplicialGraph& g);
inline bool is_atomic(const SimplicialGraph& g) { return check_atomic(g).atomic; }
std::string to_string(AtomicViolation violation);

// ---------------------------------------------------------------------------
// Induced subgraph search

struct SearchOptions {
  // Optional per-vertex labels that a mapped pair must share.
  const std::vector<std::uint64_t>* pattern_labels = nullptr;
  const std::vector<std::uint64_t>* target_labels = nullptr;
  // 0 = unlimited.
  std::size_t limit = 0;
  std::size_t max_nodes = 0;
};

struct SearchStats {
  std::size_t found = 0;
  std::size_t nodes = 0;
  bool exhaustive = true;  // false when the node budget or limit cut it short
};

// Enumerates induced embeddings of `pattern` into `target`. The callback
// returns false to stop. Pattern vertices are placed greedily: highest degree
// first, then the vertex with the most already-placed neighbours. Candidates
// are tried in target index order.
SearchStats enumerate_induced_embeddings(
    const AdjacencyMatrix& pattern, const AdjacencyMatrix& target, const SearchOptions& options,
    const std::function<bool(const std::vector<VertexId>&)>& visit);

std::vector<GraphEmbedding> find_induced_embeddings(const SimplicialGraph& pattern,
                                                    const SimplicialGraph& target,
                                                    std::size_t limit = 0);

// Stable colour refinement. Equal inputs produce equal colours regardless of
// vertex numbering, so colours from two graphs are directly comparable.
std::vector<std::uint64_t> refine_colors(const AdjacencyMatrix& adjacency,
                                         std::vector<std::uint64_t> initial);

// Isomorphism-invariant hash.
std::uint64_t invariant_hash(const AdjacencyMatrix& adjacency,
                             const std::vector<std::uint64_t>* labels = nullptr);

std::optional<GraphEmbedding> find_isomorphism(const AdjacencyMatrix& a, const AdjacencyMatrix& b,
                                               const std::vector<std::uint64_t>* labels_a = nullptr,
                                               const std::vector<std::uint64_t>* labels_b = nullptr);
std::optional<GraphEmbedding> are_isomorphic(const SimplicialGraph& g, const SimplicialGraph& h);

std::vector<GraphEmbedding> automorphisms(const SimplicialGraph& g);

}  // namespace pcqi
