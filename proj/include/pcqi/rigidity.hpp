#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "pcqi/embed.hpp"
#include "pcqi/graph.hpp"

namespace pcqi {

using Edge = std::pair<VertexId, VertexId>;  // u < v

struct MarkedCycleSet {
  SimplicialGraph graph;
  std::vector<Edge> tree;                  // edges of the chosen spanning tree
  std::vector<Edge> excluded;              // one per marked cycle
  std::vector<std::vector<VertexId>> cycles;  // fundamental cycle of each excluded edge
  std::vector<std::size_t> lengths;        // sorted ascending
};

// Exhaustive over spanning trees; keeps the lexicographically least sorted
// length tuple, ties going to the first tree in edge-combination order.
// `root` only affects how tree paths are traced.
MarkedCycleSet minimal_marked_cycles(const SimplicialGraph& g, VertexId root = 0);

std::vector<Edge> cycle_edges(const std::vector<VertexId>& cycle);

// counts[i] = number of marked cycles of length 5 + i that share an edge
// with the given cycle (the cycle itself included) and lie in the component.
struct ComplexityTuple {
  std::vector<std::size_t> counts;
  auto operator<=>(const ComplexityTuple&) const = default;
};

struct Component {
  std::vector<std::size_t> cycles;  // indices into MarkedCycleSet::cycles
  VertexSet vertices;
};

// Maximal unions of marked cycles without cut points.
std::vector<Component> minimal_components(const MarkedCycleSet& marked);

ComplexityTuple cycle_complexity(const MarkedCycleSet& marked, std::size_t cycle,
                                 const Component& component);

// Count of cycles per (length ascending, complexity descending) position.
struct ComponentSignature {
  std::vector<std::pair<std::pair<std::size_t, ComplexityTuple>, std::size_t>> entries;
};

ComponentSignature component_signature(const MarkedCycleSet& marked, const Component& component);
std::strong_ordering component_compare(const MarkedCycleSet& marked, const Component& a,
                                       const Component& b);

struct Decomposition {
  NormalForm conjugator;     // g
  GraphEmbedding automorphism;  // sigma
};

// phi(sigma(v)) = v^g for every v, or nullopt with a reason.
struct DecompositionResult {
  std::optional<Decomposition> decomposition;
  std::string failure;
};

DecompositionResult decompose_embedding(const EmbeddingCertificate& phi);

struct EmbeddingRecord {
  std::vector<ConjugateGenerator> images;
  DecompositionResult result;
};

struct RigidityReport {
  SimplicialGraph graph;
  std::size_t depth = 0;
  std::size_t patches = 0;
  std::size_t total_embeddings = 0;     // summed over patches
  std::size_t distinct_embeddings = 0;  // distinct image tuples
  std::size_t failures = 0;
  std::vector<EmbeddingRecord> embeddings;  // distinct ones, in discovery order
};

RigidityReport rigidity_experiment(const SimplicialGraph& g, std::size_t depth,
                                   std::size_t vertex_budget = kDefaultVertexBudget);

}  // namespace pcqi
