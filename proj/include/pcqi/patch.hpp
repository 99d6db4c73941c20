#pragma once

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pcqi/graph.hpp"
#include "pcqi/word.hpp"

namespace pcqi {

class PatchError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t budget, std::size_t attempted)
      : Error("patch vertex budget " + std::to_string(budget) + " exceeded (" +
              std::to_string(attempted) + " vertices)"),
        budget_(budget) {}
  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

inline constexpr std::size_t kDefaultVertexBudget = 5000;

// The vertex base^conjugator of the extension graph, i.e. the element
// conjugator^-1 * base * conjugator. The conjugator is always the canonical
// representative of its <St(base)>-coset, so equal elements compare equal.
struct ConjugateGenerator {
  VertexId base = 0;
  NormalForm conjugator;

  bool operator==(const ConjugateGenerator&) const = default;
  std::strong_ordering operator<=>(const ConjugateGenerator&) const = default;
};

ConjugateGenerator make_conjugate(const PcGroup& group, VertexId base, const Word& conjugator);
Word as_word(const PcGroup& group, const ConjugateGenerator& x);
// "c", or "c^{a b^-1}".
std::string to_string(const PcGroup& group, const ConjugateGenerator& x);
ConjugateGenerator parse_conjugate(const PcGroup& group, std::string_view base,
                                   std::string_view conjugator);

bool conjugates_commute(const PcGroup& group, const ConjugateGenerator& a,
                        const ConjugateGenerator& b);

struct DoublingStep {
  ConjugateGenerator center;
  int exponent = 1;

  bool operator==(const DoublingStep&) const = default;
};

struct PatchProvenance {
  std::vector<DoublingStep> doublings;
  std::optional<std::size_t> ball_radius;

  bool operator==(const PatchProvenance&) const = default;
};

// A finite induced subgraph of the extension graph. Edges are always
// computed with the word problem; nothing is inferred from the construction.
class Patch {
 public:
  const std::shared_ptr<const PcGroup>& group_ptr() const { return group_; }
  const PcGroup& group() const { return *group_; }

  std::size_t size() const { return vertices_.size(); }
  const std::vector<ConjugateGenerator>& vertices() const { return vertices_; }
  const ConjugateGenerator& vertex(std::size_t i) const { return vertices_.at(i); }
  const AdjacencyMatrix& adjacency() const { return adjacency_; }
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency_(i, j); }
  std::optional<std::size_t> find(const ConjugateGenerator& x) const;
  const PatchProvenance& provenance() const { return provenance_; }

  // Closed star inside the patch, as sorted patch indices.
  VertexSet star_of(std::size_t i) const;

  std::vector<std::string> vertex_names() const;
  SimplicialGraph to_graph() const;

  // Recomputes every pair with the word problem and compares.
  bool self_check() const;

  // Rebuilds a patch from its vertex list, recomputing every edge. Vertices
  // are canonicalised; duplicates are rejected.
  static Patch from_vertices(std::shared_ptr<const PcGroup> group,
                             std::vector<ConjugateGenerator> vertices, PatchProvenance provenance);

 private:
  friend Patch base_patch(std::shared_ptr<const PcGroup> group);
  friend Patch double_along_star(const Patch& patch, const ConjugateGenerator& center,
                                 int exponent, std::size_t vertex_budget);
  friend Patch ball_patch(std::shared_ptr<const PcGroup> group, std::size_t radius,
                          std::size_t vertex_budget);

  std::size_t append(ConjugateGenerator x);
  void compute_edges_from(std::size_t first_new);

  std::shared_ptr<const PcGroup> group_;
  std::vector<ConjugateGenerator> vertices_;
  std::map<ConjugateGenerator, std::size_t> index_;
  AdjacencyMatrix adjacency_;
  PatchProvenance provenance_;
};

Patch base_patch(std::shared_ptr<const PcGroup> group);
Patch base_patch(const SimplicialGraph& graph);

// Doubles the patch along the star of `center` using the conjugator
// z^exponent, z being the group element of `center`. Vertices of the star are
// fixed; the rest are copied and every identification and edge is recomputed.
Patch double_along_star(const Patch& patch, const ConjugateGenerator& center, int exponent,
                        std::size_t vertex_budget = kDefaultVertexBudget);

// Smallest positive exponent not yet used at `center` in the provenance.
int fresh_exponent(const Patch& patch, const ConjugateGenerator& center);

// All conjugates v^g whose canonical conjugator has length <= radius.
Patch ball_patch(std::shared_ptr<const PcGroup> group, std::size_t radius,
                 std::size_t vertex_budget = kDefaultVertexBudget);
Patch ball_patch(const SimplicialGraph& graph, std::size_t radius,
                 std::size_t vertex_budget = kDefaultVertexBudget);

// Visits every patch reachable by at most `depth` doublings (each center with
// its next fresh exponent), skipping doublings that add nothing and patches
// whose vertex set was already seen. Stops early when `visit` returns false.
// Returns the number of patches visited.
std::size_t enumerate_doubling_family(std::shared_ptr<const PcGroup> group, std::size_t depth,
                                      const std::function<bool(const Patch&, std::size_t)>& visit,
                                      std::size_t vertex_budget = kDefaultVertexBudget);

}  // namespace pcqi
