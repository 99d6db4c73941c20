#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcqi/graph.hpp"
#include "pcqi/patch.hpp"

namespace pcqi {

struct SearchBudget {
  std::size_t max_depth = 3;                    // doublings along one branch
  std::size_t max_patch_vertices = kDefaultVertexBudget;
  std::size_t max_backtrack_nodes = 5'000'000;  // summed over all patches
  std::size_t max_patches = 20'000;             // distinct patches examined
  std::size_t max_ball_radius = 2;              // fallback family; 0 disables
};

// Induced embedding of `domain` into the extension graph of `codomain`.
// images[i] is the image of domain vertex i.
struct EmbeddingCertificate {
  SimplicialGraph domain;
  SimplicialGraph codomain;
  std::vector<ConjugateGenerator> images;
  PatchProvenance provenance;

  bool operator==(const EmbeddingCertificate&) const = default;
};

// Re-checks canonical conjugators, injectivity and edge iff commute, using
// only the word algebra.
bool verify_certificate(const EmbeddingCertificate& certificate);

// Certificate for a plain graph embedding into the base copy.
EmbeddingCertificate identity_certificate(const SimplicialGraph& domain,
                                          const SimplicialGraph& codomain,
                                          const GraphEmbedding& embedding);

struct SearchReport {
  bool found = false;
  std::optional<EmbeddingCertificate> certificate;
  std::size_t depth = 0;  // doublings (or ball radius) of the successful patch
  std::string family;     // "doubling" or "ball"
  std::size_t patches_examined = 0;
  std::size_t backtrack_nodes = 0;
  bool budget_hit = false;  // some limit cut the exploration short
  std::string note;
};

// Semi-decision: breadth-first over doubling depth (each distinct patch up to
// isomorphism once), then ball patches. Exhausted is not a proof.
SearchReport search_embedding(const SimplicialGraph& domain, const SimplicialGraph& codomain,
                              const SearchBudget& budget = {});

struct MutualReport {
  SearchReport forward;   // domain < codomain^e
  SearchReport backward;  // codomain < domain^e
  bool both_found() const { return forward.found && backward.found; }
};

MutualReport mutual_embeddability(const SimplicialGraph& a, const SimplicialGraph& b,
                                  const SearchBudget& budget = {});

}  // namespace pcqi
