#include "pcqi/embed.hpp"

#include <memory>
#include <unordered_map>

namespace pcqi {

bool verify_certificate(const EmbeddingCertificate& c) {
  if (c.images.size() != c.domain.order()) return false;
  if (c.codomain.empty()) return false;
  const PcGroup group(c.codomain);
  for (const auto& x : c.images) {
    if (x.base >= group.rank()) return false;
    if (make_conjugate(group, x.base, x.conjugator.letters()) != x) return false;
  }
  for (std::size_t i = 0; i < c.images.size(); ++i)
    for (std::size_t j = i + 1; j < c.images.size(); ++j) {
      if (c.images[i] == c.images[j]) return false;
      if (c.domain.adjacent(i, j) != conjugates_commute(group, c.images[i], c.images[j]))
        return false;
    }
  return true;
}

EmbeddingCertificate identity_certificate(const SimplicialGraph& domain,
                                          const SimplicialGraph& codomain,
                                          const GraphEmbedding& embedding) {
  EmbeddingCertificate c{domain, codomain, {}, {}};
  for (VertexId v : embedding.map) c.images.push_back(ConjugateGenerator{v, {}});
  return c;
}

namespace {

class Searcher {
 public:
  Searcher(const SimplicialGraph& domain, const SimplicialGraph& codomain,
           const SearchBudget& budget, SearchReport& report)
      : domain_(domain), codomain_(codomain), budget_(budget), report_(report) {}

  // True when the patch is new (up to isomorphism) and should be expanded.
  bool admit(const Patch& p) {
    const std::uint64_t h = invariant_hash(p.adjacency());
    auto& bucket = seen_[h];
    for (const auto& other : bucket)
      if (other.size() == p.size() && find_isomorphism(other, p.adjacency())) return false;
    bucket.push_back(p.adjacency());
    return true;
  }

  bool out_of_patches() {
    if (report_.patches_examined < budget_.max_patches) return false;
    report_.budget_hit = true;
    return true;
  }

  bool try_patch(const Patch& p, std::size_t depth, const char* family) {
    ++report_.patches_examined;
    if (p.size() < domain_.order()) return false;
    SearchOptions opts;
    opts.limit = 1;
    if (budget_.max_backtrack_nodes > 0) {
      if (report_.backtrack_nodes >= budget_.max_backtrack_nodes) {
        report_.budget_hit = true;
        return false;
      }
      opts.max_nodes = budget_.max_backtrack_nodes - report_.backtrack_nodes;
    }
    std::vector<VertexId> hit;
    const SearchStats stats = enumerate_induced_embeddings(
        domain_.adjacency(), p.adjacency(), opts, [&](const std::vector<VertexId>& m) {
          hit = m;
          return false;
        });
    report_.backtrack_nodes += stats.nodes;
    if (stats.found == 0) {
      if (!stats.exhaustive) report_.budget_hit = true;
      return false;
    }
    EmbeddingCertificate cert{domain_, codomain_, {}, p.provenance()};
    for (VertexId v : hit) cert.images.push_back(p.vertex(v));
    report_.found = true;
    report_.depth = depth;
    report_.family = family;
    report_.certificate = std::move(cert);
    return true;
  }

  void run() {
    auto group = std::make_shared<const PcGroup>(codomain_);
    std::vector<Patch> level{base_patch(group)};
    admit(level.front());
    if (try_patch(level.front(), 0, "doubling")) return;

    for (std::size_t depth = 1; depth <= budget_.max_depth && !level.empty(); ++depth) {
      std::vector<Patch> next;
      for (const Patch& p : level) {
        for (std::size_t i = 0; i < p.size(); ++i) {
          if (p.star_of(i).size() == p.size()) continue;
          if (out_of_patches()) return;
          const auto& center = p.vertex(i);
          std::optional<Patch> child;
          try {
            child = double_along_star(p, center, fresh_exponent(p, center),
                                      budget_.max_patch_vertices);
          } catch (const BudgetExceeded&) {
            report_.budget_hit = true;
            continue;
          }
          if (child->size() == p.size() || !admit(*child)) continue;
          if (try_patch(*child, depth, "doubling")) return;
          next.push_back(std::move(*child));
        }
      }
      level = std::move(next);
    }

    for (std::size_t r = 1; r <= budget_.max_ball_radius; ++r) {
      if (out_of_patches()) return;
      std::optional<Patch> ball;
      try {
        ball = ball_patch(group, r, budget_.max_patch_vertices);
      } catch (const BudgetExceeded&) {
        report_.budget_hit = true;
        return;
      }
      if (try_patch(*ball, r, "ball")) return;
    }
  }

 private:
  const SimplicialGraph& domain_;
  const SimplicialGraph& codomain_;
  const SearchBudget& budget_;
  SearchReport& report_;
  std::unordered_map<std::uint64_t, std::vector<AdjacencyMatrix>> seen_;
};

}  // namespace

SearchReport search_embedding(const SimplicialGraph& domain, const SimplicialGraph& codomain,
                              const SearchBudget& budget) {
  if (domain.empty() || codomain.empty()) throw GraphError("search_embedding needs nonempty graphs");
  SearchReport report;
  Searcher(domain, codomain, budget, report).run();
  if (report.found) {
    report.note = "embedding found in a " + report.family + " patch at depth " +
                  std::to_string(report.depth);
  } else {
    report.note = "no embedding within doubling depth " + std::to_string(budget.max_depth) +
                  " and ball radius " + std::to_string(budget.max_ball_radius) +
                  (report.budget_hit ? " (budget limits reached)" : "") +
                  "; this does not prove non-embeddability";
  }
  return report;
}

MutualReport mutual_embeddability(const SimplicialGraph& a, const SimplicialGraph& b,
                                  const SearchBudget& budget) {
  return MutualReport{search_embedding(a, b, budget), search_embedding(b, a, budget)};
}

}  // namespace pcqi
