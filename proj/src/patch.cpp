#include "pcqi/patch.hpp"

#include <algorithm>
#include <set>

namespace pcqi {

ConjugateGenerator make_conjugate(const PcGroup& group, VertexId base, const Word& conjugator) {
  return ConjugateGenerator{base, group.coset_canonical(base, conjugator)};
}

Word as_word(const PcGroup& group, const ConjugateGenerator& x) {
  return group.conjugate(x.base, x.conjugator.letters());
}

std::string to_string(const PcGroup& group, const ConjugateGenerator& x) {
  std::string out = group.graph().name(x.base);
  if (!x.conjugator.empty()) out += "^{" + group.format(x.conjugator) + "}";
  return out;
}

ConjugateGenerator parse_conjugate(const PcGroup& group, std::string_view base,
                                   std::string_view conjugator) {
  const auto v = group.graph().find(base);
  if (!v) throw WordError("unknown generator '" + std::string(base) + "'");
  return make_conjugate(group, *v, group.parse(conjugator));
}

bool conjugates_commute(const PcGroup& group, const ConjugateGenerator& a,
                        const ConjugateGenerator& b) {
  // [x^g, y^h] = 1 iff [x, y^(h g^-1)] = 1.
  const Word relative = concat(b.conjugator.letters(), inverse(a.conjugator.letters()));
  return group.commute(group.generator(a.base), group.conjugate(b.base, group.reduce(relative)));
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> Patch::find(const ConjugateGenerator& x) const {
  const auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexSet Patch::star_of(std::size_t i) const {
  VertexSet s = adjacency_.neighbors(i);
  s.insert(std::upper_bound(s.begin(), s.end(), i), i);
  return s;
}

std::vector<std::string> Patch::vertex_names() const {
  std::vector<std::string> names;
  names.reserve(size());
  for (const auto& x : vertices_) names.push_back(to_string(*group_, x));
  return names;
}

SimplicialGraph Patch::to_graph() const {
  return SimplicialGraph::from_adjacency(vertex_names(), adjacency_);
}

bool Patch::self_check() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (make_conjugate(*group_, vertices_[i].base, vertices_[i].conjugator.letters()) !=
        vertices_[i])
      return false;
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (vertices_[i] == vertices_[j]) return false;
      if (adjacency_(i, j) != conjugates_commute(*group_, vertices_[i], vertices_[j]))
        return false;
    }
    if (adjacency_(i, i)) return false;
  }
  return true;
}

std::size_t Patch::append(ConjugateGenerator x) {
  const auto [it, inserted] = index_.emplace(x, vertices_.size());
  if (inserted) vertices_.push_back(std::move(x));
  return it->second;
}

void Patch::compute_edges_from(std::size_t first_new) {
  adjacency_.grow(vertices_.size());
  for (std::size_t j = first_new; j < vertices_.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (conjugates_commute(*group_, vertices_[i], vertices_[j])) adjacency_.set(i, j);
}

Patch Patch::from_vertices(std::shared_ptr<const PcGroup> group,
                           std::vector<ConjugateGenerator> vertices, PatchProvenance provenance) {
  Patch p;
  p.group_ = std::move(group);
  p.provenance_ = std::move(provenance);
  for (auto& x : vertices) {
    if (x.base >= p.group_->rank()) throw PatchError("patch vertex with unknown base");
    auto canonical = make_conjugate(*p.group_, x.base, x.conjugator.letters());
    const std::size_t before = p.vertices_.size();
    if (p.append(std::move(canonical)) != before)
      throw PatchError("patch lists the same conjugate twice");
  }
  p.compute_edges_from(0);
  return p;
}

Patch base_patch(std::shared_ptr<const PcGroup> group) {
  if (group->rank() == 0) throw PatchError("base patch of an empty graph");
  Patch p;
  p.group_ = std::move(group);
  for (VertexId v = 0; v < p.group_->rank(); ++v) p.append(ConjugateGenerator{v, {}});
  p.compute_edges_from(0);
  return p;
}

Patch base_patch(const SimplicialGraph& graph) {
  return base_patch(std::make_shared<const PcGroup>(graph));
}

int fresh_exponent(const Patch& patch, const ConjugateGenerator& center) {
  int k = 1;
  for (bool clash = true; clash;) {
    clash = false;
    for (const auto& step : patch.provenance().doublings)
      if (step.center == center && step.exponent == k) {
        ++k;
        clash = true;
      }
  }
  return k;
}

Patch double_along_star(const Patch& patch, const ConjugateGenerator& center, int exponent,
                        std::size_t vertex_budget) {
  const PcGroup& group = patch.group();
  if (exponent == 0) throw PatchError("doubling exponent must be nonzero");
  const ConjugateGenerator canonical =
      make_conjugate(group, center.base, center.conjugator.letters());
  if (!patch.find(canonical))
    throw PatchError("doubling center " + to_string(group, canonical) + " is not in the patch");
  for (const auto& step : patch.provenance().doublings)
    if (step.center == canonical && step.exponent == exponent)
      throw PatchError("stale exponent " + std::to_string(exponent) + " at center " +
                       to_string(group, canonical));

  // c = g^-1 u^k g for the center u^g.
  const Word& g = canonical.conjugator.letters();
  const Word gi = inverse(g);
  const Word uk = group.generator(canonical.base, exponent);
  const Word c = group.reduce(concat({&gi, &uk, &g}));

  Patch out = patch;
  out.provenance_.doublings.push_back(DoublingStep{canonical, exponent});
  out.provenance_.ball_radius.reset();
  const std::size_t first_new = out.size();
  for (std::size_t i = 0; i < patch.size(); ++i) {
    const auto& x = patch.vertex(i);
    out.append(make_conjugate(group, x.base, concat(x.conjugator.letters(), c)));
    if (out.size() > vertex_budget) throw BudgetExceeded(vertex_budget, out.size());
  }
  out.compute_edges_from(first_new);
  return out;
}

Patch ball_patch(std::shared_ptr<const PcGroup> group, std::size_t radius,
                 std::size_t vertex_budget) {
  Patch p = base_patch(group);
  if (p.size() > vertex_budget) throw BudgetExceeded(vertex_budget, p.size());
  const PcGroup& grp = *p.group_;
  p.provenance_.ball_radius = radius;
  // Canonical conjugators of length L+1 extend those of length L by one
  // letter, because removing a last letter keeps a coset-reduced word reduced.
  std::vector<std::vector<NormalForm>> frontier(grp.rank(), std::vector<NormalForm>{NormalForm{}});
  for (std::size_t len = 1; len <= radius; ++len) {
    std::vector<ConjugateGenerator> layer;
    for (VertexId v = 0; v < grp.rank(); ++v) {
      std::vector<NormalForm> next;
      for (const auto& h : frontier[v])
        for (VertexId x = 0; x < grp.rank(); ++x)
          for (int sign : {1, -1}) {
            auto cand = grp.coset_canonical(v, concat(h.letters(), grp.generator(x, sign)));
            if (cand.size() == len) next.push_back(std::move(cand));
          }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      for (const auto& h : next) layer.push_back(ConjugateGenerator{v, h});
      frontier[v] = std::move(next);
    }
    if (p.size() + layer.size() > vertex_budget)
      throw BudgetExceeded(vertex_budget, p.size() + layer.size());
    const std::size_t first_new = p.size();
    for (auto& x : layer) p.append(std::move(x));
    p.compute_edges_from(first_new);
  }
  return p;
}

Patch ball_patch(const SimplicialGraph& graph, std::size_t radius, std::size_t vertex_budget) {
  return ball_patch(std::make_shared<const PcGroup>(graph), radius, vertex_budget);
}

std::size_t enumerate_doubling_family(std::shared_ptr<const PcGroup> group, std::size_t depth,
                                      const std::function<bool(const Patch&, std::size_t)>& visit,
                                      std::size_t vertex_budget) {
  std::set<std::vector<ConjugateGenerator>> seen;
  auto key = [](const Patch& p) {
    auto v = p.vertices();
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<Patch> level{base_patch(std::move(group))};
  seen.insert(key(level.front()));
  std::size_t visited = 1;
  if (!visit(level.front(), 0)) return visited;
  for (std::size_t d = 1; d <= depth; ++d) {
    std::vector<Patch> next;
    for (const Patch& p : level)
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.star_of(i).size() == p.size()) continue;
        Patch child = double_along_star(p, p.vertex(i), fresh_exponent(p, p.vertex(i)), vertex_budget);
        if (child.size() == p.size() || !seen.insert(key(child)).second) continue;
        ++visited;
        if (!visit(child, d)) return visited;
        if (d < depth) next.push_back(std::move(child));
      }
    level = std::move(next);
  }
  return visited;
}

}  // namespace pcqi
