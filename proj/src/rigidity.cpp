#include "pcqi/rigidity.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace pcqi {

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Fundamental cycles of `excluded` edges against a spanning tree.
std::vector<std::vector<VertexId>> fundamental_cycles(std::size_t n, const std::vector<Edge>& tree,
                                                      const std::vector<Edge>& excluded,
                                                      VertexId root) {
  std::vector<std::vector<VertexId>> adj(n);
  for (auto [u, v] : tree) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<VertexId> parent(n, n);
  std::vector<std::size_t> depth(n, 0);
  std::deque<VertexId> queue{root};
  parent[root] = root;
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : adj[x])
      if (parent[y] == n) {
        parent[y] = x;
        depth[y] = depth[x] + 1;
        queue.push_back(y);
      }
  }
  std::vector<std::vector<VertexId>> out;
  for (auto [u, v] : excluded) {
    std::vector<VertexId> up, down;
    VertexId a = u, b = v;
    while (depth[a] > depth[b]) up.push_back(std::exchange(a, parent[a]));
    while (depth[b] > depth[a]) down.push_back(std::exchange(b, parent[b]));
    while (a != b) {
      up.push_back(std::exchange(a, parent[a]));
      down.push_back(std::exchange(b, parent[b]));
    }
    up.push_back(a);
    up.insert(up.end(), down.rbegin(), down.rend());
    out.push_back(std::move(up));
  }
  return out;
}

}  // namespace

std::vector<Edge> cycle_edges(const std::vector<VertexId>& cycle) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    VertexId a = cycle[i], b = cycle[(i + 1) % cycle.size()];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

MarkedCycleSet minimal_marked_cycles(const SimplicialGraph& g, VertexId root) {
  if (!is_connected(g)) throw GraphError("marked cycles need a connected graph");
  const std::size_t n = g.order();
  if (root >= n) throw GraphError("root vertex out of range");
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  const std::size_t k = n - 1;

  // Guard against combinatorial blowup: C(m, k) tree candidates.
  double combos = 1;
  for (std::size_t i = 0; i < m - k; ++i) combos = combos * static_cast<double>(m - i) / static_cast<double>(i + 1);
  if (combos > 2e7) throw GraphError("too many spanning-tree candidates for exhaustive search");

  MarkedCycleSet best;
  best.graph = g;
  bool have = false;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    DisjointSets ds(n);
    bool tree = true;
    for (std::size_t i : pick)
      if (!ds.unite(edges[i].first, edges[i].second)) {
        tree = false;
        break;
      }
    if (tree) {
      std::vector<Edge> t, x;
      std::size_t p = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (p < k && pick[p] == i) {
          t.push_back(edges[i]);
          ++p;
        } else {
          x.push_back(edges[i]);
        }
      }
      auto cycles = fundamental_cycles(n, t, x, root);
      std::vector<std::size_t> lengths;
      for (const auto& c : cycles) lengths.push_back(c.size());
      std::vector<std::size_t> order(x.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return lengths[a] < lengths[b]; });
      std::vector<std::size_t> sorted;
      for (std::size_t i : order) sorted.push_back(lengths[i]);
      if (!have || sorted < best.lengths) {
        have = true;
        best.tree = t;
        best.excluded.clear();
        best.cycles.clear();
        for (std::size_t i : order) {
          best.excluded.push_back(x[i]);
          best.cycles.push_back(std::move(cycles[i]));
        }
        best.lengths = std::move(sorted);
      }
    }
    // Next k-combination of 0..m-1.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

std::vector<Component> minimal_components(const MarkedCycleSet& marked) {
  const std::size_t c = marked.cycles.size();
  std::vector<std::set<VertexId>> verts(c);
  for (std::size_t i = 0; i < c; ++i) verts[i].insert(marked.cycles[i].begin(), marked.cycles[i].end());
  // Two 2-connected unions meeting in at least two vertices have a
  // 2-connected union; merge to a fixpoint.
  DisjointSets ds(c);
  for (bool merged = true; merged;) {
    merged = false;
    std::map<std::size_t, std::set<VertexId>> groups;
    for (std::size_t i = 0; i < c; ++i) groups[ds.find(i)].insert(verts[i].begin(), verts[i].end());
    for (auto a = groups.begin(); a != groups.end() && !merged; ++a)
      for (auto b = std::next(a); b != groups.end() && !merged; ++b) {
        std::size_t shared = 0;
        for (VertexId v : a->second) shared += b->second.count(v);
        if (shared >= 2) merged = ds.unite(a->first, b->first);
      }
  }
  std::map<std::size_t, Component> by_root;
  for (std::size_t i = 0; i < c; ++i) {
    auto& comp = by_root[ds.find(i)];
    comp.cycles.push_back(i);
    comp.vertices.insert(comp.vertices.end(), verts[i].begin(), verts[i].end());
  }
  std::vector<Component> out;
  for (auto& [root, comp] : by_root) {
    std::sort(comp.vertices.begin(), comp.vertices.end());
    comp.vertices.erase(std::unique(comp.vertices.begin(), comp.vertices.end()), comp.vertices.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(),
            [](const Component& a, const Component& b) { return a.cycles < b.cycles; });
  return out;
}

ComplexityTuple cycle_complexity(const MarkedCycleSet& marked, std::size_t cycle,
                                 const Component& component) {
  if (std::find(component.cycles.begin(), component.cycles.end(), cycle) == component.cycles.end())
    throw GraphError("cycle is not part of the component");
  const std::size_t longest = marked.lengths.empty() ? 5 : std::max<std::size_t>(5, marked.lengths.back());
  ComplexityTuple out{std::vector<std::size_t>(longest - 4, 0)};
  const auto mine = cycle_edges(marked.cycles[cycle]);
  for (std::size_t other : component.cycles) {
    const auto theirs = cycle_edges(marked.cycles[other]);
    std::vector<Edge> common;
    std::set_intersection(mine.begin(), mine.end(), theirs.begin(), theirs.end(),
                          std::back_inserter(common));
    const std::size_t len = marked.cycles[other].size();
    if (!common.empty() && len >= 5) ++out.counts[len - 5];
  }
  return out;
}

ComponentSignature component_signature(const MarkedCycleSet& marked, const Component& component) {
  std::map<std::pair<std::size_t, ComplexityTuple>, std::size_t> counts;
  for (std::size_t c : component.cycles)
    ++counts[{marked.cycles[c].size(), cycle_complexity(marked, c, component)}];
  ComponentSignature sig;
  for (auto& [key, count] : counts) sig.entries.emplace_back(key, count);
  std::sort(sig.entries.begin(), sig.entries.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first < b.first.first;
    return a.first.second > b.first.second;
  });
  return sig;
}

std::strong_ordering component_compare(const MarkedCycleSet& marked, const Component& a,
                                       const Component& b) {
  const auto sa = component_signature(marked, a);
  const auto sb = component_signature(marked, b);
  std::size_t i = 0, j = 0;
  while (i < sa.entries.size() || j < sb.entries.size()) {
    // Walk the merged position order; a missing position counts as zero.
    const auto* ka = i < sa.entries.size() ? &sa.entries[i].first : nullptr;
    const auto* kb = j < sb.entries.size() ? &sb.entries[j].first : nullptr;
    auto before = [](const auto& x, const auto& y) {
      return x.first != y.first ? x.first < y.first : x.second > y.second;
    };
    std::size_t ca = 0, cb = 0;
    if (ka && (!kb || before(*ka, *kb))) {
      ca = sa.entries[i++].second;
    } else if (kb && (!ka || before(*kb, *ka))) {
      cb = sb.entries[j++].second;
    } else {
      ca = sa.entries[i++].second;
      cb = sb.entries[j++].second;
    }
    if (ca != cb) return ca <=> cb;
  }
  return std::strong_ordering::equal;
}

DecompositionResult decompose_embedding(const EmbeddingCertificate& phi) {
  DecompositionResult out;
  const SimplicialGraph& g = phi.domain;
  if (!(g == phi.codomain)) {
    out.failure = "domain and codomain differ";
    return out;
  }
  const std::size_t n = g.order();
  if (phi.images.size() != n) {
    out.failure = "certificate does not cover the domain";
    return out;
  }
  std::vector<VertexId> sigma(n, n);
  for (VertexId v = 0; v < n; ++v) {
    const VertexId b = phi.images[v].base;
    if (b >= n || sigma[b] != n) {
      out.failure = "base map is not a bijection";
      return out;
    }
    sigma[b] = v;
  }
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != g.adjacent(sigma[u], sigma[v])) {
        out.failure = "base map is not a graph automorphism";
        return out;
      }
  const PcGroup group(g);
  std::set<NormalForm> tried;
  for (VertexId v = 0; v < n; ++v) {
    const NormalForm& candidate = phi.images[sigma[v]].conjugator;
    if (!tried.insert(candidate).second) continue;
    bool all = true;
    for (VertexId w = 0; w < n && all; ++w)
      all = group.coset_canonical(w, candidate.letters()) == phi.images[sigma[w]].conjugator;
    if (all) {
      out.decomposition = Decomposition{candidate, GraphEmbedding{sigma}};
      return out;
    }
  }
  out.failure = "no common conjugator among the image conjugators";
  return out;
}

RigidityReport rigidity_experiment(const SimplicialGraph& g, std::size_t depth,
                                   std::size_t vertex_budget) {
  if (!is_atomic(g)) throw GraphError("rigidity experiment needs an atomic graph");
  RigidityReport report;
  report.graph = g;
  report.depth = depth;
  std::set<std::vector<ConjugateGenerator>> seen;
  report.patches = enumerate_doubling_family(
      std::make_shared<const PcGroup>(g), depth,
      [&](const Patch& p, std::size_t) {
        enumerate_induced_embeddings(
            g.adjacency(), p.adjacency(), {}, [&](const std::vector<VertexId>& map) {
              ++report.total_embeddings;
              std::vector<ConjugateGenerator> images;
              for (VertexId x : map) images.push_back(p.vertex(x));
              if (!seen.insert(images).second) return true;
              EmbeddingCertificate cert{g, g, images, p.provenance()};
              EmbeddingRecord rec{std::move(images), decompose_embedding(cert)};
              if (!rec.result.decomposition) ++report.failures;
              report.embeddings.push_back(std::move(rec));
              return true;
            });
        return true;
      },
      vertex_budget);
  report.distinct_embeddings = report.embeddings.size();
  return report;
}

}  // namespace pcqi
