#include "pcqi/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>

#include "hashing.hpp"

namespace pcqi {

// ---------------------------------------------------------------------------
// AdjacencyMatrix

AdjacencyMatrix::AdjacencyMatrix(std::size_t n)
    : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

void AdjacencyMatrix::set(VertexId u, VertexId v, bool value) {
  const std::uint64_t mu = std::uint64_t{1} << (v & 63);
  const std::uint64_t mv = std::uint64_t{1} << (u & 63);
  if (value) {
    bits_[u * words_ + (v >> 6)] |= mu;
    bits_[v * words_ + (u >> 6)] |= mv;
  } else {
    bits_[u * words_ + (v >> 6)] &= ~mu;
    bits_[v * words_ + (u >> 6)] &= ~mv;
  }
}

void AdjacencyMatrix::grow(std::size_t new_size) {
  if (new_size <= n_) return;
  const std::size_t new_words = (new_size + 63) / 64;
  std::vector<std::uint64_t> bits(new_size * new_words, 0);
  for (std::size_t r = 0; r < n_; ++r)
    std::copy_n(bits_.begin() + r * words_, words_, bits.begin() + r * new_words);
  n_ = new_size;
  words_ = new_words;
  bits_ = std::move(bits);
}

std::size_t AdjacencyMatrix::degree(VertexId v) const {
  std::size_t d = 0;
  const auto* r = row(v);
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

std::vector<VertexId> AdjacencyMatrix::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  const auto* r = row(v);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// SimplicialGraph

SimplicialGraph::SimplicialGraph(std::vector<std::string> vertices,
                                 const std::vector<NamedEdge>& edges)
    : names_(std::move(vertices)) {
  std::sort(names_.begin(), names_.end());
  if (std::adjacent_find(names_.begin(), names_.end()) != names_.end())
    throw GraphError("duplicate vertex name '" +
                     *std::adjacent_find(names_.begin(), names_.end()) + "'");
  adjacency_ = AdjacencyMatrix(names_.size());
  for (const auto& [a, b] : edges) {
    const auto u = find(a);
    const auto v = find(b);
    if (!u) throw GraphError("edge endpoint '" + a + "' is not a declared vertex");
    if (!v) throw GraphError("edge endpoint '" + b + "' is not a declared vertex");
    if (*u == *v) throw GraphError("self-loop at '" + a + "'");
    if (adjacency_(*u, *v)) throw GraphError("repeated edge " + a + " -- " + b);
    adjacency_.set(*u, *v);
    ++edge_count_;
  }
}

SimplicialGraph SimplicialGraph::from_adjacency(const std::vector<std::string>& names,
                                                const AdjacencyMatrix& adjacency) {
  std::vector<NamedEdge> edges;
  for (VertexId u = 0; u < names.size(); ++u)
    for (VertexId v = u + 1; v < names.size(); ++v)
      if (adjacency(u, v)) edges.emplace_back(names[u], names[v]);
  return SimplicialGraph(names, edges);
}

std::optional<VertexId> SimplicialGraph::find(std::string_view name) const {
  const auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

VertexId SimplicialGraph::index_of(std::string_view name) const {
  if (const auto v = find(name)) return *v;
  throw GraphError("unknown vertex '" + std::string(name) + "'");
}

std::vector<std::pair<VertexId, VertexId>> SimplicialGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < order(); ++u)
    for (VertexId v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<SimplicialGraph::NamedEdge> SimplicialGraph::named_edges() const {
  std::vector<NamedEdge> out;
  for (const auto& [u, v] : edges()) out.emplace_back(names_[u], names_[v]);
  return out;
}

SimplicialGraph SimplicialGraph::induced(const VertexSet& keep) const {
  std::vector<std::string> names;
  AdjacencyMatrix adj(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    names.push_back(names_.at(keep[i]));
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (adjacency_(keep[i], keep[j])) adj.set(i, j);
  }
  return from_adjacency(names, adj);
}

SimplicialGraph SimplicialGraph::without(const VertexSet& drop) const {
  VertexSet keep;
  for (VertexId v = 0; v < order(); ++v)
    if (!std::binary_search(drop.begin(), drop.end(), v)) keep.push_back(v);
  return induced(keep);
}

bool is_induced_embedding(const AdjacencyMatrix& domain, const AdjacencyMatrix& codomain,
                          const std::vector<VertexId>& map) {
  if (map.size() != domain.size()) return false;
  std::vector<char> used(codomain.size(), 0);
  for (VertexId v : map) {
    if (v >= codomain.size() || used[v]) return false;
    used[v] = 1;
  }
  for (VertexId u = 0; u < map.size(); ++u)
    for (VertexId v = u; v < map.size(); ++v)
      if (domain(u, v) != codomain(map[u], map[v])) return false;
  return true;
}

bool is_induced_embedding(const SimplicialGraph& domain, const SimplicialGraph& codomain,
                          const GraphEmbedding& embedding) {
  return is_induced_embedding(domain.adjacency(), codomain.adjacency(), embedding.map);
}

// ---------------------------------------------------------------------------
// Local structure

VertexSet star(const SimplicialGraph& g, VertexId v) {
  if (v >= g.order()) throw GraphError("vertex index out of range");
  VertexSet s = g.neighbors(v);
  s.insert(std::upper_bound(s.begin(), s.end(), v), v);
  return s;
}

VertexSet star(const SimplicialGraph& g, std::string_view v) { return star(g, g.index_of(v)); }

VertexSet link(const SimplicialGraph& g, VertexId v) {
  if (v >= g.order()) throw GraphError("vertex index out of range");
  return g.neighbors(v);
}

namespace {

std::vector<std::size_t> bfs_distances(const SimplicialGraph& g, VertexId root) {
  constexpr auto inf = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(g.order(), inf);
  std::queue<VertexId> queue;
  dist[root] = 0;
  queue.push(root);
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop();
    for (VertexId w : g.neighbors(u))
      if (dist[w] == inf) {
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
  }
  return dist;
}

}  // namespace

std::vector<VertexSet> connected_components(const SimplicialGraph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.order(), 0);
  for (VertexId s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::vector<VertexId> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (VertexId w : g.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const SimplicialGraph& g) {
  return g.order() <= 1 || connected_components(g).size() == 1;
}

std::optional<std::size_t> diameter(const SimplicialGraph& g) {
  if (g.empty() || !is_connected(g)) return std::nullopt;
  std::size_t best = 0;
  for (VertexId v = 0; v < g.order(); ++v) {
    const auto dist = bfs_distances(g, v);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

std::vector<VertexId> shortest_cycle(const SimplicialGraph& g) {
  constexpr auto inf = static_cast<std::size_t>(-1);
  std::size_t best = inf;
  std::vector<VertexId> best_cycle;
  const std::size_t n = g.order();
  std::vector<std::size_t> dist(n);
  std::vector<VertexId> parent(n);
  for (VertexId root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), inf);
    dist[root] = 0;
    parent[root] = root;
    std::queue<VertexId> queue;
    queue.push(root);
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop();
      if (2 * dist[u] + 1 >= best) break;
      for (VertexId w : g.neighbors(u)) {
        if (dist[w] == inf) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push(w);
        } else if (parent[u] != w && dist[w] >= dist[u]) {
          const std::size_t len = dist[u] + dist[w] + 1;
          if (len >= best) continue;
          // Walk both branches to the root; they must only meet there.
          std::vector<VertexId> left, right;
          for (VertexId x = u; x != root; x = parent[x]) left.push_back(x);
          for (VertexId x = w; x != root; x = parent[x]) right.push_back(x);
          std::set<VertexId> left_set(left.begin(), left.end());
          bool disjoint = true;
          for (VertexId x : right)
            if (left_set.count(x)) disjoint = false;
          if (!disjoint) continue;
          best = len;
          best_cycle.assign(1, root);
          best_cycle.insert(best_cycle.end(), left.rbegin(), left.rend());
          best_cycle.insert(best_cycle.end(), right.begin(), right.end());
        }
      }
    }
  }
  return best_cycle;
}

std::optional<std::size_t> girth(const SimplicialGraph& g) {
  const auto cycle = shortest_cycle(g);
  if (cycle.empty()) return std::nullopt;
  return cycle.size();
}

// ---------------------------------------------------------------------------
// Shapes and predicates

ShapeVerdict classify_shape(const SimplicialGraph& g) {
  if (g.empty()) throw GraphError("classify_shape needs a nonempty graph");
  const std::size_t n = g.order();
  const std::size_t m = g.edge_count();
  ShapeVerdict out;
  if (m == n * (n - 1) / 2) {
    out.kind = ShapeKind::clique;
    out.first = n;
    out.also_edgeless = (n == 1);
    return out;
  }
  if (m == 0) {
    out.kind = ShapeKind::edgeless;
    out.first = n;
    return out;
  }
  const bool connected = is_connected(g);
  if (connected && m + 1 == n) {
    out.kind = ShapeKind::tree;
    out.first = *diameter(g);
    return out;
  }
  if (connected) {
    // Complete bipartite: 2-colour and count cross edges.
    std::vector<int> side(n, -1);
    side[0] = 0;
    std::vector<VertexId> stack{0};
    bool bipartite = true;
    while (!stack.empty() && bipartite) {
      const VertexId u = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          stack.push_back(w);
        } else if (side[w] == side[u]) {
          bipartite = false;
        }
      }
    }
    if (bipartite) {
      const auto a = static_cast<std::size_t>(std::count(side.begin(), side.end(), 0));
      const std::size_t b = n - a;
      if (a * b == m) {
        out.kind = ShapeKind::join_of_two_edgeless;
        out.first = std::min(a, b);
        out.second = std::max(a, b);
        return out;
      }
    }
  }
  return out;
}

std::string to_string(const ShapeVerdict& shape) {
  switch (shape.kind) {
    case ShapeKind::clique:
      return "clique(" + std::to_string(shape.first) + ")";
    case ShapeKind::edgeless:
      return "edgeless(" + std::to_string(shape.first) + ")";
    case ShapeKind::tree:
      return "tree(" + std::to_string(shape.first) + ")";
    case ShapeKind::join_of_two_edgeless:
      return "join_of_two_edgeless(" + std::to_string(shape.first) + "," +
             std::to_string(shape.second) + ")";
    case ShapeKind::other:
      break;
  }
  return "other";
}

bool is_triangle_built(const SimplicialGraph& g) {
  // Induced C4 or P4 among every 4-subset, detected by edge count and degrees.
  const std::size_t n = g.order();
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      for (VertexId c = b + 1; c < n; ++c)
        for (VertexId d = c + 1; d < n; ++d) {
          const VertexId q[4] = {a, b, c, d};
          int deg[4] = {0, 0, 0, 0};
          int edges = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (g.adjacent(q[i], q[j])) {
                ++deg[i];
                ++deg[j];
                ++edges;
              }
          if (edges == 4 && deg[0] == 2 && deg[1] == 2 && deg[2] == 2 && deg[3] == 2)
            return false;
          if (edges == 3) {
            const int leaves = (deg[0] == 1) + (deg[1] == 1) + (deg[2] == 1) + (deg[3] == 1);
            if (leaves == 2) return false;
          }
        }
  return true;
}

bool is_chordal(const SimplicialGraph& g) {
  // Maximum cardinality search, then verify the reverse order is a perfect
  // elimination ordering.
  const std::size_t n = g.order();
  std::vector<std::size_t> weight(n, 0);
  std::vector<char> numbered(n, 0);
  std::vector<VertexId> order;  // visit order
  std::vector<std::size_t> position(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    VertexId pick = n;
    for (VertexId v = 0; v < n; ++v)
      if (!numbered[v] && (pick == n || weight[v] > weight[pick])) pick = v;
    numbered[pick] = 1;
    position[pick] = step;
    order.push_back(pick);
    for (VertexId w : g.neighbors(pick))
      if (!numbered[w]) ++weight[w];
  }
  // For each v, its earlier-visited neighbours must form a clique; it suffices
  // to check they are all adjacent to the latest of them.
  for (VertexId v : order) {
    std::vector<VertexId> earlier;
    for (VertexId w : g.neighbors(v))
      if (position[w] < position[v]) earlier.push_back(w);
    if (earlier.size() < 2) continue;
    const VertexId parent = *std::max_element(
        earlier.begin(), earlier.end(),
        [&](VertexId x, VertexId y) { return position[x] < position[y]; });
    for (VertexId w : earlier)
      if (w != parent && !g.adjacent(w, parent)) return false;
  }
  return true;
}

AtomicityReport check_atomic(const SimplicialGraph& g) {
  AtomicityReport report;
  if (g.empty()) {
    report.violation = AtomicViolation::empty;
    return report;
  }
  const auto comps = connected_components(g);
  if (comps.size() > 1) {
    report.violation = AtomicViolation::disconnected;
    report.witness_vertex = comps[1].front();
    return report;
  }
  for (VertexId v = 0; v < g.order(); ++v)
    if (g.degree(v) < 2) {
      report.violation = AtomicViolation::valence_below_two;
      report.witness_vertex = v;
      return report;
    }
  const auto cycle = shortest_cycle(g);
  if (!cycle.empty() && cycle.size() < 5) {
    report.violation = AtomicViolation::short_cycle;
    report.witness_cycle = cycle;
    return report;
  }
  for (VertexId v = 0; v < g.order(); ++v) {
    const auto rest = g.without(star(g, v));
    if (rest.empty() || !is_connected(rest)) {
      report.violation = AtomicViolation::separating_star;
      report.witness_vertex = v;
      return report;
    }
  }
  report.atomic = true;
  return report;
}

std::string to_string(AtomicViolation violation) {
  switch (violation) {
    case AtomicViolation::none: return "none";
    case AtomicViolation::empty: return "empty";
    case AtomicViolation::disconnected: return "disconnected";
    case AtomicViolation::valence_below_two: return "valence_below_two";
    case AtomicViolation::short_cycle: return "short_cycle";
    case AtomicViolation::separating_star: return "separating_star";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Induced subgraph search

SearchStats enumerate_induced_embeddings(
    const AdjacencyMatrix& pattern, const AdjacencyMatrix& target, const SearchOptions& options,
    const std::function<bool(const std::vector<VertexId>&)>& visit) {
  SearchStats stats;
  const std::size_t k = pattern.size();
  const std::size_t n = target.size();
  if (k == 0) {
    stats.found = 1;
    visit({});
    return stats;
  }
  if (k > n) return stats;

  std::vector<std::size_t> pdeg(k), tdeg(n);
  for (VertexId v = 0; v < k; ++v) pdeg[v] = pattern.degree(v);
  for (VertexId v = 0; v < n; ++v) tdeg[v] = target.degree(v);

  // Placement order.
  std::vector<VertexId> order;
  std::vector<char> placed(k, 0);
  std::vector<std::size_t> placed_neighbors(k, 0);
  for (std::size_t step = 0; step < k; ++step) {
    VertexId pick = k;
    for (VertexId v = 0; v < k; ++v) {
      if (placed[v]) continue;
      if (pick == k || placed_neighbors[v] > placed_neighbors[pick] ||
          (placed_neighbors[v] == placed_neighbors[pick] && pdeg[v] > pdeg[pick]))
        pick = v;
    }
    placed[pick] = 1;
    order.push_back(pick);
    for (VertexId w : pattern.neighbors(pick)) ++placed_neighbors[w];
  }
  std::vector<std::size_t> slot_of(k);
  for (std::size_t i = 0; i < k; ++i) slot_of[order[i]] = i;
  // Anchor: the earliest placed neighbour, used to restrict candidates.
  std::vector<std::size_t> anchor(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (VertexId w : pattern.neighbors(order[i]))
      if (w != order[i] && slot_of[w] < i) anchor[i] = std::min(anchor[i], slot_of[w]);

  std::vector<VertexId> image(k, 0);  // by pattern vertex
  std::vector<char> used(n, 0);
  bool stop = false;

  auto compatible = [&](std::size_t slot, VertexId t) {
    const VertexId p = order[slot];
    if (used[t] || tdeg[t] < pdeg[p]) return false;
    if (pattern(p, p) != target(t, t)) return false;
    if (options.pattern_labels && options.target_labels &&
        (*options.pattern_labels)[p] != (*options.target_labels)[t])
      return false;
    for (std::size_t j = 0; j < slot; ++j) {
      const VertexId q = order[j];
      if (pattern(p, q) != target(t, image[q])) return false;
    }
    return true;
  };

  std::function<void(std::size_t)> extend = [&](std::size_t slot) {
    if (stop) return;
    if (slot == k) {
      ++stats.found;
      if (!visit(image)) {
        stop = true;
        stats.exhaustive = false;
      } else if (options.limit && stats.found >= options.limit) {
        stop = true;
        stats.exhaustive = false;
      }
      return;
    }
    auto try_candidate = [&](VertexId t) {
      ++stats.nodes;
      if (options.max_nodes && stats.nodes > options.max_nodes) {
        stop = true;
        stats.exhaustive = false;
        return;
      }
      if (!compatible(slot, t)) return;
      image[order[slot]] = t;
      used[t] = 1;
      extend(slot + 1);
      used[t] = 0;
    };
    if (anchor[slot] < k) {
      const auto* row = target.row(image[order[anchor[slot]]]);
      for (std::size_t w = 0; w < target.words_per_row() && !stop; ++w) {
        std::uint64_t bits = row[w];
        while (bits && !stop) {
          try_candidate(w * 64 + std::countr_zero(bits));
          bits &= bits - 1;
        }
      }
    } else {
      for (VertexId t = 0; t < n && !stop; ++t) try_candidate(t);
    }
  };
  extend(0);
  return stats;
}

std::vector<GraphEmbedding> find_induced_embeddings(const SimplicialGraph& pattern,
                                                    const SimplicialGraph& target,
                                                    std::size_t limit) {
  std::vector<GraphEmbedding> out;
  SearchOptions options;
  options.limit = limit;
  enumerate_induced_embeddings(pattern.adjacency(), target.adjacency(), options,
                               [&](const std::vector<VertexId>& map) {
                                 out.push_back(GraphEmbedding{map});
                                 return true;
                               });
  return out;
}

std::vector<std::uint64_t> refine_colors(const AdjacencyMatrix& adjacency,
                                         std::vector<std::uint64_t> colors) {
  const std::size_t n = adjacency.size();
  if (colors.size() != n) colors.assign(n, 0);
  auto class_count = [](const std::vector<std::uint64_t>& c) {
    std::vector<std::uint64_t> s(c);
    std::sort(s.begin(), s.end());
    return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
  };
  std::size_t classes = class_count(colors);
  std::vector<std::uint64_t> neighbor_colors;
  for (std::size_t round = 0; round <= n; ++round) {
    std::vector<std::uint64_t> next(n);
    for (VertexId v = 0; v < n; ++v) {
      neighbor_colors.clear();
      for (VertexId w : adjacency.neighbors(v)) neighbor_colors.push_back(colors[w]);
      std::sort(neighbor_colors.begin(), neighbor_colors.end());
      std::uint64_t h = detail::mix(colors[v] ^ 0x9e3779b97f4a7c15ULL);
      for (auto c : neighbor_colors) h = detail::combine(h, c);
      next[v] = h;
    }
    const std::size_t next_classes = class_count(next);
    colors = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return colors;
}

std::uint64_t invariant_hash(const AdjacencyMatrix& adjacency,
                             const std::vector<std::uint64_t>* labels) {
  auto colors = refine_colors(adjacency, labels ? *labels : std::vector<std::uint64_t>{});
  std::sort(colors.begin(), colors.end());
  std::uint64_t h = detail::mix(adjacency.size());
  for (auto c : colors) h = detail::combine(h, c);
  return h;
}

std::optional<GraphEmbedding> find_isomorphism(const AdjacencyMatrix& a, const AdjacencyMatrix& b,
                                               const std::vector<std::uint64_t>* labels_a,
                                               const std::vector<std::uint64_t>* labels_b) {
  if (a.size() != b.size()) return std::nullopt;
  const auto ca = refine_colors(a, labels_a ? *labels_a : std::vector<std::uint64_t>{});
  const auto cb = refine_colors(b, labels_b ? *labels_b : std::vector<std::uint64_t>{});
  auto sa = ca, sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  SearchOptions options;
  options.pattern_labels = &ca;
  options.target_labels = &cb;
  options.limit = 1;
  std::optional<GraphEmbedding> out;
  enumerate_induced_embeddings(a, b, options, [&](const std::vector<VertexId>& map) {
    out = GraphEmbedding{map};
    return false;
  });
  return out;
}

std::optional<GraphEmbedding> are_isomorphic(const SimplicialGraph& g, const SimplicialGraph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  return find_isomorphism(g.adjacency(), h.adjacency());
}

std::vector<GraphEmbedding> automorphisms(const SimplicialGraph& g) {
  const auto colors = refine_colors(g.adjacency(), {});
  SearchOptions options;
  options.pattern_labels = &colors;
  options.target_labels = &colors;
  std::vector<GraphEmbedding> out;
  enumerate_induced_embeddings(g.adjacency(), g.adjacency(), options,
                               [&](const std::vector<VertexId>& map) {
                                 out.push_back(GraphEmbedding{map});
                                 return true;
                               });
  return out;
}

}  // namespace pcqi
