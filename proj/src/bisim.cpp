#include "pcqi/bisim.hpp"

#include <algorithm>
#include <numeric>

#include "hashing.hpp"

namespace pcqi {

std::optional<VertexId> ColoredGraph::find(std::string_view name) const {
  for (VertexId v = 0; v < names.size(); ++v)
    if (names[v] == name) return v;
  return std::nullopt;
}

ColoredGraph ColoredGraph::from_graph(const SimplicialGraph& g,
                                      const std::map<std::string, std::string>& colors) {
  ColoredGraph out{g.vertices(), {}, g.adjacency()};
  for (const auto& name : out.names) {
    const auto it = colors.find(name);
    if (it == colors.end()) throw ColorError("vertex '" + name + "' has no colour");
    out.colors.push_back(it->second);
  }
  for (const auto& [name, c] : colors)
    if (!g.find(name)) throw ColorError("colour given for unknown vertex '" + name + "'");
  return out;
}

bool is_connected(const ColoredGraph& g) {
  const std::size_t n = g.order();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.adjacency.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

CoveringCheck check_weak_covering(const std::vector<VertexId>& f, const ColoredGraph& source,
                                  const ColoredGraph& target) {
  CoveringCheck out;
  if (f.size() != source.order()) {
    out.violation = "map is not total on the source";
    return out;
  }
  for (VertexId v = 0; v < f.size(); ++v) {
    if (f[v] >= target.order()) {
      out.violation = "image of " + source.names[v] + " is not a target vertex";
      return out;
    }
    if (source.colors[v] != target.colors[f[v]]) {
      out.violation = "colour of " + source.names[v] + " is not preserved";
      return out;
    }
  }
  for (VertexId v = 0; v < f.size(); ++v) {
    for (VertexId w : source.adjacency.neighbors(v))
      if (!target.adjacency(f[v], f[w])) {
        out.violation = "edge " + source.names[v] + " -- " + source.names[w] + " is not mapped to an edge";
        return out;
      }
    // Every edge at f(v) lifts to an edge at v.
    for (VertexId x : target.adjacency.neighbors(f[v])) {
      bool lifted = false;
      for (VertexId w : source.adjacency.neighbors(v))
        if (f[w] == x) lifted = true;
      if (!lifted) {
        out.violation = "edge " + target.names[f[v]] + " -- " + target.names[x] +
                        " does not lift at " + source.names[v];
        return out;
      }
    }
  }
  out.ok = true;
  std::vector<char> hit(target.order(), 0);
  for (VertexId x : f) hit[x] = 1;
  out.surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  return out;
}

Quotient minimal_quotient(const ColoredGraph& g) {
  if (!is_connected(g)) throw ColorError("minimal_quotient needs a connected coloured graph");
  const std::size_t n = g.order();

  // Class ids are renumbered by first occurrence each round, so the fixpoint
  // test is a plain vector comparison.
  auto renumber = [n](const auto& keys) {
    std::vector<VertexId> ids(n);
    std::map<std::decay_t<decltype(keys[0])>, VertexId> seen;
    for (VertexId v = 0; v < n; ++v) ids[v] = seen.emplace(keys[v], seen.size()).first->second;
    return ids;
  };
  std::vector<VertexId> cls = renumber(g.colors);
  for (;;) {
    std::vector<std::pair<VertexId, std::vector<VertexId>>> keys(n);
    for (VertexId v = 0; v < n; ++v) {
      std::vector<VertexId> around;
      for (VertexId w : g.adjacency.neighbors(v)) around.push_back(cls[w]);
      std::sort(around.begin(), around.end());
      around.erase(std::unique(around.begin(), around.end()), around.end());
      keys[v] = {cls[v], std::move(around)};
    }
    auto next = renumber(keys);
    if (next == cls) break;
    cls = std::move(next);
  }

  const std::size_t k = *std::max_element(cls.begin(), cls.end()) + 1;
  Quotient q;
  q.partition.resize(k);
  for (VertexId v = 0; v < n; ++v) q.partition[cls[v]].push_back(v);
  q.map = cls;
  q.graph.adjacency = AdjacencyMatrix(k);
  for (const auto& members : q.partition) {
    q.graph.names.push_back(g.names[members.front()]);
    q.graph.colors.push_back(g.colors[members.front()]);
  }
  for (VertexId v = 0; v < n; ++v)
    for (VertexId w : g.adjacency.neighbors(v)) q.graph.adjacency.set(cls[v], cls[w]);
  return q;
}

namespace {

std::vector<std::uint64_t> color_labels(const ColoredGraph& g) {
  std::vector<std::uint64_t> out;
  for (const auto& c : g.colors) out.push_back(detail::hash_string(c));
  return out;
}

}  // namespace

BisimResult bisimilar(const ColoredGraph& a, const ColoredGraph& b) {
  BisimResult out;
  const Quotient qa = minimal_quotient(a);
  const Quotient qb = minimal_quotient(b);
  const auto la = color_labels(qb.graph);
  const auto lb = color_labels(qa.graph);
  // Isomorphism from b's quotient onto a's.
  const auto iso = find_isomorphism(qb.graph.adjacency, qa.graph.adjacency, &la, &lb);
  if (!iso) return out;
  out.bisimilar = true;
  out.common = qa.graph;
  out.map_a = qa.map;
  for (VertexId v = 0; v < b.order(); ++v) out.map_b.push_back(iso->map[qb.map[v]]);
  return out;
}

void check_pf_colors(const ColoredGraph& g, std::size_t n) {
  if (n == 0) throw ColorError("dimension must be at least 1");
  for (const auto& c : g.colors) {
    if (c == "f") continue;
    bool ok = c.size() >= 2 && c[0] == 'p';
    std::size_t idx = 0;
    for (std::size_t i = 1; ok && i < c.size(); ++i) {
      if (c[i] < '0' || c[i] > '9') ok = false;
      else idx = idx * 10 + static_cast<std::size_t>(c[i] - '0');
    }
    if (!ok || idx < 1 || idx > n + 1 || c[1] == '0')
      throw ColorError("colour '" + c + "' is not one of p1..p" + std::to_string(n + 1) + ", f");
  }
}

ColoredGraph permute_p_colors(const ColoredGraph& g, const std::vector<std::size_t>& sigma) {
  ColoredGraph out = g;
  for (auto& c : out.colors) {
    if (c == "f") continue;
    const std::size_t idx = std::stoul(c.substr(1)) - 1;
    if (idx >= sigma.size()) throw ColorError("colour '" + c + "' outside the permutation");
    c = "p" + std::to_string(sigma[idx] + 1);
  }
  return out;
}

PermutedBisimResult bisimilar_up_to_pcolor_permutation(const ColoredGraph& a,
                                                       const ColoredGraph& b, std::size_t n) {
  check_pf_colors(a, n);
  check_pf_colors(b, n);
  PermutedBisimResult out;
  std::vector<std::size_t> sigma(n + 1);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    auto r = bisimilar(permute_p_colors(a, sigma), b);
    if (r.bisimilar) {
      out.bisimilar = true;
      out.permutation = sigma;
      out.witness = std::move(r);
      return out;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

}  // namespace pcqi
