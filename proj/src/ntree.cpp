#include "pcqi/ntree.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace pcqi {

std::string simplex_name(const Simplex& s) {
  std::string out;
  for (const auto& v : s) {
    if (!out.empty()) out += ',';
    out += v;
  }
  return out;
}

NTreeComplex::NTreeComplex(std::size_t n, std::vector<Simplex> simplices) : n_(n) {
  if (n == 0) throw NTreeError("dimension must be at least 1");
  for (auto& s : simplices) {
    std::sort(s.begin(), s.end());
    if (s.size() != n + 1)
      throw NTreeError("simplex {" + simplex_name(s) + "} does not have " + std::to_string(n + 1) +
                       " vertices");
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw NTreeError("simplex {" + simplex_name(s) + "} repeats a vertex");
    for (const auto& v : s)
      if (v.empty()) throw NTreeError("empty vertex name");
  }
  std::sort(simplices.begin(), simplices.end());
  if (auto it = std::adjacent_find(simplices.begin(), simplices.end()); it != simplices.end())
    throw NTreeError("simplex {" + simplex_name(*it) + "} listed twice");
  simplices_ = std::move(simplices);
}

std::vector<std::string> NTreeComplex::vertices() const {
  std::set<std::string> all;
  for (const auto& s : simplices_) all.insert(s.begin(), s.end());
  return {all.begin(), all.end()};
}

SimplicialGraph NTreeComplex::one_skeleton() const {
  std::set<SimplicialGraph::NamedEdge> edges;
  for (const auto& s : simplices_)
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) edges.emplace(s[i], s[j]);
  return SimplicialGraph(vertices(), {edges.begin(), edges.end()});
}

namespace {

std::vector<Simplex> faces_of(const Simplex& s) {
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex f = s;
    f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(std::move(f));
  }
  return out;
}

// (n-1)-face -> indices of the top simplices containing it.
std::map<Simplex, std::vector<std::size_t>> face_incidence(const NTreeComplex& k) {
  std::map<Simplex, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < k.simplices().size(); ++i)
    for (auto& f : faces_of(k.simplices()[i])) out[std::move(f)].push_back(i);
  return out;
}

bool contains(const Simplex& s, const std::string& v) {
  return std::binary_search(s.begin(), s.end(), v);
}

bool includes(const Simplex& big, const Simplex& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

NTreeValidation validate_ntree(const NTreeComplex& k) {
  NTreeValidation out;
  const auto& simplices = k.simplices();
  if (simplices.empty()) {
    out.reason = "no simplices";
    return out;
  }
  // Nodes: simplices 0..S-1, then shared faces.
  const std::size_t s_count = simplices.size();
  std::vector<Simplex> shared;
  std::vector<std::vector<std::size_t>> adj(s_count);
  std::size_t edge_count = 0;
  for (const auto& [face, members] : face_incidence(k)) {
    if (members.size() < 2) continue;
    const std::size_t node = s_count + shared.size();
    shared.push_back(face);
    adj.emplace_back();
    for (std::size_t m : members) {
      adj[m].push_back(node);
      adj[node].push_back(m);
      ++edge_count;
    }
  }
  const std::size_t nodes = adj.size();
  auto node_has = [&](std::size_t node, const std::string& v) {
    return contains(node < s_count ? simplices[node] : shared[node - s_count], v);
  };
  // Connectivity of the nodes accepted by `keep`, starting at `root`.
  auto reach = [&](std::size_t root, const auto& keep) {
    std::vector<char> seen(nodes, 0);
    std::vector<std::size_t> stack{root};
    seen[root] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : adj[x])
        if (!seen[y] && keep(y)) {
          seen[y] = 1;
          ++count;
          stack.push_back(y);
        }
    }
    return count;
  };

  if (reach(0, [](std::size_t) { return true; }) != nodes) {
    out.reason = "simplices are not connected through shared faces";
    return out;
  }
  if (edge_count != nodes - 1) {
    out.reason = "shared faces close a cycle of simplices";
    return out;
  }
  for (const auto& v : k.vertices()) {
    std::size_t total = 0, root = nodes;
    for (std::size_t x = 0; x < nodes; ++x)
      if (node_has(x, v)) {
        ++total;
        if (root == nodes) root = x;
      }
    if (reach(root, [&](std::size_t y) { return node_has(y, v); }) != total) {
      out.reason = "simplices around vertex " + v + " are not glued along faces";
      for (std::size_t x = 0; x < s_count; ++x)
        if (contains(simplices[x], v)) out.witness.push_back(simplices[x]);
      return out;
    }
  }
  out.valid = true;
  return out;
}

VertexColoring vertex_coloring(const NTreeComplex& k) {
  const auto& simplices = k.simplices();
  if (simplices.empty()) throw NTreeError("cannot colour an empty complex");
  VertexColoring color;
  for (std::size_t i = 0; i < simplices[0].size(); ++i) color[simplices[0][i]] = i + 1;

  const auto incidence = face_incidence(k);
  std::vector<char> done(simplices.size(), 0);
  std::deque<std::size_t> queue{0};
  done[0] = 1;
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    for (const auto& face : faces_of(simplices[s])) {
      for (std::size_t t : incidence.at(face)) {
        const auto& ts = simplices[t];
        // The vertex of t off the face takes the colour s uses off the face.
        std::string apex_s, apex_t;
        for (const auto& v : simplices[s])
          if (!contains(face, v)) apex_s = v;
        for (const auto& v : ts)
          if (!contains(face, v)) apex_t = v;
        const std::size_t c = color.at(apex_s);
        const auto [it, inserted] = color.emplace(apex_t, c);
        if (!inserted && it->second != c)
          throw NTreeError("no consistent colouring at vertex " + apex_t);
        if (!done[t]) {
          done[t] = 1;
          queue.push_back(t);
        }
      }
    }
  }
  if (std::find(done.begin(), done.end(), 0) != done.end())
    throw NTreeError("complex is not connected through shared faces");
  for (const auto& s : simplices) {
    std::vector<std::size_t> seen;
    for (const auto& v : s) seen.push_back(color.at(v));
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (seen[i] != i + 1) throw NTreeError("simplex {" + simplex_name(s) + "} repeats a colour");
  }
  return color;
}

std::vector<Piece> pieces(const NTreeComplex& k, const VertexColoring& coloring) {
  std::vector<Piece> out;
  for (const auto& [face, members] : face_incidence(k)) {
    if (members.size() < 2) continue;
    Piece p{face, {}, 0};
    for (std::size_t m : members)
      for (const auto& v : k.simplices()[m])
        if (!contains(face, v)) p.tips.push_back(v);
    std::sort(p.tips.begin(), p.tips.end());
    p.label = coloring.at(p.tips.front());
    for (const auto& t : p.tips)
      if (coloring.at(t) != p.label) throw NTreeError("tips of a piece carry different colours");
    out.push_back(std::move(p));
  }
  return out;
}

Gph build_gph(const NTreeComplex& k, const VertexColoring& coloring) {
  for (const auto& s : k.simplices()) {
    std::vector<bool> hit(k.dimension() + 2, false);
    for (const auto& v : s) {
      const auto it = coloring.find(v);
      if (it == coloring.end() || it->second < 1 || it->second > k.dimension() + 1 || hit[it->second])
        throw NTreeError("colouring is not proper on simplex " + simplex_name(s));
      hit[it->second] = true;
    }
  }
  Gph g;
  g.pieces = pieces(k, coloring);
  for (const auto& s : k.simplices()) {
    std::size_t in = 0;
    for (const auto& p : g.pieces)
      if (includes(s, p.spine)) ++in;
    if (in > 1) g.f_simplices.push_back(s);
  }
  const std::size_t np = g.pieces.size();
  g.graph.adjacency = AdjacencyMatrix(np + g.f_simplices.size());
  for (const auto& p : g.pieces) {
    g.graph.names.push_back("p:" + simplex_name(p.spine));
    g.graph.colors.push_back("p" + std::to_string(p.label));
  }
  for (std::size_t j = 0; j < g.f_simplices.size(); ++j) {
    g.graph.names.push_back("f:" + simplex_name(g.f_simplices[j]));
    g.graph.colors.push_back("f");
    for (std::size_t i = 0; i < np; ++i)
      if (includes(g.f_simplices[j], g.pieces[i].spine)) g.graph.adjacency.set(i, np + j);
  }
  return g;
}

Gph build_gph(const NTreeComplex& k) { return build_gph(k, vertex_coloring(k)); }

NTreeDouble double_ntree(const NTreeComplex& k, std::string_view v) {
  const auto all = k.vertices();
  const std::string center(v);
  if (!std::binary_search(all.begin(), all.end(), center))
    throw NTreeError("unknown vertex '" + center + "'");
  std::set<std::string> star_vertices;
  for (const auto& s : k.simplices())
    if (contains(s, center)) star_vertices.insert(s.begin(), s.end());

  NTreeDouble out;
  std::set<std::string> taken(all.begin(), all.end());
  std::map<std::string, std::string> copy;
  for (const auto& x : all) {
    out.fold[x] = x;
    if (star_vertices.count(x)) continue;
    std::string fresh = x + "'";
    while (taken.count(fresh)) fresh += "'";
    taken.insert(fresh);
    copy[x] = fresh;
    out.fold[fresh] = x;
  }
  std::set<Simplex> simplices(k.simplices().begin(), k.simplices().end());
  for (const auto& s : k.simplices()) {
    if (contains(s, center)) continue;
    Simplex t;
    for (const auto& x : s) t.push_back(copy.count(x) ? copy[x] : x);
    std::sort(t.begin(), t.end());
    simplices.insert(std::move(t));
  }
  out.complex = NTreeComplex(k.dimension(), {simplices.begin(), simplices.end()});
  return out;
}

VertexColoring pull_back(const VertexColoring& coloring,
                         const std::map<std::string, std::string>& fold) {
  VertexColoring out;
  for (const auto& [x, y] : fold) out[x] = coloring.at(y);
  return out;
}

std::vector<VertexId> gph_map(const Gph& source, const Gph& target,
                              const std::map<std::string, std::string>& vertex_map) {
  auto image = [&](const Simplex& s) {
    Simplex t;
    for (const auto& x : s) t.push_back(vertex_map.at(x));
    std::sort(t.begin(), t.end());
    return t;
  };
  std::vector<VertexId> out;
  for (const auto& p : source.pieces) {
    const Simplex spine = image(p.spine);
    auto it = std::find_if(target.pieces.begin(), target.pieces.end(),
                           [&](const Piece& q) { return q.spine == spine; });
    if (it == target.pieces.end())
      throw NTreeError("no piece with spine {" + simplex_name(spine) + "} in the target");
    out.push_back(static_cast<VertexId>(it - target.pieces.begin()));
  }
  for (const auto& s : source.f_simplices) {
    const Simplex t = image(s);
    auto it = std::find(target.f_simplices.begin(), target.f_simplices.end(), t);
    if (it == target.f_simplices.end())
      throw NTreeError("simplex {" + simplex_name(t) + "} is not an f-vertex of the target");
    out.push_back(target.pieces.size() + static_cast<VertexId>(it - target.f_simplices.begin()));
  }
  return out;
}

EmbeddingCertificate weak_cover_to_embedding(const NTreeComplex& delta, const NTreeComplex& gamma,
                                             const std::vector<VertexId>& f) {
  return weak_cover_to_embedding(delta, vertex_coloring(delta), gamma, vertex_coloring(gamma), f);
}

EmbeddingCertificate weak_cover_to_embedding(const NTreeComplex& delta, const VertexColoring& col_d,
                                             const NTreeComplex& gamma, const VertexColoring& col_g,
                                             const std::vector<VertexId>& f) {
  if (delta.dimension() != gamma.dimension()) throw NTreeError("complexes differ in dimension");
  const Gph gd = build_gph(delta, col_d);
  const Gph gg = build_gph(gamma, col_g);
  const auto cover = check_weak_covering(f, gd.graph, gg.graph);
  if (!cover.ok || !cover.surjective)
    throw NTreeError("map is not a surjective weak covering: " +
                     (cover.ok ? std::string("not surjective") : cover.violation));

  const SimplicialGraph dsk = delta.one_skeleton();
  const SimplicialGraph gsk = gamma.one_skeleton();
  const PcGroup group(gsk);

  // phi(x) = base^conj, with conj kept as a raw word until the end.
  std::map<std::string, std::pair<VertexId, Word>> phi;
  auto assign = [&](const std::string& x, const std::string& target, const Word& conj) {
    const VertexId base = gsk.index_of(target);
    const auto [it, inserted] = phi.emplace(x, std::make_pair(base, conj));
    if (!inserted && (it->second.first != base ||
                      make_conjugate(group, base, it->second.second) != make_conjugate(group, base, conj)))
      throw NTreeError("inconsistent image for vertex " + x);
  };
  // Vertex of `target` with the colour of x.
  auto by_color = [&](const std::string& x, const Simplex& target) -> const std::string& {
    for (const auto& y : target)
      if (col_g.at(y) == col_d.at(x)) return y;
    throw NTreeError("no vertex of matching colour for " + x);
  };

  if (gd.pieces.empty()) {
    const Simplex& s = delta.simplices().front();
    for (const auto& x : s) assign(x, by_color(x, gamma.simplices().front()), {});
  } else {
    const std::size_t npd = gd.pieces.size();
    const std::size_t npg = gg.pieces.size();
    std::map<Simplex, std::size_t> piece_of;
    for (std::size_t i = 0; i < npd; ++i) piece_of[gd.pieces[i].spine] = i;
    std::map<Simplex, std::size_t> f_index;
    for (std::size_t j = 0; j < gd.f_simplices.size(); ++j) f_index[gd.f_simplices[j]] = npd + j;

    std::vector<char> queued(npd, 0);
    std::deque<std::pair<std::size_t, Word>> work{{0, Word{}}};
    queued[0] = 1;
    while (!work.empty()) {
      const auto [pi, g_face] = work.front();
      work.pop_front();
      const Piece& p = gd.pieces[pi];
      const Piece& q = gg.pieces[f[pi]];
      for (const auto& y : p.spine) assign(y, by_color(y, q.spine), g_face);

      std::map<std::string, int> used;
      std::vector<std::string> fresh;
      for (const auto& t : p.tips) {
        if (const auto it = phi.find(t); it != phi.end())
          ++used[gsk.name(it->second.first)];
        else
          fresh.push_back(t);
      }
      for (const auto& t : fresh) {
        Simplex s = p.spine;
        s.insert(std::upper_bound(s.begin(), s.end(), t), t);
        const auto fi = f_index.find(s);
        std::string tau;
        if (fi != f_index.end()) {
          const Simplex& image = gg.f_simplices.at(f[fi->second] - npg);
          for (const auto& y : image)
            if (!contains(q.spine, y)) tau = y;
        } else {
          const auto same = std::find(q.tips.begin(), q.tips.end(), t);
          if (same != q.tips.end() && !used.count(t)) {
            tau = t;
          } else {
            tau = q.tips.front();
            for (const auto& c : q.tips)
              if (!used.count(c)) {
                tau = c;
                break;
              }
          }
        }
        // Repeated use of a tip is separated by powers of another tip of
        // the same piece; those commute with the whole spine.
        const int m = used[tau]++;
        Word g_simplex = g_face;
        if (m > 0) {
          const std::string& other = q.tips.front() == tau ? q.tips[1] : q.tips.front();
          g_simplex = concat(group.generator(gsk.index_of(other), m), g_face);
        }
        assign(t, tau, g_simplex);
        if (fi == f_index.end()) continue;
        for (const auto& face : faces_of(s)) {
          const auto pj = piece_of.find(face);
          if (pj == piece_of.end() || queued[pj->second]) continue;
          queued[pj->second] = 1;
          work.emplace_back(pj->second, g_simplex);
        }
      }
    }
  }

  EmbeddingCertificate cert{dsk, gsk, {}, {}};
  for (const auto& x : dsk.vertices()) {
    const auto it = phi.find(x);
    if (it == phi.end()) throw NTreeError("vertex " + x + " was never reached");
    cert.images.push_back(make_conjugate(group, it->second.first, it->second.second));
  }
  if (!verify_certificate(cert)) throw NTreeError("constructed map failed verification");
  return cert;
}

std::vector<Simplex> maximal_cliques(const SimplicialGraph& g) {
  std::vector<Simplex> out;
  std::vector<VertexId> r;
  std::function<void(std::vector<VertexId>, std::vector<VertexId>)> expand =
      [&](std::vector<VertexId> p, std::vector<VertexId> x) {
        if (p.empty() && x.empty()) {
          Simplex s;
          for (VertexId v : r) s.push_back(g.name(v));
          std::sort(s.begin(), s.end());
          out.push_back(std::move(s));
          return;
        }
        while (!p.empty()) {
          const VertexId v = p.front();
          std::vector<VertexId> p2, x2;
          for (VertexId w : p)
            if (g.adjacent(v, w)) p2.push_back(w);
          for (VertexId w : x)
            if (g.adjacent(v, w)) x2.push_back(w);
          r.push_back(v);
          expand(std::move(p2), std::move(x2));
          r.pop_back();
          p.erase(p.begin());
          x.push_back(v);
        }
      };
  std::vector<VertexId> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  expand(all, {});
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<NTreeComplex> as_ntree(const SimplicialGraph& g) {
  if (g.order() < 2 || !is_connected(g)) return std::nullopt;
  auto cliques = maximal_cliques(g);
  const std::size_t size = cliques.front().size();
  for (const auto& c : cliques)
    if (c.size() != size) return std::nullopt;
  if (size < 2) return std::nullopt;
  NTreeComplex k(size - 1, std::move(cliques));
  if (!validate_ntree(k).valid) return std::nullopt;
  return k;
}

}  // namespace pcqi
