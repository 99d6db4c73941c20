#include "pcqi/serialization.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace pcqi {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) throw FormatError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(as_string(x, what));
  return out;
}

std::vector<SimplicialGraph::NamedEdge> edge_list(const json& j) {
  if (!j.is_array()) throw FormatError("edges must be an array");
  std::vector<SimplicialGraph::NamedEdge> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw FormatError("each edge must be a pair of names");
    out.emplace_back(as_string(e[0], "edge endpoint"), as_string(e[1], "edge endpoint"));
  }
  return out;
}

bool plain_id(const std::string& s) {
  if (s.empty()) return false;
  if (std::isdigit(static_cast<unsigned char>(s[0]))) {
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  }
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::string dot_id(const std::string& s) {
  if (plain_id(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

// ---------------------------------------------------------------------------
// Graphs

json to_json(const SimplicialGraph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.named_edges()) edges.push_back({a, b});
  return {{"vertices", g.vertices()}, {"edges", edges}};
}

SimplicialGraph graph_from_json(const json& j) {
  return SimplicialGraph(string_list(field(j, "vertices"), "vertex"), edge_list(field(j, "edges")));
}

std::string to_dot(const SimplicialGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) out << "  " << dot_id(g.name(v)) << ";\n";
  for (const auto& [a, b] : g.named_edges()) out << "  " << dot_id(a) << " -- " << dot_id(b) << ";\n";
  out << "}\n";
  return out.str();
}

SimplicialGraph graph_from_dot(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    for (;;) {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      if (text.substr(pos, 2) == "//" || (pos < text.size() && text[pos] == '#')) {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (text.substr(pos, 2) == "/*") {
        const auto end = text.find("*/", pos + 2);
        if (end == std::string_view::npos) throw FormatError("unterminated DOT comment");
        pos = end + 2;
      } else {
        return;
      }
    }
  };
  // Returns the next token; quoted strings come back unquoted with `quoted` set.
  bool quoted = false;
  auto next = [&]() -> std::string {
    skip();
    quoted = false;
    if (pos >= text.size()) return {};
    const char c = text[pos];
    if (c == '"') {
      std::string out;
      ++pos;
      while (pos < text.size() && text[pos] != '"') {
        if (text[pos] == '\\' && pos + 1 < text.size()) ++pos;
        out += text[pos++];
      }
      if (pos >= text.size()) throw FormatError("unterminated DOT string");
      ++pos;
      quoted = true;
      return out;
    }
    if (text.substr(pos, 2) == "--" || text.substr(pos, 2) == "->") {
      pos += 2;
      return std::string(text.substr(pos - 2, 2));
    }
    if (c == '{' || c == '}' || c == ';' || c == ',' || c == '[' || c == '=') {
      ++pos;
      return std::string(1, c);
    }
    std::string out;
    while (pos < text.size()) {
      const char d = text[pos];
      if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '.') {
        out += d;
        ++pos;
      } else {
        break;
      }
    }
    if (out.empty()) throw FormatError(std::string("unexpected character '") + c + "' in DOT input");
    return out;
  };

  std::string tok = next();
  if (tok == "strict") tok = next();
  if (tok == "digraph") throw FormatError("directed DOT graphs are not supported");
  if (tok != "graph") throw FormatError("DOT input must start with 'graph'");
  tok = next();
  if (tok != "{") tok = next();
  if (tok != "{") throw FormatError("expected '{' in DOT input");

  std::vector<std::string> vertices;
  std::set<std::string> known;
  std::vector<SimplicialGraph::NamedEdge> edges;
  auto vertex = [&](const std::string& name) {
    if (known.insert(name).second) vertices.push_back(name);
  };
  tok = next();
  while (tok != "}") {
    if (tok.empty() && !quoted) throw FormatError("unexpected end of DOT input");
    if (tok == ";" || tok == ",") {
      tok = next();
      continue;
    }
    if (!quoted && (tok == "{" || tok == "[" || tok == "=" || tok == "--" || tok == "->"))
      throw FormatError("unsupported DOT construct near '" + tok + "'");
    std::string from = tok;
    vertex(from);
    tok = next();
    while (tok == "--" && !quoted) {
      const std::string to = next();
      if (to.empty() || (!quoted && !plain_id(to) && to.find('.') == std::string::npos))
        throw FormatError("expected a vertex after '--'");
      vertex(to);
      edges.emplace_back(from, to);
      from = to;
      tok = next();
    }
    if (tok == "->" && !quoted) throw FormatError("directed edge in undirected DOT graph");
    if (tok == "[" && !quoted) throw FormatError("DOT attributes are not supported");
  }
  return SimplicialGraph(vertices, edges);
}

SimplicialGraph load_graph_text(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') {
      try {
        return graph_from_json(json::parse(text));
      } catch (const json::exception& e) {
        throw FormatError(std::string("bad graph JSON: ") + e.what());
      }
    }
    break;
  }
  return graph_from_dot(text);
}

// ---------------------------------------------------------------------------
// Coloured graphs and complexes

json to_json(const ColoredGraph& g) {
  json edges = json::array();
  json colors = json::object();
  for (VertexId u = 0; u < g.order(); ++u) {
    colors[g.names[u]] = g.colors[u];
    for (VertexId v = u; v < g.order(); ++v)
      if (g.adjacency(u, v)) edges.push_back({g.names[u], g.names[v]});
  }
  return {{"vertices", g.names}, {"edges", edges}, {"colors", colors}};
}

ColoredGraph colored_from_json(const json& j) {
  ColoredGraph g;
  g.names = string_list(field(j, "vertices"), "vertex");
  std::map<std::string, VertexId> index;
  for (VertexId v = 0; v < g.names.size(); ++v)
    if (!index.emplace(g.names[v], v).second) throw FormatError("vertex '" + g.names[v] + "' listed twice");
  g.adjacency = AdjacencyMatrix(g.names.size());
  for (const auto& [a, b] : edge_list(field(j, "edges"))) {
    if (!index.count(a) || !index.count(b)) throw FormatError("edge uses an undeclared vertex");
    g.adjacency.set(index[a], index[b]);
  }
  const json& colors = field(j, "colors");
  if (!colors.is_object()) throw FormatError("colors must be an object");
  for (const auto& name : g.names) {
    if (!colors.contains(name)) throw ColorError("vertex '" + name + "' has no colour");
    g.colors.push_back(as_string(colors.at(name), "colour"));
  }
  if (colors.size() != g.names.size()) throw ColorError("colour given for an unknown vertex");
  return g;
}

std::string to_dot(const ColoredGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v = 0; v < g.order(); ++v)
    out << "  " << dot_id(g.names[v]) << " [label=" << dot_id(g.names[v] + " " + g.colors[v]) << "];\n";
  for (VertexId u = 0; u < g.order(); ++u)
    for (VertexId v = u; v < g.order(); ++v)
      if (g.adjacency(u, v)) out << "  " << dot_id(g.names[u]) << " -- " << dot_id(g.names[v]) << ";\n";
  out << "}\n";
  return out.str();
}

json to_json(const NTreeComplex& k) {
  return {{"n", k.dimension()}, {"simplices", k.simplices()}};
}

NTreeComplex complex_from_json(const json& j) {
  const json& n = field(j, "n");
  if (!n.is_number_unsigned()) throw FormatError("n must be a positive integer");
  const json& s = field(j, "simplices");
  if (!s.is_array()) throw FormatError("simplices must be an array");
  std::vector<Simplex> simplices;
  for (const auto& x : s) simplices.push_back(string_list(x, "simplex vertex"));
  return NTreeComplex(n.get<std::size_t>(), std::move(simplices));
}

// ---------------------------------------------------------------------------
// Patches and certificates

json to_json(const PcGroup& group, const ConjugateGenerator& x) {
  return {{"base", group.graph().name(x.base)}, {"conj", group.format(x.conjugator)}};
}

ConjugateGenerator conjugate_from_json(const PcGroup& group, const json& j) {
  return parse_conjugate(group, as_string(field(j, "base"), "base"), as_string(field(j, "conj"), "conj"));
}

json to_json(const PcGroup& group, const PatchProvenance& p) {
  json steps = json::array();
  for (const auto& s : p.doublings) steps.push_back({{"center", to_json(group, s.center)}, {"exponent", s.exponent}});
  json out = {{"doublings", steps}, {"ball_radius", nullptr}};
  if (p.ball_radius) out["ball_radius"] = *p.ball_radius;
  return out;
}

PatchProvenance provenance_from_json(const PcGroup& group, const json& j) {
  PatchProvenance p;
  const json& steps = field(j, "doublings");
  if (!steps.is_array()) throw FormatError("doublings must be an array");
  for (const auto& s : steps) {
    const json& k = field(s, "exponent");
    if (!k.is_number_integer()) throw FormatError("exponent must be an integer");
    p.doublings.push_back(DoublingStep{conjugate_from_json(group, field(s, "center")), k.get<int>()});
  }
  if (j.contains("ball_radius") && !j.at("ball_radius").is_null()) {
    if (!j.at("ball_radius").is_number_unsigned()) throw FormatError("ball_radius must be a count");
    p.ball_radius = j.at("ball_radius").get<std::size_t>();
  }
  return p;
}

json to_json(const Patch& p) {
  json vertices = json::array();
  for (const auto& x : p.vertices()) vertices.push_back(to_json(p.group(), x));
  json edges = json::array();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p.adjacent(i, j)) edges.push_back({i, j});
  return {{"graph", to_json(p.group().graph())},
          {"vertices", vertices},
          {"edges", edges},
          {"provenance", to_json(p.group(), p.provenance())}};
}

Patch patch_from_json(const json& j) {
  auto group = std::make_shared<const PcGroup>(graph_from_json(field(j, "graph")));
  const json& vs = field(j, "vertices");
  if (!vs.is_array()) throw FormatError("vertices must be an array");
  std::vector<ConjugateGenerator> vertices;
  for (const auto& v : vs) vertices.push_back(conjugate_from_json(*group, v));
  Patch p = Patch::from_vertices(group, std::move(vertices),
                                 provenance_from_json(*group, field(j, "provenance")));
  if (j.contains("edges")) {
    AdjacencyMatrix listed(p.size());
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
        throw FormatError("patch edges must be index pairs");
      const auto a = e[0].get<std::size_t>(), b = e[1].get<std::size_t>();
      if (a >= p.size() || b >= p.size() || a == b) throw FormatError("patch edge index out of range");
      listed.set(a, b);
    }
    if (!(listed == p.adjacency())) throw FormatError("patch edge list disagrees with the word problem");
  }
  return p;
}

json to_json(const EmbeddingCertificate& c) {
  const PcGroup group(c.codomain);
  json map = json::object();
  for (VertexId v = 0; v < c.images.size(); ++v) map[c.domain.name(v)] = to_json(group, c.images[v]);
  return {{"domain", to_json(c.domain)},
          {"codomain", to_json(c.codomain)},
          {"map", map},
          {"provenance", to_json(group, c.provenance)}};
}

EmbeddingCertificate certificate_from_json(const json& j) {
  EmbeddingCertificate c;
  c.domain = graph_from_json(field(j, "domain"));
  c.codomain = graph_from_json(field(j, "codomain"));
  const PcGroup group(c.codomain);
  const json& map = field(j, "map");
  if (!map.is_object() || map.size() != c.domain.order()) throw FormatError("map must cover the domain");
  for (const auto& name : c.domain.vertices()) {
    if (!map.contains(name)) throw FormatError("map misses vertex '" + name + "'");
    c.images.push_back(conjugate_from_json(group, map.at(name)));
  }
  if (j.contains("provenance")) c.provenance = provenance_from_json(group, j.at("provenance"));
  return c;
}

// ---------------------------------------------------------------------------
// Reports

json to_json(const SearchReport& r) {
  return {{"found", r.found},
          {"depth", r.depth},
          {"family", r.family},
          {"patches_examined", r.patches_examined},
          {"backtrack_nodes", r.backtrack_nodes},
          {"budget_hit", r.budget_hit},
          {"note", r.note},
          {"certificate", r.certificate ? to_json(*r.certificate) : json(nullptr)}};
}

json to_json(const MutualReport& r) {
  return {{"forward", to_json(r.forward)},
          {"backward", to_json(r.backward)},
          {"both_found", r.both_found()}};
}

json to_json(const RigidityReport& r) {
  const PcGroup group(r.graph);
  json embeddings = json::array();
  for (const auto& e : r.embeddings) {
    json images = json::object();
    for (VertexId v = 0; v < e.images.size(); ++v) images[r.graph.name(v)] = to_json(group, e.images[v]);
    json rec = {{"images", images}};
    if (e.result.decomposition) {
      json sigma = json::object();
      for (VertexId v = 0; v < r.graph.order(); ++v)
        sigma[r.graph.name(v)] = r.graph.name(e.result.decomposition->automorphism.map[v]);
      rec["conjugator"] = group.format(e.result.decomposition->conjugator);
      rec["automorphism"] = sigma;
    } else {
      rec["failure"] = e.result.failure;
    }
    embeddings.push_back(std::move(rec));
  }
  return {{"graph", to_json(r.graph)},
          {"depth", r.depth},
          {"patches", r.patches},
          {"total_embeddings", r.total_embeddings},
          {"distinct_embeddings", r.distinct_embeddings},
          {"failures", r.failures},
          {"embeddings", embeddings}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << content;
}

}  // namespace pcqi
