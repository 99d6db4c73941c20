#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "json.hpp"
#include "pcqi/bisim.hpp"
#include "pcqi/embed.hpp"
#include "pcqi/graph.hpp"
#include "pcqi/ntree.hpp"
#include "pcqi/patch.hpp"
#include "pcqi/rigidity.hpp"

namespace pcqi {

using json = nlohmann::json;

class FormatError : public Error {
 public:
  using Error::Error;
};

// {"vertices":[...],"edges":[[u,v],...]}
json to_json(const SimplicialGraph& g);
SimplicialGraph graph_from_json(const json& j);

// Undirected DOT without attributes: `graph g { a -- b -- c; d; }`.
std::string to_dot(const SimplicialGraph& g);
SimplicialGraph graph_from_dot(std::string_view text);

// Graph JSON plus "colors":{"v":"p1",...}. Loops appear as [v,v] edges.
json to_json(const ColoredGraph& g);
ColoredGraph colored_from_json(const json& j);
std::string to_dot(const ColoredGraph& g);

// {"n":2,"simplices":[["x","y","z"],...]}
json to_json(const NTreeComplex& k);
NTreeComplex complex_from_json(const json& j);

json to_json(const PcGroup& group, const ConjugateGenerator& x);  // {"base","conj"}
ConjugateGenerator conjugate_from_json(const PcGroup& group, const json& j);
json to_json(const PcGroup& group, const PatchProvenance& p);
PatchProvenance provenance_from_json(const PcGroup& group, const json& j);

// {"graph":..., "vertices":[{"base","conj"}], "edges":[[i,j]], "provenance":...}
json to_json(const Patch& p);
Patch patch_from_json(const json& j);

// {"domain":..., "codomain":..., "map":{"v":{"base","conj"}}, "provenance":...}
json to_json(const EmbeddingCertificate& c);
EmbeddingCertificate certificate_from_json(const json& j);

json to_json(const SearchReport& r);
json to_json(const MutualReport& r);
json to_json(const RigidityReport& r);

// Reads JSON or DOT, chosen by the first non-blank character.
SimplicialGraph load_graph_text(std::string_view text);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace pcqi
