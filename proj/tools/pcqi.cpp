// pcqi command line front end. Every subcommand prints JSON (or DOT where a
// graph is the result) on stdout.
//
// Exit status: 0 success, 1 negative verdict, 2 usage or input error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pcqi/bisim.hpp"
#include "pcqi/classifier.hpp"
#include "pcqi/embed.hpp"
#include "pcqi/ntree.hpp"
#include "pcqi/patch.hpp"
#include "pcqi/rigidity.hpp"
#include "pcqi/serialization.hpp"
#include "pcqi/word.hpp"

namespace {

using namespace pcqi;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format;  // empty: the subcommand's default
  std::size_t threads = 1;
  bool zero_on_negative = false;
};

SimplicialGraph load_graph(const std::string& path) { return load_graph_text(read_file(path)); }

std::size_t vertex_budget() {
  const char* env = std::getenv("PCQI_BUDGET_VERTICES");
  if (!env || !*env) return kDefaultVertexBudget;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size() || v == 0) throw std::invalid_argument(env);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw UsageError(std::string("PCQI_BUDGET_VERTICES: not a positive integer: ") + env);
  }
}

// "depth=3,vertices=5000,nodes=1000000,patches=100,ball=2"
SearchBudget parse_budget(const std::vector<std::string>& specs) {
  SearchBudget b;
  b.max_patch_vertices = vertex_budget();
  for (const auto& arg : specs) {
    std::stringstream in(arg);
    std::string item;
    while (std::getline(in, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("--budget: expected key=value, got '" + item + "'");
      const std::string key = item.substr(0, eq);
      std::size_t value = 0;
      try {
        value = std::stoull(item.substr(eq + 1));
      } catch (const std::exception&) {
        throw UsageError("--budget: bad value in '" + item + "'");
      }
      if (key == "depth") b.max_depth = value;
      else if (key == "vertices") b.max_patch_vertices = value;
      else if (key == "nodes") b.max_backtrack_nodes = value;
      else if (key == "patches") b.max_patches = value;
      else if (key == "ball") b.max_ball_radius = value;
      else throw UsageError("--budget: unknown key '" + key + "'");
    }
  }
  return b;
}

void emit(const json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) std::cout << text;
  else write_file(out, text);
}

void emit_text(const std::string& text, const std::string& out) {
  if (out.empty()) std::cout << text;
  else write_file(out, text);
}

bool want_dot(const Globals& g) { return g.format == "dot"; }

int negative(const Globals& g) { return g.zero_on_negative ? kOk : kNegative; }

// "v:k" or "v^{a b}:k"
std::pair<ConjugateGenerator, int> parse_double(const PcGroup& group, const std::string& arg) {
  const auto colon = arg.rfind(':');
  if (colon == std::string::npos) throw UsageError("--double: expected v:k, got '" + arg + "'");
  const std::string vertex = arg.substr(0, colon);
  int k = 0;
  try {
    k = std::stoi(arg.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("--double: bad exponent in '" + arg + "'");
  }
  if (k == 0) throw UsageError("--double: exponent must be nonzero in '" + arg + "'");
  const auto caret = vertex.find("^{");
  if (caret == std::string::npos) return {parse_conjugate(group, vertex, ""), k};
  if (vertex.back() != '}') throw UsageError("--double: unterminated conjugator in '" + arg + "'");
  return {parse_conjugate(group, vertex.substr(0, caret), vertex.substr(caret + 2, vertex.size() - caret - 3)),
          k};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pcqi: extension graphs, embeddings and quasi-isometry verdicts for pc groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--format", globals.format, "Output format where applicable")
      ->check(CLI::IsMember({"json", "dot"}));
  app.add_option("--threads", globals.threads, "Upper bound on worker threads")
      ->check(CLI::PositiveNumber);
  app.add_flag("--zero-on-negative", globals.zero_on_negative,
               "Exit 0 instead of 1 when a verdict is negative");

  std::string graph_path, word_text, out_path, domain_path, codomain_path, complex_path, a_path,
      b_path, report_path;
  std::vector<std::string> doubles, budget_specs;
  std::optional<std::size_t> ball, n_opt;
  std::size_t depth = 3, rigidity_depth = 2;
  bool criterion = false;

  auto* predicates = app.add_subcommand("predicates", "Structural predicates of a graph");
  predicates->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);

  auto* nf = app.add_subcommand("nf", "Normal form of a word");
  nf->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  nf->add_option("--word", word_text, "Tokens a, a^-1, a^k separated by spaces")->required();

  auto* patch = app.add_subcommand("patch", "Build a finite patch of the extension graph");
  patch->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  auto* double_opt = patch->add_option("--double", doubles, "Double along the star of v with exponent k (v:k)");
  auto* ball_opt = patch->add_option("--ball", ball, "All conjugates with conjugator length <= R");
  ball_opt->excludes(double_opt);
  patch->add_option("--out", out_path);

  auto* embed = app.add_subcommand("embed", "Search for an embedding into the extension graph");
  embed->add_option("--domain", domain_path)->required()->check(CLI::ExistingFile);
  embed->add_option("--codomain", codomain_path)->required()->check(CLI::ExistingFile);
  embed->add_option("--depth", depth, "Doubling depth")->capture_default_str();
  embed->add_option("--budget", budget_specs, "key=value limits (vertices, nodes, patches, ball)");
  embed->add_option("--out", out_path, "Certificate output path");

  auto* gph = app.add_subcommand("gph", "gph invariant of an n-tree");
  gph->add_option("--complex", complex_path)->required()->check(CLI::ExistingFile);
  gph->add_option("--out", out_path);

  auto* bisim = app.add_subcommand("bisim", "Bisimilarity of coloured graphs");
  bisim->add_option("--a", a_path)->required()->check(CLI::ExistingFile);
  bisim->add_option("--b", b_path)->required()->check(CLI::ExistingFile);
  bisim->add_option("--n", n_opt, "Allow permutations of p1..p(n+1)");

  auto* classify = app.add_subcommand("classify", "Quasi-isometry verdict for two graphs");
  classify->add_option("--a", a_path)->required()->check(CLI::ExistingFile);
  classify->add_option("--b", b_path)->required()->check(CLI::ExistingFile);
  classify->add_option("--budget", budget_specs, "key=value limits, e.g. depth=3");
  classify->add_flag("--criterion", criterion, "Also run mutual embeddability and cross-check");

  auto* rigidity = app.add_subcommand("rigidity", "Rigidity experiment for an atomic graph");
  rigidity->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  rigidity->add_option("--depth", rigidity_depth)->capture_default_str();
  rigidity->add_option("--report", report_path, "Full report output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (predicates->parsed()) {
      const SimplicialGraph g = load_graph(graph_path);
      const AtomicityReport atomic = check_atomic(g);
      json j = {{"atomic", atomic.atomic},
                {"chordal", is_chordal(g)},
                {"triangle_built", is_triangle_built(g)},
                {"shape", to_string(classify_shape(g))},
                {"connected", is_connected(g)}};
      if (!atomic.atomic) j["atomic_violation"] = to_string(atomic.violation);
      emit(j, "");
      return kOk;
    }

    if (nf->parsed()) {
      const PcGroup group(load_graph(graph_path));
      const NormalForm w = group.normal_form(group.parse(word_text));
      const std::string text = w.empty() ? "1" : group.format(w);
      if (globals.format == "json") emit({{"word", word_text}, {"normal_form", text}, {"trivial", w.empty()}}, "");
      else std::cout << text << "\n";
      return kOk;
    }

    if (patch->parsed()) {
      auto group = std::make_shared<const PcGroup>(load_graph(graph_path));
      const std::size_t budget = vertex_budget();
      Patch p = ball ? ball_patch(group, *ball, budget) : base_patch(group);
      for (const auto& arg : doubles) {
        const auto [center, k] = parse_double(*group, arg);
        p = double_along_star(p, center, k, budget);
      }
      if (want_dot(globals)) emit_text(to_dot(p.to_graph()), out_path);
      else emit(to_json(p), out_path);
      return kOk;
    }

    if (embed->parsed()) {
      SearchBudget budget = parse_budget(budget_specs);
      budget.max_depth = depth;
      const SearchReport r = search_embedding(load_graph(domain_path), load_graph(codomain_path), budget);
      if (r.found && !out_path.empty()) emit(to_json(*r.certificate), out_path);
      emit(to_json(r), "");
      return r.found ? kOk : negative(globals);
    }

    if (gph->parsed()) {
      const NTreeComplex k = complex_from_json(json::parse(read_file(complex_path)));
      const NTreeValidation v = validate_ntree(k);
      if (!v.valid) throw UsageError("--complex: not an n-tree: " + v.reason);
      const Gph g = build_gph(k);
      if (want_dot(globals)) emit_text(to_dot(g.graph), out_path);
      else emit(to_json(g.graph), out_path);
      return kOk;
    }

    if (bisim->parsed()) {
      const ColoredGraph a = colored_from_json(json::parse(read_file(a_path)));
      const ColoredGraph b = colored_from_json(json::parse(read_file(b_path)));
      json j;
      bool ok = false;
      if (n_opt) {
        const PermutedBisimResult r = bisimilar_up_to_pcolor_permutation(a, b, *n_opt);
        ok = r.bisimilar;
        j = {{"bisimilar", ok}, {"permutation", nullptr}, {"common", nullptr}};
        if (ok) {
          j["permutation"] = r.permutation;
          j["common"] = to_json(*r.witness.common);
        }
      } else {
        const BisimResult r = bisimilar(a, b);
        ok = r.bisimilar;
        j = {{"bisimilar", ok}, {"common", nullptr}};
        if (ok) j["common"] = to_json(*r.common);
      }
      emit(j, "");
      return ok ? kOk : negative(globals);
    }

    if (classify->parsed()) {
      const SimplicialGraph a = load_graph(a_path);
      const SimplicialGraph b = load_graph(b_path);
      Verdict verdict = Verdict::unknown;
      if (criterion) {
        const CriterionReport r = qi_via_extension_criterion(a, b, parse_budget(budget_specs));
        verdict = r.classification.verdict;
        emit(to_json(r), "");
      } else {
        parse_budget(budget_specs);  // validated even when unused
        const QIVerdict r = classify_pair(a, b);
        verdict = r.verdict;
        emit(to_json(r), "");
      }
      return verdict == Verdict::not_qi ? negative(globals) : kOk;
    }

    if (rigidity->parsed()) {
      const RigidityReport r = rigidity_experiment(load_graph(graph_path), rigidity_depth, vertex_budget());
      if (!report_path.empty()) emit(to_json(r), report_path);
      emit({{"depth", r.depth},
            {"patches", r.patches},
            {"total_embeddings", r.total_embeddings},
            {"distinct_embeddings", r.distinct_embeddings},
            {"failures", r.failures}},
           "");
      return r.failures == 0 ? kOk : negative(globals);
    }
  } catch (const UsageError& e) {
    std::cerr << "pcqi: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "pcqi: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
