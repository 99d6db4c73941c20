#include "pcqi/families.hpp"

#include <set>
#include <string>

namespace pcqi::families {

namespace {

std::vector<std::string> numbered(const std::string& prefix, std::size_t n, std::size_t from = 1) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + from));
  return out;
}

}  // namespace

SimplicialGraph cycle(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  const auto v = numbered("v", n);
  std::vector<SimplicialGraph::NamedEdge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(v[i], v[(i + 1) % n]);
  return SimplicialGraph(v, e);
}

SimplicialGraph path(std::size_t n) {
  if (n == 0 || n > 26) throw GraphError("path length out of range");
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(1, static_cast<char>('a' + i));
  std::vector<SimplicialGraph::NamedEdge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(v[i], v[i + 1]);
  return SimplicialGraph(v, e);
}

SimplicialGraph complete(std::size_t n) {
  const auto v = numbered("k", n);
  std::vector<SimplicialGraph::NamedEdge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(v[i], v[j]);
  return SimplicialGraph(v, e);
}

SimplicialGraph edgeless(std::size_t n) { return SimplicialGraph(numbered("e", n), {}); }

SimplicialGraph star(std::size_t leaves) {
  auto v = numbered("l", leaves);
  std::vector<SimplicialGraph::NamedEdge> e;
  for (const auto& l : v) e.emplace_back("c", l);
  v.push_back("c");
  return SimplicialGraph(v, e);
}

SimplicialGraph complete_bipartite(std::size_t a, std::size_t b) {
  const auto left = numbered("a", a);
  const auto right = numbered("b", b);
  std::vector<SimplicialGraph::NamedEdge> e;
  for (const auto& x : left)
    for (const auto& y : right) e.emplace_back(x, y);
  auto v = left;
  v.insert(v.end(), right.begin(), right.end());
  return SimplicialGraph(v, e);
}

SimplicialGraph petersen() {
  const auto outer = numbered("o", 5, 0);
  const auto inner = numbered("i", 5, 0);
  std::vector<SimplicialGraph::NamedEdge> e;
  for (std::size_t i = 0; i < 5; ++i) {
    e.emplace_back(outer[i], outer[(i + 1) % 5]);
    e.emplace_back(inner[i], inner[(i + 2) % 5]);
    e.emplace_back(outer[i], inner[i]);
  }
  auto v = outer;
  v.insert(v.end(), inner.begin(), inner.end());
  return SimplicialGraph(v, e);
}

SimplicialGraph kneser_5_2() {
  std::vector<std::pair<int, int>> subsets;
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b) subsets.emplace_back(a, b);
  auto name = [](std::pair<int, int> s) { return std::to_string(s.first) + std::to_string(s.second); };
  std::vector<std::string> v;
  std::vector<SimplicialGraph::NamedEdge> e;
  for (const auto& s : subsets) v.push_back(name(s));
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      const auto [a, b] = subsets[i];
      const auto [c, d] = subsets[j];
      if (a != c && a != d && b != c && b != d) e.emplace_back(name(subsets[i]), name(subsets[j]));
    }
  return SimplicialGraph(v, e);
}

SimplicialGraph wedge_c5_c5() {
  std::vector<std::string> v{"p", "a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4"};
  std::vector<SimplicialGraph::NamedEdge> e{{"p", "a1"},  {"a1", "a2"}, {"a2", "a3"},
                                            {"a3", "a4"}, {"a4", "p"},  {"p", "b1"},
                                            {"b1", "b2"}, {"b2", "b3"}, {"b3", "b4"},
                                            {"b4", "p"}};
  return SimplicialGraph(v, e);
}

SimplicialGraph tree_from_pruefer(const std::vector<std::size_t>& code) {
  const std::size_t n = code.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (std::size_t x : code) {
    if (x >= n) throw GraphError("Pruefer entry out of range");
    ++degree[x];
  }
  const auto v = numbered("t", n, 0);
  std::vector<SimplicialGraph::NamedEdge> e;
  std::set<std::size_t> leaves;
  for (std::size_t i = 0; i < n; ++i)
    if (degree[i] == 1) leaves.insert(i);
  for (std::size_t x : code) {
    const std::size_t leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    e.emplace_back(v[leaf], v[x]);
    if (--degree[x] == 1) leaves.insert(x);
  }
  const std::size_t a = *leaves.begin();
  const std::size_t b = *std::next(leaves.begin());
  e.emplace_back(v[a], v[b]);
  return SimplicialGraph(v, e);
}

}  // namespace pcqi::families
