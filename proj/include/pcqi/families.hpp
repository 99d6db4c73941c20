#pragma once

#include <vector>

#include "pcqi/graph.hpp"

// Named graph families used by fixtures, tests and the CLI.
namespace pcqi::families {

SimplicialGraph cycle(std::size_t n);     // v1 .. vn
SimplicialGraph path(std::size_t n);      // a - b - c ...; n <= 26
SimplicialGraph complete(std::size_t n);  // k1 .. kn
SimplicialGraph edgeless(std::size_t n);  // e1 .. en
SimplicialGraph star(std::size_t leaves);  // center c, leaves l1 ..
SimplicialGraph complete_bipartite(std::size_t a, std::size_t b);  // a1.., b1..
SimplicialGraph petersen();               // outer o0..o4, spokes to inner i0..i4
SimplicialGraph kneser_5_2();             // 2-subsets of {1..5}, adjacent iff disjoint
// Two 5-cycles sharing the vertex p.
SimplicialGraph wedge_c5_c5();

// Tree on t0 .. t(n-1) decoded from a Pruefer sequence of length n-2.
SimplicialGraph tree_from_pruefer(const std::vector<std::size_t>& code);

}  // namespace pcqi::families
