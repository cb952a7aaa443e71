#pragma once

#include "cbal/balance.hpp"
#include "cbal/graph.hpp"

namespace cbal {

// Closed-form membership for the named families, with constructive witness
// colorings taken from the corresponding characterization proofs.  Vertex
// numbering matches the make_* constructors, so every witness can be checked
// with is_balanced directly.

ClassReport classify_path(int n);
ClassReport classify_cycle(int n);

/// Wheels are handled for n >= 4 rim vertices; W_3 = K_4 belongs to
/// classify_complete.
ClassReport classify_wheel(int n);

ClassReport classify_complete(int n);

/// OSB/CSB/SBV/PB from the complete multipartite characterizations; NBC and
/// CNBC follow from them via the degree-parity collapses.
ClassReport classify_complete_multipartite(const MultipartiteSpec& spec);

/// 1-balanced-at-every-open-neighborhood coloring of a tree, built by leaf
/// peeling: attach each vertex in BFS order, giving it the minority color of
/// its parent's neighborhood (ties go to blue).
Coloring tree_osb_coloring(const Graph& t);

/// Extends a 2-colored path to a caterpillar that is 0-balanced at every
/// closed neighborhood by attaching leaves to path vertices.  Every added
/// leaf must take the color opposite its host, which forces the number of
/// leaves at each vertex; an interior vertex colored opposite to both of its
/// path neighbors admits no extension at all, and such inputs are rejected
/// with std::domain_error.
ColoredGraph extend_path_to_cnbc(const ColoredGraph& p);

}  // namespace cbal
