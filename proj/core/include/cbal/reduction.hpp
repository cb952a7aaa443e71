#pragma once

#include <utility>
#include <vector>

#include "cbal/graph.hpp"

namespace cbal {

/// Result of exhaustively applying red-blue removals to a 2-colored graph: a
/// red vertex and a blue vertex with identical open neighborhoods go
/// together, repeated until no such pair remains.
struct ReductionTrace {
    /// (red, blue) pairs in removal order, original 0-based indices.
    std::vector<std::pair<int, int>> removed_pairs;
    /// The reduced graph, re-compacted to consecutive indices.
    ColoredGraph result;
    /// original index -> compacted index, -1 for removed vertices.
    std::vector<int> result_index_of;
    /// compacted index -> original index.
    std::vector<int> original_index_of;
};

/// Deterministic reduction: the lexicographically least eligible (red, blue)
/// pair is removed at each step.  Requires k = 2.
ReductionTrace red_blue_reduce(const ColoredGraph& cg);

/// Structural facts about reducing a 2-colored complete multipartite graph;
/// all four are proved, so any false entry flags an implementation bug.
struct ReductionObservations {
    bool parts_monochromatic = false;
    bool odd_parts_stay_odd = false;
    bool even_parts_stay_even_or_vanish = false;
    /// For each of SBV/OSB/CSB/PB: input coloring in the class implies the
    /// reduced coloring is too.
    bool balance_transfer = false;
};

/// Throws std::invalid_argument unless cg is a 2-colored complete
/// multipartite graph.
ReductionObservations check_reduction_observations(const ColoredGraph& cg);

}  // namespace cbal
