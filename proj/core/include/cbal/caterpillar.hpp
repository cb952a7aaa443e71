#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cbal/bignat.hpp"
#include "cbal/graph.hpp"

namespace cbal {

/// A caterpillar given by its spine: weights[i] is the number of off-spine
/// leaves at spine position i.  The spine is a longest path, so both
/// endpoint weights are zero.
struct CaterpillarSpec {
    std::vector<int> weights;

    explicit CaterpillarSpec(std::vector<int> weights);

    int spine_length() const { return static_cast<int>(weights.size()); }
    int total_vertices() const;
};

/// Spine vertices come first as 0..n-1, then the leaves grouped by host in
/// spine order.
Graph caterpillar_graph(const CaterpillarSpec& spec);

struct CaterpillarVerdict {
    bool member = false;
    std::optional<Coloring> witness;
};

/// Parity-balance test: member iff every weight is at most 3 and each spine
/// segment between weight-2/3 vertices has an even number of vertices.  The
/// witness follows the double-alternating construction.
CaterpillarVerdict is_pb_caterpillar(const CaterpillarSpec& spec);

/// Closed-semi-balance test: member iff every weight is at most 4 and each
/// spine segment between weight-3/4 vertices has even length, or a weight-2
/// vertex at an odd position, or a weight-0 vertex at an even position
/// (positions 1-indexed within the segment).
CaterpillarVerdict is_csb_caterpillar(const CaterpillarSpec& spec);

/// A(n): 2-colored spine-n caterpillars carrying a coloring 1-balanced at
/// every closed neighborhood, leftmost spine color fixed.  B(n): the variant
/// that exempts the leftmost vertex and pins the first two spine colors
/// equal.  Caterpillars are counted as ordered weight/color sequences;
/// mirror images are distinct.
struct CountPair {
    BigNat a;
    BigNat b;
};

/// Coupled recurrences A(n) = A(n-1) + 3B(n-1), B(n) = 3A(n-1) + 3B(n-1)
/// from A(2)=A(3)=1, B(2)=0, B(3)=3.
CountPair count_recurrence(int n);

/// Same values through powers of [[1,3],[3,3]] applied to (A(3), B(3)),
/// computed by repeated squaring; n >= 3.
CountPair count_matrix(int n);

/// A(n) from the explicit radical formula, evaluated in extended-precision
/// floating point and rounded, with a 0.25 guard against precision loss.
/// Supported for 3 <= n <= 30.
BigNat count_closed_form(int n);

/// Brute-force oracle for A(n): enumerates every weight vector with entries
/// 0..max_weight and every spine coloring with the leftmost color fixed
/// (leaves are forced opposite their host) and counts the configurations
/// 1-balanced at every closed neighborhood.
std::uint64_t enumerate_csb_count(int n, int max_weight);

}  // namespace cbal
