#pragma once

#include <vector>

#include "cbal/graph.hpp"

namespace cbal {

/// Color degree matrix of a k-colored graph: n rows, k degree columns plus
/// a color-identifier column.  Row i holds |N(v_i) inter C_j| for each color
/// j and the color of v_i itself.
struct ColorDegreeMatrix {
    int n = 0;
    int k = 0;
    std::vector<int> degrees;    // n*k, row-major
    std::vector<int> color_ids;  // n entries

    int deg(int row, int color) const { return degrees[static_cast<size_t>(row) * k + color - 1]; }
    int& deg(int row, int color) { return degrees[static_cast<size_t>(row) * k + color - 1]; }
    int color_id(int row) const { return color_ids[row]; }

    bool operator==(const ColorDegreeMatrix& other) const = default;
};

ColorDegreeMatrix compute_cdm(const ColoredGraph& cg);

/// Strict entrywise equality under the given vertex orders, color-identifier
/// column included.
bool cdm_equal(const ColorDegreeMatrix& a, const ColorDegreeMatrix& b);

/// Equality of the row multisets (full rows, identifier included).  Strictly
/// weaker than cdm_equal: it ignores the vertex labelling.
bool cdm_equal_as_multiset(const ColorDegreeMatrix& a, const ColorDegreeMatrix& b);

/// Erdos-Gallai test; the sequence is copied and may be in any order.
bool is_graphic(std::vector<int> seq);

/// Gale-Ryser test for a bipartite degree pair.
bool is_bigraphic(std::vector<int> p, std::vector<int> q);

/// Checks the three realizability conditions: identifiers in range, each
/// same-color block graphic, each cross-color block pair bigraphic.
/// Color classes without rows are fine; they realize as empty classes.
bool is_realizable(const ColorDegreeMatrix& m);

/// Builds a canonical colored graph whose color degree matrix equals m:
/// Havel-Hakimi inside each color class, then a Gale-Ryser realization for
/// each color pair in lexicographic order, ties broken by row index.
/// Throws std::domain_error naming the violated condition if m is not
/// realizable.
ColoredGraph realize(const ColorDegreeMatrix& m);

}  // namespace cbal
