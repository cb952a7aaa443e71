#pragma once

#include <string>
#include <vector>

#include "cbal/cdm.hpp"
#include "cbal/graph.hpp"
#include "cbal/reduction.hpp"
#include "cbal/switching.hpp"

namespace cbal {

// CGF, the colored-graph text format (all vertices 1-indexed):
//
//   cgf 1
//   n 5
//   k 2
//   colors 2 1 1 2 2
//   edge 1 2
//   ...
//
// Edges are written with u < v in lexicographic order, which makes the
// rendering canonical: parse(render(g)) reproduces g bit-exactly.  Lines
// starting with '#' are comments and blank lines are skipped on input.

std::string render_cgf(const ColoredGraph& cg);

/// Throws std::invalid_argument with a line number on malformed input.
ColoredGraph parse_cgf(const std::string& text);

// CDM text: one row per line, k+1 space-separated integers, the last being
// the color identifier.  With letters=true (k <= 3 only) identifiers render
// as R/B/G; that form is output-only.
std::string render_cdm(const ColorDegreeMatrix& m, bool letters = false);
ColorDegreeMatrix parse_cdm(const std::string& text);

// Switch sequences: one `u x w y` line per switch (1-indexed), meaning
// remove ux and wy, add uy and wx.
std::string render_switches(const std::vector<TwoSwitch>& seq);
std::vector<TwoSwitch> parse_switches(const std::string& text);

// Reduction traces: `remove r b` lines in original 1-indexed vertices,
// then the reduced graph in CGF.
std::string render_trace(const ReductionTrace& trace);

}  // namespace cbal
