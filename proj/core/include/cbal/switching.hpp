#pragma once

#include <string>
#include <vector>

#include "cbal/cdm.hpp"
#include "cbal/graph.hpp"

namespace cbal {

/// One color 2-switch: remove edges ux and wy, add edges uy and wx.
/// Applicable when c(u)=c(w), c(x)=c(y), ux and wy are edges, uy and wx are
/// non-edges and all four vertices are distinct.
struct TwoSwitch {
    int u, x, w, y;

    bool operator==(const TwoSwitch&) const = default;
    auto operator<=>(const TwoSwitch&) const = default;
};

/// The switch that undoes s on the graph s was applied to.
inline TwoSwitch inverted(const TwoSwitch& s) { return {s.u, s.y, s.w, s.x}; }

/// Empty string if s is applicable to cg, otherwise a description of the
/// first violated applicability condition.
std::string switch_violation(const ColoredGraph& cg, const TwoSwitch& s);

/// Throws std::domain_error with the first violated condition if s is not
/// applicable.  The coloring is unchanged.
ColoredGraph apply_switch(const ColoredGraph& cg, const TwoSwitch& s);

/// All applicable switches up to the symmetry (u,x,w,y) ~ (w,y,u,x), in
/// ascending lexicographic order of the canonical representative.
std::vector<TwoSwitch> enumerate_applicable_switches(const ColoredGraph& cg);

/// A switch sequence taking g to h, which must have identical colorings and
/// equal color degree matrices.  Every intermediate graph keeps the same
/// color degree matrix.  Follows the constructive argument: fix a pivot
/// vertex of largest within-class degree, canonicalize its neighborhood in
/// both graphs toward a shared target set, delete it and recurse; the h-side
/// switches are replayed inverted in reverse order.  Length is polynomial
/// but not minimized.
std::vector<TwoSwitch> find_switch_sequence(const ColoredGraph& g, const ColoredGraph& h);

}  // namespace cbal
