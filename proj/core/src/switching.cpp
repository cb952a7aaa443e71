#include "cbal/switching.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace cbal {

namespace {

std::string vtx(int v) { return "v" + std::to_string(v + 1); }

// Word-packed adjacency for the sequence search.
struct AdjBits {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> bits;  // row-major, n rows of `words` words

    explicit AdjBits(const Graph& g)
        : n(g.vertex_count()), words((g.vertex_count() + 63) / 64), bits(static_cast<size_t>(n) * words, 0) {
        for (int v = 0; v < n; ++v)
            for (int u : g.neighbors(v)) set(v, u);
    }

    bool get(int u, int v) const { return bits[static_cast<size_t>(u) * words + v / 64] >> (v % 64) & 1; }
    void set(int u, int v) { bits[static_cast<size_t>(u) * words + v / 64] |= std::uint64_t{1} << (v % 64); }
    void clear(int u, int v) { bits[static_cast<size_t>(u) * words + v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

    void apply(const TwoSwitch& s) {
        clear(s.u, s.x); clear(s.x, s.u);
        clear(s.w, s.y); clear(s.y, s.w);
        set(s.u, s.y); set(s.y, s.u);
        set(s.w, s.x); set(s.x, s.w);
    }
};

}  // namespace

std::string switch_violation(const ColoredGraph& cg, const TwoSwitch& s) {
    int n = cg.vertex_count();
    for (int v : {s.u, s.x, s.w, s.y})
        if (v < 0 || v >= n) return "vertex " + std::to_string(v + 1) + " out of range";
    int a = s.u, b = s.x, c = s.w, d = s.y;
    if (a == b || a == c || a == d || b == c || b == d || c == d)
        return "vertices not distinct";
    if (cg.color_of(a) != cg.color_of(c))
        return "color mismatch: " + vtx(a) + " and " + vtx(c) + " differ";
    if (cg.color_of(b) != cg.color_of(d))
        return "color mismatch: " + vtx(b) + " and " + vtx(d) + " differ";
    if (!cg.graph.has_edge(a, b)) return "edge " + vtx(a) + vtx(b) + " not present";
    if (!cg.graph.has_edge(c, d)) return "edge " + vtx(c) + vtx(d) + " not present";
    if (cg.graph.has_edge(a, d)) return "edge " + vtx(a) + vtx(d) + " already present";
    if (cg.graph.has_edge(c, b)) return "edge " + vtx(c) + vtx(b) + " already present";
    return {};
}

ColoredGraph apply_switch(const ColoredGraph& cg, const TwoSwitch& s) {
    std::string why = switch_violation(cg, s);
    if (!why.empty()) throw std::domain_error("switch not applicable: " + why);
    Graph g = cg.graph;
    g.remove_edge(s.u, s.x);
    g.remove_edge(s.w, s.y);
    g.add_edge(s.u, s.y);
    g.add_edge(s.w, s.x);
    return ColoredGraph(std::move(g), cg.coloring);
}

std::vector<TwoSwitch> enumerate_applicable_switches(const ColoredGraph& cg) {
    auto edges = cg.graph.edges();
    std::set<TwoSwitch> found;
    auto consider = [&](int u, int x, int w, int y) {
        TwoSwitch s{u, x, w, y};
        if (!switch_violation(cg, s).empty()) return;
        TwoSwitch mirror{w, y, u, x};
        found.insert(std::min(s, mirror));
    };
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = 0; j < edges.size(); ++j) {
            if (i == j) continue;
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            consider(a, b, c, d);
            consider(a, b, d, c);
            consider(b, a, c, d);
            consider(b, a, d, c);
        }
    return {found.begin(), found.end()};
}

namespace {

// Canonicalizes N(v) within color class `cls` (ranked by pivot-class degree,
// ties by index) toward its top q members, recording the switches.  `ccdeg`
// holds the alive-restricted pivot-class degrees; `alive` masks dead
// vertices; `pivot_color` is the color of v and of the exchange partner y.
void steer_class(AdjBits& a, std::vector<TwoSwitch>& out, int v, const std::vector<int>& ranked,
                 const std::vector<int>& colors, int pivot_color, const std::vector<char>& alive) {
    int q = 0;
    for (int u : ranked)
        if (a.get(v, u)) ++q;
    // Target set: first q of ranked.
    std::vector<char> in_target(a.n, 0);
    for (int t = 0; t < q; ++t) in_target[ranked[t]] = 1;
    while (true) {
        int x = -1, z = -1;
        for (int u : ranked) {
            if (in_target[u] && !a.get(v, u)) { x = u; break; }
        }
        if (x < 0) break;
        for (int u : ranked) {
            if (!in_target[u] && a.get(v, u)) { z = u; break; }
        }
        if (z < 0) throw std::logic_error("switch search: no neighbor to displace");
        // y: a pivot-colored vertex adjacent to x but not z, distinct from
        // v, x, z.  Existence is guaranteed by the degree ranking.
        int y = -1;
        for (int u = 0; u < a.n; ++u) {
            if (!alive[u] || colors[u] != pivot_color || u == v || u == x || u == z) continue;
            if (a.get(x, u) && !a.get(z, u)) { y = u; break; }
        }
        if (y < 0) throw std::logic_error("switch search: no exchange partner");
        TwoSwitch s{v, z, y, x};
        a.apply(s);
        out.push_back(s);
    }
}

void canonicalize_pivot(AdjBits& a, std::vector<TwoSwitch>& out, int v,
                        const std::vector<std::vector<int>>& ranked_by_color,
                        const std::vector<int>& colors, int pivot_color,
                        const std::vector<char>& alive) {
    for (const auto& ranked : ranked_by_color)
        steer_class(a, out, v, ranked, colors, pivot_color, alive);
}

}  // namespace

std::vector<TwoSwitch> find_switch_sequence(const ColoredGraph& g, const ColoredGraph& h) {
    if (g.vertex_count() != h.vertex_count())
        throw std::invalid_argument("vertex counts differ");
    if (!(g.coloring == h.coloring)) throw std::invalid_argument("colorings differ");
    if (!cdm_equal(compute_cdm(g), compute_cdm(h)))
        throw std::domain_error("not co-realizable: color degree matrices differ");

    int n = g.vertex_count();
    int k = g.palette_size();
    const std::vector<int>& colors = g.coloring.colors;
    AdjBits ga(g.graph), ha(h.graph);
    std::vector<char> alive(n, 1);
    std::vector<TwoSwitch> fwd_g, fwd_h;

    for (int level = 0; level < n; ++level) {
        if (ga.bits == ha.bits) break;

        // Alive-restricted pivot-class degrees are switch-invariant, so one
        // computation per level serves both graphs.
        std::vector<std::vector<int>> members(k + 1);
        for (int u = 0; u < n; ++u)
            if (alive[u]) members[colors[u]].push_back(u);
        int pivot_color = 0;
        for (int c = 1; c <= k; ++c)
            if (!members[c].empty()) { pivot_color = c; break; }
        assert(pivot_color > 0);

        std::vector<int> ccdeg(n, 0);
        for (int u = 0; u < n; ++u) {
            if (!alive[u]) continue;
            for (int t : members[pivot_color])
                if (t != u && ga.get(u, t)) ++ccdeg[u];
        }

        int v = -1;
        for (int u : members[pivot_color])
            if (v < 0 || ccdeg[u] > ccdeg[v]) v = u;

        std::vector<std::vector<int>> ranked(k);
        for (int c = 1; c <= k; ++c) {
            ranked[c - 1] = members[c];
            if (c == pivot_color) std::erase(ranked[c - 1], v);
            std::stable_sort(ranked[c - 1].begin(), ranked[c - 1].end(),
                             [&](int p, int q) { return ccdeg[p] > ccdeg[q]; });
        }

        canonicalize_pivot(ga, fwd_g, v, ranked, colors, pivot_color, alive);
        canonicalize_pivot(ha, fwd_h, v, ranked, colors, pivot_color, alive);
        alive[v] = 0;
    }
    if (ga.bits != ha.bits) throw std::logic_error("switch search did not converge");

    std::vector<TwoSwitch> seq = std::move(fwd_g);
    for (auto it = fwd_h.rbegin(); it != fwd_h.rend(); ++it) seq.push_back(inverted(*it));
    return seq;
}

}  // namespace cbal
