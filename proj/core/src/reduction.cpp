#include "cbal/reduction.hpp"

#include <algorithm>
#include <stdexcept>

#include "cbal/balance.hpp"

namespace cbal {

ReductionTrace red_blue_reduce(const ColoredGraph& cg) {
    if (cg.palette_size() != 2)
        throw std::invalid_argument("red-blue reduction is defined for 2-colored graphs");
    int n = cg.vertex_count();
    std::vector<char> alive(n, 1);
    ReductionTrace trace;

    auto alive_neighbors = [&](int v) {
        std::vector<int> out;
        for (int u : cg.graph.neighbors(v))
            if (alive[u]) out.push_back(u);
        return out;
    };

    while (true) {
        int best_r = -1, best_b = -1;
        for (int r = 0; r < n && best_r < 0; ++r) {
            if (!alive[r] || cg.color_of(r) != 1) continue;
            auto nr = alive_neighbors(r);
            for (int b = 0; b < n; ++b) {
                if (!alive[b] || cg.color_of(b) != 2) continue;
                if (alive_neighbors(b) == nr) {
                    best_r = r;
                    best_b = b;
                    break;
                }
            }
        }
        if (best_r < 0) break;
        trace.removed_pairs.emplace_back(best_r, best_b);
        alive[best_r] = alive[best_b] = 0;
    }

    trace.result_index_of.assign(n, -1);
    for (int v = 0; v < n; ++v)
        if (alive[v]) {
            trace.result_index_of[v] = static_cast<int>(trace.original_index_of.size());
            trace.original_index_of.push_back(v);
        }
    int m = static_cast<int>(trace.original_index_of.size());
    Graph reduced(m);
    std::vector<int> colors(m);
    for (int i = 0; i < m; ++i) {
        int v = trace.original_index_of[i];
        colors[i] = cg.color_of(v);
        for (int u : cg.graph.neighbors(v))
            if (alive[u] && v < u) reduced.add_edge(i, trace.result_index_of[u]);
    }
    trace.result = ColoredGraph(std::move(reduced), Coloring(2, std::move(colors)));
    return trace;
}

ReductionObservations check_reduction_observations(const ColoredGraph& cg) {
    auto parts = multipartite_parts(cg.graph);
    if (!parts) throw std::invalid_argument("input is not complete multipartite");
    if (cg.palette_size() != 2) throw std::invalid_argument("input must be 2-colored");

    ReductionTrace trace = red_blue_reduce(cg);
    ReductionObservations obs;

    obs.parts_monochromatic = true;
    obs.odd_parts_stay_odd = true;
    obs.even_parts_stay_even_or_vanish = true;
    for (const auto& part : *parts) {
        int survivors = 0;
        int red = 0, blue = 0;
        for (int v : part) {
            if (trace.result_index_of[v] < 0) continue;
            ++survivors;
            (cg.color_of(v) == 1 ? red : blue) += 1;
        }
        if (red > 0 && blue > 0) obs.parts_monochromatic = false;
        if (part.size() % 2 == 1 && survivors % 2 == 0) obs.odd_parts_stay_odd = false;
        if (part.size() % 2 == 0 && survivors % 2 == 1) obs.even_parts_stay_even_or_vanish = false;
    }

    obs.balance_transfer = true;
    for (GraphClass c :
         {GraphClass::SBV, GraphClass::OSB, GraphClass::CSB, GraphClass::PB}) {
        auto [lambda, kind] = class_parameters(c);
        if (is_balanced(cg, lambda, kind) && !is_balanced(trace.result, lambda, kind))
            obs.balance_transfer = false;
    }
    return obs;
}

}  // namespace cbal
