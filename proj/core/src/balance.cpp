#include "cbal/balance.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <stdexcept>

namespace cbal {

std::string to_string(BalanceKind kind) {
    switch (kind) {
        case BalanceKind::Open: return "open";
        case BalanceKind::Closed: return "closed";
        case BalanceKind::Local: return "local";
        case BalanceKind::Parity: return "parity";
    }
    return "?";
}

std::string to_string(GraphClass c) {
    switch (c) {
        case GraphClass::NBC: return "NBC";
        case GraphClass::CNBC: return "CNBC";
        case GraphClass::OSB: return "OSB";
        case GraphClass::CSB: return "CSB";
        case GraphClass::SBV: return "SBV";
        case GraphClass::PB: return "PB";
    }
    return "?";
}

namespace {

int spread(const std::vector<int>& counts) {
    auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
    return *hi - *lo;
}

}  // namespace

ImbalanceReport imbalance(const ColoredGraph& cg) {
    int n = cg.vertex_count();
    int k = cg.palette_size();
    ImbalanceReport rep;
    rep.open.resize(n);
    rep.closed.resize(n);
    std::vector<int> counts(k);
    for (int v = 0; v < n; ++v) {
        std::fill(counts.begin(), counts.end(), 0);
        for (int u : cg.graph.neighbors(v)) ++counts[cg.color_of(u) - 1];
        rep.open[v] = spread(counts);
        ++counts[cg.color_of(v) - 1];
        rep.closed[v] = spread(counts);
    }
    return rep;
}

bool is_balanced(const ColoredGraph& cg, int lambda, BalanceKind kind) {
    if (kind == BalanceKind::Parity && cg.palette_size() != 2)
        throw std::invalid_argument("parity balance is defined for k = 2 only");
    if (kind != BalanceKind::Parity && lambda < 0)
        throw std::invalid_argument("lambda must be nonnegative");
    ImbalanceReport rep = imbalance(cg);
    int n = cg.vertex_count();
    for (int v = 0; v < n; ++v) {
        switch (kind) {
            case BalanceKind::Open:
                if (rep.open[v] > lambda) return false;
                break;
            case BalanceKind::Closed:
                if (rep.closed[v] > lambda) return false;
                break;
            case BalanceKind::Local:
                if (rep.open[v] > lambda && rep.closed[v] > lambda) return false;
                break;
            case BalanceKind::Parity:
                if (cg.graph.degree(v) % 2 == 0 ? rep.open[v] != 0 : rep.closed[v] != 0)
                    return false;
                break;
        }
    }
    return true;
}

namespace {

// Backtracking state for the exact search.  Vertices are colored along a
// smallest-last degeneracy order; the first vertex is pinned to color 1 and
// new colors enter in increasing order, which is lossless for existence
// because every balance predicate is palette-permutation invariant.
struct Solver {
    const Graph& g;
    int n, k, lambda;
    BalanceKind kind;
    std::vector<int> order;      // coloring sequence
    std::vector<int> color;      // 0 = uncolored
    std::vector<int> committed;  // n*k: colored neighbors per color
    std::vector<int> free_nbrs;  // uncolored neighbors
    int forced_second = 0;       // 0 = free; else the color order[1] must take

    Solver(const Graph& g, int k, int lambda, BalanceKind kind)
        : g(g), n(g.vertex_count()), k(k), lambda(lambda), kind(kind) {
        order = smallest_last_order();
        color.assign(n, 0);
        committed.assign(static_cast<size_t>(n) * k, 0);
        free_nbrs.resize(n);
        for (int v = 0; v < n; ++v) free_nbrs[v] = g.degree(v);
    }

    std::vector<int> smallest_last_order() const {
        std::vector<int> deg(n), removed(n, 0), seq;
        for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
        seq.reserve(n);
        for (int step = 0; step < n; ++step) {
            int best = -1;
            for (int v = 0; v < n; ++v)
                if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
            removed[best] = 1;
            seq.push_back(best);
            for (int u : g.neighbors(best))
                if (!removed[u]) --deg[u];
        }
        std::reverse(seq.begin(), seq.end());
        return seq;
    }

    int& cnt(int v, int c) { return committed[static_cast<size_t>(v) * k + c - 1]; }

    // Least achievable max-min gap over the counts after distributing
    // `free_slots` more entries arbitrarily.
    int best_case_spread(const int* counts, int own_extra, int own_color, int free_slots) const {
        thread_local std::vector<int> cs_scratch;
        int mx = 0;
        for (int c = 0; c < k; ++c) mx = std::max(mx, counts[c] + (own_color == c + 1 ? own_extra : 0));
        long need = 0;
        for (int c = 0; c < k; ++c)
            need += mx - (counts[c] + (own_color == c + 1 ? own_extra : 0));
        if (free_slots >= need) return (free_slots - need) % k == 0 ? 0 : 1;
        // Water-fill the low counts; the reachable common floor is the
        // largest m with sum(max(0, m - count)) <= free_slots.
        std::vector<int>& cs = cs_scratch;
        cs.resize(k);
        for (int c = 0; c < k; ++c) cs[c] = counts[c] + (own_color == c + 1 ? own_extra : 0);
        std::sort(cs.begin(), cs.end());
        long budget = free_slots;
        int floor_level = cs[0];
        for (int i = 0; i < k; ++i) {
            int next = (i + 1 < k) ? cs[i + 1] : mx;
            long cost = static_cast<long>(i + 1) * (next - floor_level);
            if (cost <= budget) {
                budget -= cost;
                floor_level = next;
            } else {
                floor_level += static_cast<int>(budget / (i + 1));
                break;
            }
        }
        return mx - floor_level;
    }

    // Can vertex v still satisfy the balance condition with best-case
    // completion of its uncolored neighborhood (and itself, for closed)?
    bool feasible(int v) const {
        const int* counts = &committed[static_cast<size_t>(v) * k];
        int r_open = free_nbrs[v];
        int own = color[v];
        int r_closed = r_open + (own == 0 ? 1 : 0);
        switch (kind) {
            case BalanceKind::Open:
                return best_case_spread(counts, 0, 0, r_open) <= lambda;
            case BalanceKind::Closed:
                return best_case_spread(counts, own != 0 ? 1 : 0, own, r_closed) <= lambda;
            case BalanceKind::Local:
                return best_case_spread(counts, 0, 0, r_open) <= lambda ||
                       best_case_spread(counts, own != 0 ? 1 : 0, own, r_closed) <= lambda;
            case BalanceKind::Parity: {
                // k == 2.  Exact balance at N(v) for even degree, N[v] for odd.
                int c1 = counts[0], c2 = counts[1];
                if (g.degree(v) % 2 == 0) {
                    int gap = std::abs(c1 - c2);
                    return gap <= r_open;
                }
                if (own == 1) ++c1;
                if (own == 2) ++c2;
                int gap = std::abs(c1 - c2);
                return gap <= r_closed;
            }
        }
        return true;
    }

    bool assign(int pos, int& max_used) {
        if (pos == n) return true;
        int v = order[pos];
        int hi = std::min(k, max_used + 1);
        for (int c = 1; c <= hi; ++c) {
            if (pos == 1 && forced_second != 0 && c != forced_second) continue;
            color[v] = c;
            for (int u : g.neighbors(v)) {
                ++cnt(u, c);
                --free_nbrs[u];
            }
            bool ok = feasible(v);
            if (ok)
                for (int u : g.neighbors(v))
                    if (!feasible(u)) { ok = false; break; }
            if (ok) {
                int prev = max_used;
                max_used = std::max(max_used, c);
                if (assign(pos + 1, max_used)) return true;
                max_used = prev;
            }
            for (int u : g.neighbors(v)) {
                --cnt(u, c);
                ++free_nbrs[u];
            }
            color[v] = 0;
        }
        return false;
    }

    std::optional<Coloring> run() {
        if (n == 0) return Coloring(k, {});
        int max_used = 0;
        if (!assign(0, max_used)) return std::nullopt;
        return Coloring(k, color);
    }
};

std::optional<Coloring> solve_sequential(const Graph& g, int k, int lambda, BalanceKind kind,
                                         int forced_second) {
    Solver s(g, k, lambda, kind);
    s.forced_second = forced_second;
    return s.run();
}

}  // namespace

std::optional<Coloring> exists_coloring(const Graph& g, int k, int lambda, BalanceKind kind,
                                        const SolverOptions& opts) {
    if (k < 1) throw std::invalid_argument("palette size must be at least 1");
    if (kind == BalanceKind::Parity) {
        if (k != 2) throw std::invalid_argument("parity balance is defined for k = 2 only");
    } else if (lambda < 0) {
        throw std::invalid_argument("lambda must be nonnegative");
    }
    if (opts.max_n > 0 && g.vertex_count() > opts.max_n)
        throw std::domain_error("graph too large for exact search (n=" +
                                std::to_string(g.vertex_count()) + ", guard=" +
                                std::to_string(opts.max_n) + "); raise max_n to override");

    if (opts.threads > 1 && g.vertex_count() >= 2 && k >= 2) {
        // Split on the color of the second decision vertex.  Under the
        // symmetry breaking it can only take colors 1 or 2; the branch-1
        // witness, if any, is the lexicographically least overall.
        auto task2 = std::async(std::launch::async, solve_sequential, std::cref(g), k, lambda,
                                kind, 2);
        auto r1 = solve_sequential(g, k, lambda, kind, 1);
        auto r2 = task2.get();
        if (r1) return r1;
        return r2;
    }
    return solve_sequential(g, k, lambda, kind, 0);
}

namespace {

// 0 if every degree is even, 1 if every degree is odd, nullopt on a mix.
std::optional<int> uniform_degree_parity(const Graph& g) {
    bool all_even = true, all_odd = true;
    for (int v = 0; v < g.vertex_count(); ++v)
        (g.degree(v) % 2 == 0 ? all_odd : all_even) = false;
    if (all_even) return 0;
    if (all_odd) return 1;
    return std::nullopt;
}

}  // namespace

int lower_bound(const Graph& g, int k, BalanceKind kind) {
    if (k < 2) throw std::invalid_argument("balance numbers need k >= 2");
    if (k != 2 || g.vertex_count() == 0 || kind == BalanceKind::Local ||
        kind == BalanceKind::Parity)
        return 0;
    auto parity = uniform_degree_parity(g);
    if (!parity) return 0;
    // All even: open gaps are even, closed gaps odd.  All odd: the reverse.
    bool odd_beta = *parity == 0 ? kind == BalanceKind::Closed : kind == BalanceKind::Open;
    return odd_beta ? 1 : 0;
}

BalanceCertificate beta(const Graph& g, int k, BalanceKind kind, const SolverOptions& opts) {
    if (k < 2) throw std::invalid_argument("balance numbers need k >= 2");
    if (kind == BalanceKind::Parity)
        throw std::invalid_argument("beta is defined for open, closed and local balance");
    if (g.vertex_count() == 0) throw std::invalid_argument("beta of empty graph");

    int delta = max_degree(g);
    // Closed balance can exceed the maximum degree only on edgeless graphs,
    // where the single-vertex closed neighborhood forces lambda = 1.
    int cap = kind == BalanceKind::Closed ? delta + 1 : delta;
    int lb = lower_bound(g, k, kind);
    bool parity_step =
        k == 2 && kind != BalanceKind::Local && uniform_degree_parity(g).has_value();
    int step = parity_step ? 2 : 1;

    bool searched_below = false;
    for (int lambda = lb; lambda <= cap; lambda += step) {
        auto wit = exists_coloring(g, k, lambda, kind, opts);
        if (wit) {
            BalanceCertificate cert;
            cert.verdict = lambda;
            cert.witness = *wit;
            cert.kind = kind;
            cert.exhausted = searched_below;
            return cert;
        }
        searched_below = true;
    }
    throw std::logic_error("beta search exceeded its upper bound");
}

std::pair<int, BalanceKind> class_parameters(GraphClass c) {
    switch (c) {
        case GraphClass::NBC: return {0, BalanceKind::Open};
        case GraphClass::CNBC: return {0, BalanceKind::Closed};
        case GraphClass::OSB: return {1, BalanceKind::Open};
        case GraphClass::CSB: return {1, BalanceKind::Closed};
        case GraphClass::SBV: return {1, BalanceKind::Local};
        case GraphClass::PB: return {0, BalanceKind::Parity};
    }
    throw std::invalid_argument("unknown class");
}

ClassReport class_membership(const Graph& g, const SolverOptions& opts) {
    ClassReport rep;
    for (GraphClass c : all_graph_classes) {
        auto [lambda, kind] = class_parameters(c);
        rep.witness(c) = exists_coloring(g, 2, lambda, kind, opts);
    }
    return rep;
}

}  // namespace cbal
