#include "cbal/cdm.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cbal {

ColorDegreeMatrix compute_cdm(const ColoredGraph& cg) {
    int n = cg.vertex_count();
    int k = cg.palette_size();
    ColorDegreeMatrix m;
    m.n = n;
    m.k = k;
    m.degrees.assign(static_cast<size_t>(n) * k, 0);
    m.color_ids.resize(n);
    for (int v = 0; v < n; ++v) {
        m.color_ids[v] = cg.color_of(v);
        for (int u : cg.graph.neighbors(v)) ++m.deg(v, cg.color_of(u));
    }
    return m;
}

bool cdm_equal(const ColorDegreeMatrix& a, const ColorDegreeMatrix& b) {
    return a == b;
}

bool cdm_equal_as_multiset(const ColorDegreeMatrix& a, const ColorDegreeMatrix& b) {
    if (a.n != b.n || a.k != b.k) return false;
    auto rows = [](const ColorDegreeMatrix& m) {
        std::vector<std::vector<int>> out(m.n);
        for (int i = 0; i < m.n; ++i) {
            out[i].assign(m.degrees.begin() + static_cast<size_t>(i) * m.k,
                          m.degrees.begin() + static_cast<size_t>(i + 1) * m.k);
            out[i].push_back(m.color_id(i));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return rows(a) == rows(b);
}

bool is_graphic(std::vector<int> seq) {
    for (int d : seq)
        if (d < 0) return false;
    std::sort(seq.begin(), seq.end(), std::greater<>());
    int n = static_cast<int>(seq.size());
    if (n == 0) return true;
    if (seq[0] >= n) return false;
    std::int64_t total = std::accumulate(seq.begin(), seq.end(), std::int64_t{0});
    if (total % 2 != 0) return false;
    std::int64_t prefix = 0;
    for (int r = 1; r <= n; ++r) {
        prefix += seq[r - 1];
        std::int64_t bound = static_cast<std::int64_t>(r) * (r - 1);
        for (int i = r; i < n; ++i) bound += std::min(seq[i], r);
        if (prefix > bound) return false;
    }
    return true;
}

bool is_bigraphic(std::vector<int> p, std::vector<int> q) {
    for (int d : p)
        if (d < 0) return false;
    for (int d : q)
        if (d < 0) return false;
    std::int64_t sp = std::accumulate(p.begin(), p.end(), std::int64_t{0});
    std::int64_t sq = std::accumulate(q.begin(), q.end(), std::int64_t{0});
    if (sp != sq) return false;
    std::sort(p.begin(), p.end(), std::greater<>());
    std::int64_t prefix = 0;
    for (size_t r = 1; r <= p.size(); ++r) {
        prefix += p[r - 1];
        std::int64_t bound = 0;
        for (int d : q) bound += std::min<std::int64_t>(d, r);
        if (prefix > bound) return false;
    }
    return true;
}

namespace {

void validate_entries(const ColorDegreeMatrix& m) {
    if (m.n < 0 || m.k < 1) throw std::invalid_argument("malformed color degree matrix");
    if (m.degrees.size() != static_cast<size_t>(m.n) * m.k ||
        m.color_ids.size() != static_cast<size_t>(m.n))
        throw std::invalid_argument("color degree matrix has wrong shape");
    for (int d : m.degrees)
        if (d < 0) throw std::invalid_argument("color degree matrix has a negative entry");
}

std::vector<int> rows_with_color(const ColorDegreeMatrix& m, int color) {
    std::vector<int> out;
    for (int i = 0; i < m.n; ++i)
        if (m.color_id(i) == color) out.push_back(i);
    return out;
}

// 0 if realizable, otherwise an index identifying the first violated
// condition, with a message written to *why.
int first_violation(const ColorDegreeMatrix& m, std::string* why) {
    for (int i = 0; i < m.n; ++i)
        if (m.color_id(i) < 1 || m.color_id(i) > m.k) {
            if (why)
                *why = "condition 1: color identifier " + std::to_string(m.color_id(i)) +
                       " in row " + std::to_string(i + 1) + " not in 1.." + std::to_string(m.k);
            return 1;
        }
    for (int c = 1; c <= m.k; ++c) {
        std::vector<int> block;
        for (int i : rows_with_color(m, c)) block.push_back(m.deg(i, c));
        if (!is_graphic(std::move(block))) {
            if (why)
                *why = "condition 2: within-color degree sequence of color " + std::to_string(c) +
                       " is not graphic";
            return 2;
        }
    }
    for (int c1 = 1; c1 <= m.k; ++c1)
        for (int c2 = c1 + 1; c2 <= m.k; ++c2) {
            std::vector<int> p, q;
            for (int i : rows_with_color(m, c1)) p.push_back(m.deg(i, c2));
            for (int i : rows_with_color(m, c2)) q.push_back(m.deg(i, c1));
            if (!is_bigraphic(std::move(p), std::move(q))) {
                if (why)
                    *why = "condition 3: cross-color pair (" + std::to_string(c1) + "," +
                           std::to_string(c2) + ") is not bigraphic";
                return 3;
            }
        }
    return 0;
}

// Havel-Hakimi on the vertices `ids` with target degrees `want`, appending
// edges to `edges`.  Largest remaining degree first, ties by original index.
void realize_within(const std::vector<int>& ids, std::vector<int> want,
                    std::vector<std::pair<int, int>>& edges) {
    int n = static_cast<int>(ids.size());
    if (n == 0) return;
    std::vector<int> order(n);
    while (true) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return want[a] > want[b]; });
        int s = order[0];
        if (want[s] == 0) break;
        int d = want[s];
        if (d >= n) throw std::domain_error("within-color sequence not graphic");
        for (int t = 1; t <= d; ++t) {
            int o = order[t];
            if (want[o] <= 0) throw std::domain_error("within-color sequence not graphic");
            edges.emplace_back(std::min(ids[s], ids[o]), std::max(ids[s], ids[o]));
            --want[o];
        }
        want[s] = 0;
    }
}

// Gale-Ryser style bipartite realization between two vertex sets.
void realize_across(const std::vector<int>& left_ids, std::vector<int> left_want,
                    const std::vector<int>& right_ids, std::vector<int> right_want,
                    std::vector<std::pair<int, int>>& edges) {
    int nl = static_cast<int>(left_ids.size());
    int nr = static_cast<int>(right_ids.size());
    std::vector<int> order(nr);
    while (true) {
        int s = -1;
        for (int i = 0; i < nl; ++i)
            if (left_want[i] > 0 && (s < 0 || left_want[i] > left_want[s])) s = i;
        if (s < 0) break;
        int d = left_want[s];
        if (d > nr) throw std::domain_error("cross-color pair not bigraphic");
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return right_want[a] > right_want[b]; });
        for (int t = 0; t < d; ++t) {
            int o = order[t];
            if (right_want[o] <= 0) throw std::domain_error("cross-color pair not bigraphic");
            edges.emplace_back(std::min(left_ids[s], right_ids[o]),
                               std::max(left_ids[s], right_ids[o]));
            --right_want[o];
        }
        left_want[s] = 0;
    }
    for (int w : right_want)
        if (w != 0) throw std::domain_error("cross-color pair not bigraphic");
}

}  // namespace

bool is_realizable(const ColorDegreeMatrix& m) {
    validate_entries(m);
    return first_violation(m, nullptr) == 0;
}

ColoredGraph realize(const ColorDegreeMatrix& m) {
    validate_entries(m);
    std::string why;
    if (first_violation(m, &why) != 0) throw std::domain_error("not realizable: " + why);

    std::vector<std::pair<int, int>> edges;
    for (int c = 1; c <= m.k; ++c) {
        std::vector<int> ids = rows_with_color(m, c);
        std::vector<int> want;
        for (int i : ids) want.push_back(m.deg(i, c));
        realize_within(ids, std::move(want), edges);
    }
    for (int c1 = 1; c1 <= m.k; ++c1)
        for (int c2 = c1 + 1; c2 <= m.k; ++c2) {
            std::vector<int> left = rows_with_color(m, c1);
            std::vector<int> right = rows_with_color(m, c2);
            std::vector<int> lw, rw;
            for (int i : left) lw.push_back(m.deg(i, c2));
            for (int i : right) rw.push_back(m.deg(i, c1));
            realize_across(left, std::move(lw), right, std::move(rw), edges);
        }
    return ColoredGraph(Graph::from_edges(m.n, edges), Coloring(m.k, m.color_ids));
}

}  // namespace cbal
