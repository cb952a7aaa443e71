#include "cbal/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace cbal {

Graph::Graph(int n) : n_(n), adj_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v + 1) + " out of range (n=" +
                                    std::to_string(n_) + ")");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u + 1));
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    if (it != adj_[u].end() && *it == v)
        throw std::invalid_argument("duplicate edge " + std::to_string(u + 1) + " " +
                                    std::to_string(v + 1));
    adj_[u].insert(it, v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    if (it == adj_[u].end() || *it != v)
        throw std::invalid_argument("edge " + std::to_string(u + 1) + " " +
                                    std::to_string(v + 1) + " not present");
    adj_[u].erase(it);
    adj_[v].erase(std::lower_bound(adj_[v].begin(), adj_[v].end(), u));
    --m_;
}

Coloring::Coloring(int k, std::vector<int> colors_in) : k(k), colors(std::move(colors_in)) {
    if (k < 1) throw std::invalid_argument("palette size must be at least 1");
    for (int c : colors)
        if (c < 1 || c > k)
            throw std::invalid_argument("color " + std::to_string(c) + " out of range 1.." +
                                        std::to_string(k));
}

ColoredGraph::ColoredGraph(Graph g, Coloring c) : graph(std::move(g)), coloring(std::move(c)) {
    if (coloring.size() != graph.vertex_count())
        throw std::invalid_argument("coloring length does not match vertex count");
}

MultipartiteSpec::MultipartiteSpec(std::vector<int> parts_in) : parts(std::move(parts_in)) {
    if (parts.empty()) throw std::invalid_argument("multipartite spec needs at least one part");
    for (int p : parts)
        if (p < 1) throw std::invalid_argument("part sizes must be positive");
}

int MultipartiteSpec::vertex_count() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

int MultipartiteSpec::singleton_count() const {
    return static_cast<int>(std::count(parts.begin(), parts.end(), 1));
}

int MultipartiteSpec::size_two_part_count() const {
    return static_cast<int>(std::count(parts.begin(), parts.end(), 2));
}

int MultipartiteSpec::nonsingleton_odd_count() const {
    return static_cast<int>(
        std::count_if(parts.begin(), parts.end(), [](int p) { return p >= 3 && p % 2 == 1; }));
}

std::vector<int> open_neighborhood(const Graph& g, int v) {
    return g.neighbors(v);
}

std::vector<int> closed_neighborhood(const Graph& g, int v) {
    std::vector<int> out = g.neighbors(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

int max_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("max_degree of empty graph");
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph make_wheel(int n) {
    if (n < 3) throw std::invalid_argument("wheel needs n >= 3 rim vertices");
    Graph g(n + 1);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(i, n);
    }
    return g;
}

Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite needs positive parts");
    return make_complete_multipartite(MultipartiteSpec({a, b}));
}

Graph make_complete_multipartite(const MultipartiteSpec& spec) {
    int n = spec.vertex_count();
    std::vector<int> part_of(n);
    int at = 0, pi = 0;
    for (int p : spec.parts) {
        for (int i = 0; i < p; ++i) part_of[at++] = pi;
        ++pi;
    }
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) g.add_edge(u, v);
    return g;
}

Graph make_petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

namespace {

// Lexicographic enumeration of the size-lambda subsets of {0..m-1}.
std::vector<std::vector<int>> subsets_of_size(int m, int lambda) {
    std::vector<std::vector<int>> out;
    if (lambda == 0) {
        out.push_back({});
        return out;
    }
    if (lambda > m) return out;
    std::vector<int> cur(lambda);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        int i = lambda - 1;
        while (i >= 0 && cur[i] == m - lambda + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < lambda; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace

Graph make_larson(int k, int lambda) {
    if (k < 2) throw std::invalid_argument("larson construction needs k >= 2");
    if (lambda < 0) throw std::invalid_argument("larson construction needs lambda >= 0");
    int m = std::max(0, (lambda - 1) * k + 1);
    auto subsets = subsets_of_size(m, lambda);
    int n = m + static_cast<int>(subsets.size());
    if (n == 0) throw std::invalid_argument("larson parameters produce an empty graph");
    Graph g(n);
    for (int s = 0; s < static_cast<int>(subsets.size()); ++s)
        for (int x : subsets[s]) g.add_edge(x, m + s);
    return g;
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u))
            if (!seen[v]) {
                seen[v] = 1;
                ++cnt;
                q.push(v);
            }
    }
    return cnt == n;
}

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

std::optional<std::vector<std::vector<int>>> multipartite_parts(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> part_of(n, -1);
    std::vector<std::vector<int>> parts;
    // Components of the complement graph, found by BFS over non-neighbors.
    for (int s = 0; s < n; ++s) {
        if (part_of[s] >= 0) continue;
        int pid = static_cast<int>(parts.size());
        parts.push_back({});
        std::queue<int> q;
        q.push(s);
        part_of[s] = pid;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            parts[pid].push_back(u);
            const auto& nb = g.neighbors(u);
            size_t j = 0;
            for (int v = 0; v < n; ++v) {
                while (j < nb.size() && nb[j] < v) ++j;
                bool adjacent = j < nb.size() && nb[j] == v;
                if (v != u && !adjacent && part_of[v] < 0) {
                    part_of[v] = pid;
                    q.push(v);
                }
            }
        }
        std::sort(parts[pid].begin(), parts[pid].end());
    }
    // Complete multipartite iff edges are exactly the cross-part pairs.
    for (int u = 0; u < n; ++u) {
        int cross = 0;
        for (const auto& p : parts)
            if (part_of[u] != part_of[p.front()]) cross += static_cast<int>(p.size());
        if (g.degree(u) != cross) return std::nullopt;
        for (int v : g.neighbors(u))
            if (part_of[v] == part_of[u]) return std::nullopt;
    }
    return parts;
}

}  // namespace cbal
