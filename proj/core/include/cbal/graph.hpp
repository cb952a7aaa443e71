#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cbal {

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are kept sorted ascending; no self-loops, no parallel
/// edges.  All text formats are 1-indexed, the in-memory API is 0-indexed.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    /// Builds a graph from an edge list, validating every edge.
    /// Throws std::invalid_argument on self-loops, duplicates or
    /// out-of-range endpoints.
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// Sorted edge list, each edge once with u < v.
    std::vector<std::pair<int, int>> edges() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// Vertex colors are integers 1..k; not every color has to be used.
struct Coloring {
    int k = 1;
    std::vector<int> colors;

    Coloring() = default;
    Coloring(int k, std::vector<int> colors);

    int size() const { return static_cast<int>(colors.size()); }
    int color_of(int v) const { return colors[v]; }

    bool operator==(const Coloring& other) const = default;
};

struct ColoredGraph {
    Graph graph;
    Coloring coloring;

    ColoredGraph() = default;
    ColoredGraph(Graph g, Coloring c);

    int vertex_count() const { return graph.vertex_count(); }
    int palette_size() const { return coloring.k; }
    int color_of(int v) const { return coloring.color_of(v); }
};

/// Part sizes of a complete multipartite graph, kept in input order.
struct MultipartiteSpec {
    std::vector<int> parts;

    explicit MultipartiteSpec(std::vector<int> parts);

    int vertex_count() const;
    int singleton_count() const;        // m1
    int size_two_part_count() const;    // m2
    int nonsingleton_odd_count() const; // h
};

std::vector<int> open_neighborhood(const Graph& g, int v);
std::vector<int> closed_neighborhood(const Graph& g, int v);
int max_degree(const Graph& g);

// Named families.  Vertex numbering is fixed:
//   path/cycle: consecutive 0..n-1
//   wheel: rim 0..n-1 in cycle order, hub is vertex n
//   complete_bipartite: first part 0..a-1, second a..a+b-1
//   complete_multipartite: vertices grouped by part in input order
//   petersen: outer cycle 0..4, inner vertices 5..9 (i+5 adjacent to
//             ((i+2) mod 5)+5), spokes i -- i+5
//   larson: ground set X first, then the lambda-element subsets of X in
//           lexicographic order; x is adjacent to S iff x is in S
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_wheel(int n);
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_complete_multipartite(const MultipartiteSpec& spec);
Graph make_petersen();
Graph make_larson(int k, int lambda);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Part structure if g is complete multipartite (parts ordered by their
/// smallest vertex), std::nullopt otherwise.
std::optional<std::vector<std::vector<int>>> multipartite_parts(const Graph& g);

}  // namespace cbal
