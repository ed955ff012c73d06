#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fdp/rational.hpp"

namespace fdp {

/// Simple undirected graph on dense 0-based vertex indices.
///
/// Edges are stored canonically: each as (u, v) with u < v, the list sorted
/// lexicographically. The position of an edge in edges() is its edge index,
/// used wherever per-edge data or per-edge random streams are keyed.
/// Instances are immutable after construction.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Neighbors of u as (neighbor, edge index) pairs, sorted by neighbor.
    const std::vector<std::pair<int, int>>& adjacency(int u) const;

    int degree(int u) const { return static_cast<int>(adjacency(u).size()); }
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    /// Index into edges() of {u, v}, or -1.
    int edge_index(int u, int v) const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

// Generators. Vertex numbering is fixed and documented so fixtures stay stable.

/// Cycle v0 - v1 - ... - v(n-1) - v0; requires n >= 3.
Graph make_cycle(int n);

/// Path v0 - v1 - ... - v(n-1); requires n >= 1.
Graph make_path(int n);

/// Complete bipartite graph; left side 0..a-1, right side a..a+b-1.
Graph make_complete_bipartite(int a, int b);

/// Two hubs (vertices 0 and 1) joined by three internally disjoint paths with
/// len1, len2, len3 edges. Internal path vertices are numbered 2, 3, ... in
/// path order. Each length must be >= 1 and at most one may equal 1.
Graph make_theta(int len1, int len2, int len3);

/// Cycle of length cycle_n (vertices 0..cycle_n-1) plus pendants[i] leaves
/// attached to cycle vertex i; leaves are numbered cycle_n, cycle_n+1, ... in
/// attachment order. pendants may be shorter than cycle_n (missing entries 0).
Graph make_unicyclic(int cycle_n, const std::vector<int>& pendants);

/// Parses a generator spec like "cycle:4", "complete_bipartite:2,3",
/// "theta:2,2,1", "unicyclic:4,1".
Graph make_graph(const std::string& spec);

// Structural queries.

/// Length of a shortest cycle; nullopt when the graph is acyclic.
std::optional<int> girth(const Graph& g);

struct ChromaticOptions {
    int max_vertices = 64;
};

/// Exact chromatic number by branch and bound (greedy clique lower bound,
/// DSATUR upper bound). Rejects instances above the configured size limit.
int chromatic_number(const Graph& g, const ChromaticOptions& opts = {});

struct MadOptions {
    int max_vertices = 20;
};

/// Maximum over nonempty U of 2|E(G[U])| / |U|, exact. Exhaustive over vertex
/// subsets, so limited to small instances.
Rational max_average_degree(const Graph& g, const MadOptions& opts = {});

// Text format: line 1 "n m", then m lines "u v" (0-indexed). Loops, duplicate
// edges, and out-of-range endpoints are rejected.
Graph parse_graph_text(const std::string& text);
std::string graph_to_text(const Graph& g);

}  // namespace fdp
