#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fdp/graph.hpp"

namespace fdp {

/// Orientation of a simple graph: ordered arcs (u, v), at most one of (u, v)
/// and (v, u) present, no loops. Immutable after construction.
class Digraph {
public:
    Digraph() = default;
    Digraph(int n, std::vector<std::pair<int, int>> arc_list);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }

    const std::vector<int>& out_neighbors(int u) const;
    const std::vector<int>& in_neighbors(int u) const;
    int out_degree(int u) const { return static_cast<int>(out_neighbors(u).size()); }
    int max_out_degree() const;

    bool has_arc(int u, int v) const;

    /// Underlying undirected graph.
    Graph underlying() const;

    /// True when this digraph orients exactly the edges of g.
    bool is_orientation_of(const Graph& g) const;

    bool operator==(const Digraph& other) const { return n_ == other.n_ && arcs_ == other.arcs_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

/// Vertices in an order where every arc points forward; nullopt if cyclic.
std::optional<std::vector<int>> topological_order(const Digraph& d);

inline bool is_acyclic(const Digraph& d) { return topological_order(d).has_value(); }

enum class Direction { forward, backward };

/// R+(u) / R-(u) per direction; with closed also includes u itself.
std::vector<int> reachable_set(const Digraph& d, int u, Direction dir, bool closed);

/// Acyclic orientation with max out-degree <= d obtained by repeatedly
/// removing a minimum-degree vertex and orienting its remaining edges out of
/// it; nullopt when the graph is not d-degenerate.
std::optional<Digraph> degeneracy_orientation(const Graph& g, int d);

struct ParityCheckResult {
    bool pass = true;
    // Populated on failure: arc (u, v) together with a directed u->v path of
    // even length >= 2.
    int u = -1;
    int v = -1;
    std::vector<int> even_path;
};

/// Checks that no arc (u, v) admits a directed u->v path of even length >= 2.
/// Computed by parity-labeled reachability over the DAG; requires acyclicity.
ParityCheckResult check_parity_condition(const Digraph& d);

/// Number of directed u->v paths (1 for u == v), saturating at uint64 max.
/// Requires acyclicity.
std::uint64_t count_directed_paths(const Digraph& d, int u, int v);

// Arc-list text format: line 1 "n m", then m lines "u v" meaning arc u -> v.
Digraph parse_digraph_text(const std::string& text);
std::string digraph_to_text(const Digraph& d);

}  // namespace fdp
