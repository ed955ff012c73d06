#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fdp/graph.hpp"

namespace fdp {

/// k-fold cover of a base graph.
///
/// The cover graph H has implicit vertex set V(G) x [k]; each list
/// L(u) = {u} x [k] is a clique (never stored), and for each base edge
/// {u, v} with u < v the cross-edges form a partial matching stored as
/// maps[edge_index]: position i holds the partner index j such that (u, i)
/// is adjacent to (v, j), or -1 when (u, i) is unmatched. Injectivity of
/// each map on its matched domain is exactly the matching condition.
struct Cover {
    Graph base;
    int k = 0;
    std::vector<std::vector<int>> maps;

    /// Partner of index i of L(u) across edge {u, v}, or -1. Handles both
    /// directions (inverse lookup when u is the higher endpoint).
    int partner(int u, int v, int i) const;

    /// True when every matching is a full permutation.
    bool all_perfect() const;

    bool operator==(const Cover& other) const {
        return base == other.base && k == other.k && maps == other.maps;
    }
};

/// Per-vertex subsets of [k]; the candidate quasi-independent sets.
struct Selection {
    int k = 0;
    std::vector<std::vector<int>> sel;  // sorted index lists, one per vertex

    int size_at(int u) const { return static_cast<int>(sel[static_cast<std::size_t>(u)].size()); }
    bool contains(int u, int i) const;
};

struct CoverViolation {
    bool ok = true;
    std::string condition;  // violated condition, e.g. "C4"
    int u = -1;
    int v = -1;
    std::string detail;
};

/// Checks the cover invariants; violations are reported, not thrown.
CoverViolation validate(const Cover& c);

/// Cover with the identity permutation on every edge.
Cover identity_cover(const Graph& g, int k);

/// Cover of an even cycle with identity matchings on consecutive edges and
/// the permutation sigma on the closing edge {0, n-1} (index j of L(0)
/// matched to sigma[j] of L(n-1)). Requires n >= 4 even.
Cover twisted_cycle_cover(int n, int k, const std::vector<int>& sigma);

struct ListAssignmentCover {
    Cover cover;
    // colors[u][i] is the color behind index i of L(u); translates
    // selections back to list colorings.
    std::vector<std::vector<int>> colors;
};

/// Builds the cover whose H-colorings correspond to proper list colorings:
/// index i of L(u) and index j of L(v) are matched iff the colors agree.
/// All lists must be nonempty, duplicate-free, and of equal size.
ListAssignmentCover from_list_assignment(const Graph& g, const std::vector<std::vector<int>>& lists);

/// Relabels lists so that every edge of the BFS spanning forest (rooted at
/// the lowest vertex of each component) carries the identity permutation.
/// The result is isomorphic to the input; requires perfect matchings.
Cover normalize(const Cover& c);

/// Independent uniformly random permutation on every edge; a pure function
/// of (g, k, seed) via the per-edge counter scheme.
Cover random_cover(const Graph& g, int k, std::uint64_t seed);

/// Stream of all normalized perfect-matching covers: identity on spanning
/// forest edges, every permutation on each non-forest edge (lexicographic
/// odometer order). Construction fails when k!^(#non-forest edges) exceeds
/// the budget.
class CoverEnumerator {
public:
    CoverEnumerator(const Graph& g, int k, std::uint64_t max_covers = 1'000'000);

    /// Total number of covers in the stream (k!^cycle_rank).
    std::uint64_t total_count() const { return total_; }

    /// Next cover, or false when exhausted.
    bool next(Cover& out);

private:
    Graph base_;
    int k_ = 0;
    std::vector<int> nontree_edges_;
    std::vector<std::vector<int>> perms_;  // odometer state, one per non-tree edge
    std::uint64_t total_ = 0;
    bool done_ = false;
    bool first_ = true;
};

// Cover JSON: {"n":..., "k":..., "edges":[{"u":..., "v":..., "map":[...]}]}
// with -1 for unmatched and u < v; serialization uses sorted keys so a
// parse/dump round trip is byte-stable.
std::string cover_to_json(const Cover& c);
Cover cover_from_json(const std::string& text);

// Selection JSON: {"0":[1,3], "1":[0], ...}.
std::string selection_to_json(const Selection& s);

}  // namespace fdp
