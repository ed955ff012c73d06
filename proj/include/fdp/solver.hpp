#pragma once

#include <cstdint>
#include <optional>

#include "fdp/cover.hpp"
#include "fdp/rational.hpp"

namespace fdp {

struct SolverBudget {
    std::uint64_t max_nodes = 50'000'000;  // backtracking nodes per search
    std::uint64_t max_covers = 1'000'000;  // enumeration budget for theta_dp
};

/// True iff no cross-edge has both endpoints selected.
bool is_quasi_independent(const Cover& c, const Selection& s);

/// Quasi-independent selection with exactly one index per list, or nullopt.
/// Backtracking over vertices in BFS order with forward pruning.
std::optional<Selection> find_h_coloring(const Cover& c, const SolverBudget& budget = {});

/// Quasi-independent selection with exactly t indices per list, or nullopt.
std::optional<Selection> find_uniform_selection(const Cover& c, int t,
                                                const SolverBudget& budget = {});

struct UniformResult {
    int t = 0;
    int k = 0;
    Rational fraction;  // t/k reduced
    Selection witness;
};

/// Largest t admitting a uniform quasi-independent selection, found by
/// descending search from the per-edge matching bound (floor(k/2) when any
/// matching is perfect), plus a witness.
UniformResult max_uniform_fraction(const Cover& c, const SolverBudget& budget = {});

struct ThetaResult {
    Rational theta;
    int t = 0;
    int k = 0;
    Cover worst_cover;  // first minimizer in enumeration order
    Selection witness;  // best witness for the worst cover
};

/// theta_DP(G, k): minimum of max_uniform_fraction over all normalized
/// perfect-matching covers of G.
ThetaResult theta_dp(const Graph& g, int k, const SolverBudget& budget = {});

/// theta_DP for an even cycle, minimizing over one closing permutation per
/// conjugacy class (cycle types = integer partitions of k).
ThetaResult theta_dp_cycle(int n, int k, const SolverBudget& budget = {});

/// Extends a partial uniform selection greedily along `order` (the uncolored
/// vertices, each with at most one colored-or-earlier neighbor at its turn).
/// Returns nullopt when a vertex runs out of free indices (possible once
/// 2t > k); precondition violations raise invalid-order.
std::optional<Selection> pendant_extension(const Cover& c, const Selection& partial,
                                           const std::vector<int>& order);

/// All integer partitions of k in descending-lex order; each partition is a
/// weakly decreasing vector of parts. Conjugacy-class representatives for
/// theta_dp_cycle.
std::vector<std::vector<int>> integer_partitions(int k);

/// Permutation of [k] whose cycle type is the given partition: consecutive
/// blocks, each cyclically shifted.
std::vector<int> permutation_with_cycle_type(const std::vector<int>& partition);

}  // namespace fdp
