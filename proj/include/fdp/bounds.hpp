#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fdp/graph.hpp"
#include "fdp/rational.hpp"
#include "fdp/solver.hpp"

namespace fdp {

/// ln C(n, k); -inf when the binomial is zero. Exact big-integer evaluation
/// for n below exact_threshold, lgamma above; the two paths agree to double
/// precision and are cross-checked in tests.
double log_binomial(long long n, long long k, long long exact_threshold = 1000);

/// Probability that a fixed selection with t indices per list spans no
/// cross-edge over m independent uniform perfect matchings:
/// [C(k-t, t) / C(k, t)]^m, exact.
Rational quasi_independence_probability(int k, int t, long long m);

/// Union-bound upper estimate for the probability that some t-per-list
/// selection is quasi-independent under the random cover:
/// [C(k-t,t)/C(k,t)]^m * C(k,t)^n, evaluated in log-space.
double union_bound_value(long long n, long long m, int k, int t);

struct ChainStep {
    std::string name;
    double lhs = 0;
    double rhs = 0;
    bool pass = false;
};

struct BoundReport {
    double d = 0;
    int k = 0;
    double eta0 = 0;     // 2 ln d / d
    Rational eta;        // ceil(eta0 * k) / k
    std::vector<ChainStep> steps;
    bool pass = false;
};

/// Evaluates the inequality chain behind the average-degree lower bound:
/// e(1-eta)^{d/2} <= e exp(-eta d/2) <= e/d < eta, with eta = ceil(eta0 k)/k.
/// Requires d >= 4 (the hypothesis of the bound).
BoundReport verify_lower_bound_chain(double d, int k);

struct Eta0Report {
    int n = 0;
    double eta0 = 0;
    double worst_margin = 0;  // max over the grid of lhs - rhs (negative = ok)
    int grid_points = 0;
    bool grid_ok = false;
};

/// A threshold eta0 < 1/2 such that for all eta in [eta0, 1/2):
///   (e(1-eta)/(1-2eta))^{(1-2eta)(n+1)} < (1/eta)^eta.
/// Found by locating the last violation via scan + bisection, then verified
/// on a 10^4-point grid. Such a threshold always exists: the left side tends
/// to 1 and the right side to sqrt(2) as eta -> 1/2.
Eta0Report excess_edge_eta0(int n);

/// 1 / C(k, k/2) for even k; always < 1.
Rational central_binomial_inverse(int k);

struct AdversaryReport {
    int k = 0;
    int t = 0;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::uint64_t seed = 0;
    double rate = 0;
    double wilson_low = 0;   // 95% Wilson interval
    double wilson_high = 0;
};

/// Samples random covers and counts those admitting no uniform t-per-list
/// quasi-independent selection. The per-trial predicate is the exact solver;
/// only the cover draw is random. Deterministic in (inputs, seed) and
/// independent of the thread count.
AdversaryReport monte_carlo_failure_rate(const Graph& g, int k, int t, std::uint64_t trials,
                                         std::uint64_t seed, int threads = 1,
                                         const SolverBudget& budget = {});

}  // namespace fdp
