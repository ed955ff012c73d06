#include "fdp/bounds.hpp"

#include <atomic>
#include <cmath>
#include <limits>

#include "fdp/error.hpp"
#include "fdp/rng.hpp"
#include "parallel.hpp"

namespace fdp {

double log_binomial(long long n, long long k, long long exact_threshold) {
    if (k < 0 || k > n || n < 0) return -std::numeric_limits<double>::infinity();
    if (k == 0 || k == n) return 0.0;
    if (n <= exact_threshold) {
        const BigInt b = binomial(n, k);
        // ln via the top 64 bits plus the shifted-out exponent
        const auto bits = boost::multiprecision::msb(b) + 1;
        if (bits <= 62) return std::log(b.convert_to<double>());
        const BigInt top = b >> (bits - 62);
        return std::log(top.convert_to<double>()) + static_cast<double>(bits - 62) * std::log(2.0);
    }
    return std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
           std::lgamma(static_cast<double>(n - k) + 1);
}

Rational quasi_independence_probability(int k, int t, long long m) {
    if (t < 0 || t > k) raise(errc::invalid_parameter, "need 0 <= t <= k");
    if (m < 0) raise(errc::invalid_parameter, "edge count must be >= 0");
    if (t == 0 || m == 0) return Rational(1);
    const BigInt favorable = binomial(k - t, t);
    if (favorable == 0) return Rational(0);
    const Rational single(favorable, binomial(k, t));
    return fdp::pow(single, m);
}

double union_bound_value(long long n, long long m, int k, int t) {
    if (t < 0 || t > k) raise(errc::invalid_parameter, "need 0 <= t <= k");
    if (n < 0 || m < 0) raise(errc::invalid_parameter, "counts must be >= 0");
    const double log_fav = log_binomial(k - t, t);
    if (std::isinf(log_fav) && m > 0) return 0.0;  // no selection can survive even one edge
    const double log_all = log_binomial(k, t);
    const double log_value = static_cast<double>(m) * (log_fav - log_all) +
                             static_cast<double>(n) * log_all;
    return std::exp(log_value);
}

BoundReport verify_lower_bound_chain(double d, int k) {
    if (!(d >= 4.0)) raise(errc::out_of_scope, "the chain is stated for d >= 4");
    if (k < 1) raise(errc::invalid_parameter, "fold must be >= 1");
    BoundReport report;
    report.d = d;
    report.k = k;
    report.eta0 = 2.0 * std::log(d) / d;
    const auto ceil_k = static_cast<long long>(std::ceil(report.eta0 * k - 1e-12));
    report.eta = Rational(BigInt(ceil_k), BigInt(k));
    const double eta = to_double(report.eta);
    const double e = std::exp(1.0);
    const double lhs_power = e * std::pow(1.0 - eta, d / 2.0);
    const double mid_exp = e * std::exp(-eta * d / 2.0);
    const double over_d = e / d;
    report.steps = {
        {"e(1-eta)^(d/2) <= e*exp(-eta*d/2)", lhs_power, mid_exp, lhs_power <= mid_exp},
        {"e*exp(-eta*d/2) <= e/d", mid_exp, over_d, mid_exp <= over_d},
        {"e/d < eta", over_d, eta, over_d < eta},
        {"e(1-eta)^(d/2) < eta", lhs_power, eta, lhs_power < eta},
    };
    report.pass = true;
    for (const auto& step : report.steps) report.pass = report.pass && step.pass;
    return report;
}

namespace {

// lhs - rhs in log form for the excess-edge inequality at eta in (0, 1/2).
double excess_edge_margin(int n, double eta) {
    const double lhs = (1.0 - 2.0 * eta) * (n + 1) *
                       (1.0 + std::log(1.0 - eta) - std::log(1.0 - 2.0 * eta));
    const double rhs = eta * std::log(1.0 / eta);
    return lhs - rhs;
}

}  // namespace

Eta0Report excess_edge_eta0(int n) {
    if (n < 1) raise(errc::invalid_parameter, "need n >= 1");
    constexpr int kGrid = 10'000;
    constexpr double kHalf = 0.5;
    // locate the last violation of the strict inequality on a coarse scan
    double last_bad = 0.0;
    double first_good = kHalf;
    for (int i = kGrid - 1; i >= 1; --i) {
        const double eta = kHalf * i / kGrid;
        if (excess_edge_margin(n, eta) >= 0) {
            last_bad = eta;
            break;
        }
        first_good = eta;
    }
    double lo = last_bad;
    double hi = first_good;
    for (int iter = 0; iter < 100 && hi - lo > 1e-13; ++iter) {
        const double mid = (lo + hi) / 2;
        if (excess_edge_margin(n, mid) >= 0)
            lo = mid;
        else
            hi = mid;
    }
    Eta0Report report;
    report.n = n;
    report.eta0 = hi + 1e-9;
    report.grid_points = kGrid;
    report.worst_margin = -std::numeric_limits<double>::infinity();
    report.grid_ok = true;
    for (int i = 0; i < kGrid; ++i) {
        const double eta = report.eta0 + (kHalf - report.eta0) * i / kGrid;
        const double margin = excess_edge_margin(n, eta);
        report.worst_margin = std::max(report.worst_margin, margin);
        if (margin >= 0) report.grid_ok = false;
    }
    return report;
}

Rational central_binomial_inverse(int k) {
    if (k < 2 || k % 2 != 0) raise(errc::invalid_parameter, "need even k >= 2");
    return Rational(BigInt(1), binomial(k, k / 2));
}

AdversaryReport monte_carlo_failure_rate(const Graph& g, int k, int t, std::uint64_t trials,
                                         std::uint64_t seed, int threads,
                                         const SolverBudget& budget) {
    if (t < 0 || t > k) raise(errc::invalid_parameter, "need 0 <= t <= k");
    std::atomic<std::uint64_t> failures{0};
    detail::parallel_chunks(trials, threads, [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t local = 0;
        for (std::uint64_t trial = begin; trial < end; ++trial) {
            const Cover c = random_cover(g, k, derive_seed(seed, stream::trial, trial));
            if (!find_uniform_selection(c, t, budget)) ++local;
        }
        failures.fetch_add(local, std::memory_order_relaxed);
    });
    AdversaryReport report;
    report.k = k;
    report.t = t;
    report.trials = trials;
    report.failures = failures.load();
    report.seed = seed;
    const double nt = static_cast<double>(trials);
    report.rate = trials == 0 ? 0.0 : static_cast<double>(report.failures) / nt;
    if (trials > 0) {
        const double z = 1.959963984540054;  // 95%
        const double p = report.rate;
        const double denom = 1.0 + z * z / nt;
        const double center = (p + z * z / (2 * nt)) / denom;
        const double half =
            z * std::sqrt(p * (1 - p) / nt + z * z / (4 * nt * nt)) / denom;
        report.wilson_low = std::max(0.0, center - half);
        report.wilson_high = std::min(1.0, center + half);
    }
    return report;
}

}  // namespace fdp
