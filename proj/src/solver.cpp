#include "fdp/solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>

#include "fdp/error.hpp"

namespace fdp {

bool is_quasi_independent(const Cover& c, const Selection& s) {
    if (static_cast<int>(s.sel.size()) != c.base.vertex_count())
        raise(errc::invalid_parameter, "selection size differs from vertex count");
    for (const auto& row : s.sel)
        for (const int i : row)
            if (i < 0 || i >= c.k) raise(errc::invalid_parameter, "selection index out of range");
    for (int e = 0; e < c.base.edge_count(); ++e) {
        const auto [u, v] = c.base.edges()[static_cast<std::size_t>(e)];
        const auto& m = c.maps[static_cast<std::size_t>(e)];
        for (const int i : s.sel[static_cast<std::size_t>(u)]) {
            const int j = m[static_cast<std::size_t>(i)];
            if (j >= 0 && s.contains(v, j)) return false;
        }
    }
    return true;
}

namespace {

std::vector<int> bfs_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int root = 0; root < n; ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        seen[static_cast<std::size_t>(root)] = true;
        std::queue<int> queue;
        queue.push(root);
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop();
            order.push_back(x);
            for (const auto [y, e] : g.adjacency(x)) {
                (void)e;
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = true;
                    queue.push(y);
                }
            }
        }
    }
    return order;
}

// Backtracking over vertices in BFS order; per-vertex t-subsets of the
// unblocked indices enumerated in colex order, pruned by consistency with
// every previously fixed neighbor. Bitmask representation caps k at 64.
class UniformSearch {
public:
    UniformSearch(const Cover& c, const SolverBudget& budget) : cover_(c), budget_(budget) {
        const int n = c.base.vertex_count();
        if (c.k > 64) raise(errc::size_limit, "selection search supports k <= 64");
        order_ = bfs_order(c.base);
        position_.assign(static_cast<std::size_t>(n), -1);
        for (int idx = 0; idx < n; ++idx)
            position_[static_cast<std::size_t>(order_[static_cast<std::size_t>(idx)])] = idx;
        // partner[e] forward (lower -> higher) and inverse tables
        inverse_.resize(c.maps.size());
        for (std::size_t e = 0; e < c.maps.size(); ++e) {
            inverse_[e].assign(static_cast<std::size_t>(c.k), -1);
            for (int i = 0; i < c.k; ++i) {
                const int j = c.maps[e][static_cast<std::size_t>(i)];
                if (j >= 0) inverse_[e][static_cast<std::size_t>(j)] = i;
            }
        }
    }

    std::optional<Selection> find(int t) {
        const int n = cover_.base.vertex_count();
        if (t < 0 || t > cover_.k) return std::nullopt;
        masks_.assign(static_cast<std::size_t>(n), 0);
        nodes_ = 0;
        if (!descend(0, t)) return std::nullopt;
        Selection s;
        s.k = cover_.k;
        s.sel.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < cover_.k; ++i)
                if (masks_[static_cast<std::size_t>(v)] >> i & 1)
                    s.sel[static_cast<std::size_t>(v)].push_back(i);
        return s;
    }

private:
    bool descend(int depth, int t) {
        if (depth == cover_.base.vertex_count()) return true;
        const int u = order_[static_cast<std::size_t>(depth)];
        std::uint64_t blocked = 0;
        for (const auto [v, e] : cover_.base.adjacency(u)) {
            if (position_[static_cast<std::size_t>(v)] >= depth) continue;  // not fixed yet
            const auto& towards_u =
                u < v ? inverse_[static_cast<std::size_t>(e)] : cover_.maps[static_cast<std::size_t>(e)];
            // towards_u[j] = index of L(u) matched with index j of L(v)
            const std::uint64_t sel_v = masks_[static_cast<std::size_t>(v)];
            for (int j = 0; j < cover_.k; ++j) {
                if (!(sel_v >> j & 1)) continue;
                const int i = towards_u[static_cast<std::size_t>(j)];
                if (i >= 0) blocked |= std::uint64_t(1) << i;
            }
        }
        const std::uint64_t full =
            cover_.k == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << cover_.k) - 1;
        const std::uint64_t allowed = full & ~blocked;
        const int avail = std::popcount(allowed);
        if (avail < t) return false;
        std::vector<int> pos;
        pos.reserve(static_cast<std::size_t>(avail));
        for (std::uint64_t rest = allowed; rest != 0; rest &= rest - 1)
            pos.push_back(std::countr_zero(rest));
        // colex enumeration of t-subsets of pos
        std::vector<int> comb(static_cast<std::size_t>(t));
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            if (++nodes_ > budget_.max_nodes)
                raise(errc::size_limit, "selection search exceeded its node budget");
            std::uint64_t mask = 0;
            for (const int ci : comb) mask |= std::uint64_t(1) << pos[static_cast<std::size_t>(ci)];
            masks_[static_cast<std::size_t>(u)] = mask;
            if (descend(depth + 1, t)) return true;
            // advance combination in colex order
            int i = 0;
            while (i < t) {
                const int limit = (i + 1 < t) ? comb[static_cast<std::size_t>(i) + 1] : avail;
                if (comb[static_cast<std::size_t>(i)] + 1 < limit) break;
                ++i;
            }
            if (i >= t) break;
            ++comb[static_cast<std::size_t>(i)];
            for (int r = 0; r < i; ++r) comb[static_cast<std::size_t>(r)] = r;
        }
        masks_[static_cast<std::size_t>(u)] = 0;
        return false;
    }

    const Cover& cover_;
    SolverBudget budget_;
    std::vector<int> order_;
    std::vector<int> position_;
    std::vector<std::vector<int>> inverse_;
    std::vector<std::uint64_t> masks_;
    std::uint64_t nodes_ = 0;
};

void assert_witness(const Cover& c, const Selection& s) {
    if (!is_quasi_independent(c, s))
        raise(errc::internal, "solver produced a selection spanning a cross-edge");
}

int uniform_upper_bound(const Cover& c) {
    int bound = c.k;
    for (const auto& m : c.maps) {
        int matched = 0;
        for (const int j : m)
            if (j >= 0) ++matched;
        bound = std::min(bound, c.k - (matched + 1) / 2);
    }
    return bound;
}

}  // namespace

std::optional<Selection> find_uniform_selection(const Cover& c, int t, const SolverBudget& budget) {
    const auto report = validate(c);
    if (!report.ok) raise(errc::invalid_parameter, "invalid cover: " + report.detail);
    UniformSearch search(c, budget);
    auto result = search.find(t);
    if (result) assert_witness(c, *result);
    return result;
}

std::optional<Selection> find_h_coloring(const Cover& c, const SolverBudget& budget) {
    return find_uniform_selection(c, 1, budget);
}

UniformResult max_uniform_fraction(const Cover& c, const SolverBudget& budget) {
    const auto report = validate(c);
    if (!report.ok) raise(errc::invalid_parameter, "invalid cover: " + report.detail);
    UniformSearch search(c, budget);
    UniformResult result;
    result.k = c.k;
    for (int t = uniform_upper_bound(c); t >= 0; --t) {
        auto witness = search.find(t);
        if (witness) {
            assert_witness(c, *witness);
            result.t = t;
            result.fraction = Rational(t, c.k);
            result.witness = std::move(*witness);
            return result;
        }
    }
    raise(errc::internal, "empty selection rejected");  // t = 0 always succeeds
}

ThetaResult theta_dp(const Graph& g, int k, const SolverBudget& budget) {
    CoverEnumerator covers(g, k, budget.max_covers);
    ThetaResult best;
    best.t = -1;
    Cover c;
    while (covers.next(c)) {
        UniformResult r = max_uniform_fraction(c, budget);
        if (best.t < 0 || r.t < best.t) {
            best.t = r.t;
            best.k = k;
            best.theta = r.fraction;
            best.worst_cover = c;
            best.witness = std::move(r.witness);
            if (best.t == 0) break;  // cannot get worse
        }
    }
    if (best.t < 0) raise(errc::internal, "cover enumeration produced no covers");
    return best;
}

std::vector<std::vector<int>> integer_partitions(int k) {
    std::vector<std::vector<int>> all;
    std::vector<int> current;
    // descending-lex enumeration: parts weakly decreasing
    auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            all.push_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    recurse(recurse, k, k);
    return all;
}

std::vector<int> permutation_with_cycle_type(const std::vector<int>& partition) {
    std::vector<int> sigma;
    int start = 0;
    for (const int part : partition) {
        if (part < 1) raise(errc::invalid_parameter, "partition parts must be positive");
        for (int i = 0; i < part; ++i) sigma.push_back(start + (i + 1) % part);
        start += part;
    }
    return sigma;
}

ThetaResult theta_dp_cycle(int n, int k, const SolverBudget& budget) {
    if (n < 4 || n % 2 != 0) raise(errc::invalid_parameter, "theta_dp_cycle needs even n >= 4");
    if (k < 1) raise(errc::invalid_parameter, "fold must be >= 1");
    ThetaResult best;
    best.t = -1;
    for (const auto& partition : integer_partitions(k)) {
        const Cover c = twisted_cycle_cover(n, k, permutation_with_cycle_type(partition));
        UniformResult r = max_uniform_fraction(c, budget);
        if (best.t < 0 || r.t < best.t) {
            best.t = r.t;
            best.k = k;
            best.theta = r.fraction;
            best.worst_cover = c;
            best.witness = std::move(r.witness);
            if (best.t == 0) break;
        }
    }
    return best;
}

std::optional<Selection> pendant_extension(const Cover& c, const Selection& partial,
                                           const std::vector<int>& order) {
    const int n = c.base.vertex_count();
    if (static_cast<int>(partial.sel.size()) != n)
        raise(errc::invalid_order, "partial selection size differs from vertex count");
    std::vector<bool> colored(static_cast<std::size_t>(n), false);
    int t = -1;
    for (int v = 0; v < n; ++v) {
        const int size = partial.size_at(v);
        if (size == 0) continue;
        colored[static_cast<std::size_t>(v)] = true;
        if (t < 0) t = size;
        if (size != t) raise(errc::invalid_order, "colored vertices must share one uniform size");
    }
    if (t < 0) t = 0;
    std::vector<bool> listed(static_cast<std::size_t>(n), false);
    for (const int v : order) {
        if (v < 0 || v >= n || colored[static_cast<std::size_t>(v)] ||
            listed[static_cast<std::size_t>(v)])
            raise(errc::invalid_order, "order must list each uncolored vertex exactly once");
        listed[static_cast<std::size_t>(v)] = true;
    }
    for (int v = 0; v < n; ++v)
        if (!colored[static_cast<std::size_t>(v)] && !listed[static_cast<std::size_t>(v)])
            raise(errc::invalid_order, "order must cover every uncolored vertex");
    if (!is_quasi_independent(c, partial))
        raise(errc::invalid_order, "partial selection already spans a cross-edge");

    Selection result = partial;
    result.k = c.k;
    for (const int u : order) {
        int relevant = -1;
        for (const auto [v, e] : c.base.adjacency(u)) {
            (void)e;
            if (!colored[static_cast<std::size_t>(v)]) continue;
            if (relevant >= 0)
                raise(errc::invalid_order,
                      "vertex " + std::to_string(u) + " has more than one colored-or-earlier neighbor");
            relevant = v;
        }
        std::vector<bool> blocked(static_cast<std::size_t>(c.k), false);
        if (relevant >= 0) {
            for (const int j : result.sel[static_cast<std::size_t>(relevant)]) {
                const int i = c.partner(relevant, u, j);  // index of L(u) matched to (relevant, j)
                if (i >= 0) blocked[static_cast<std::size_t>(i)] = true;
            }
        }
        auto& row = result.sel[static_cast<std::size_t>(u)];
        for (int i = 0; i < c.k && static_cast<int>(row.size()) < t; ++i)
            if (!blocked[static_cast<std::size_t>(i)]) row.push_back(i);
        if (static_cast<int>(row.size()) < t) return std::nullopt;
        colored[static_cast<std::size_t>(u)] = true;
    }
    assert_witness(c, result);
    return result;
}

}  // namespace fdp
