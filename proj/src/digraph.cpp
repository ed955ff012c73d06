#include "fdp/digraph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

#include "fdp/error.hpp"

namespace fdp {

Digraph::Digraph(int n, std::vector<std::pair<int, int>> arc_list) : n_(n), arcs_(std::move(arc_list)) {
    if (n < 0) raise(errc::invalid_parameter, "negative vertex count");
    std::sort(arcs_.begin(), arcs_.end());
    if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end())
        raise(errc::invalid_parameter, "duplicate arc");
    out_.resize(static_cast<std::size_t>(n));
    in_.resize(static_cast<std::size_t>(n));
    for (const auto [u, v] : arcs_) {
        if (u == v) raise(errc::invalid_parameter, "self-loop arc");
        if (u < 0 || v < 0 || u >= n || v >= n)
            raise(errc::invalid_parameter, "arc endpoint out of range");
        if (std::binary_search(arcs_.begin(), arcs_.end(), std::make_pair(v, u)))
            raise(errc::invalid_parameter, "both directions of an edge present");
        out_[static_cast<std::size_t>(u)].push_back(v);
        in_[static_cast<std::size_t>(v)].push_back(u);
    }
}

const std::vector<int>& Digraph::out_neighbors(int u) const {
    if (u < 0 || u >= n_) raise(errc::invalid_parameter, "vertex out of range");
    return out_[static_cast<std::size_t>(u)];
}

const std::vector<int>& Digraph::in_neighbors(int u) const {
    if (u < 0 || u >= n_) raise(errc::invalid_parameter, "vertex out of range");
    return in_[static_cast<std::size_t>(u)];
}

int Digraph::max_out_degree() const {
    int best = 0;
    for (int u = 0; u < n_; ++u) best = std::max(best, out_degree(u));
    return best;
}

bool Digraph::has_arc(int u, int v) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), std::make_pair(u, v));
}

Graph Digraph::underlying() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(arcs_.size());
    for (const auto [u, v] : arcs_) edges.emplace_back(u, v);
    return Graph(n_, std::move(edges));
}

bool Digraph::is_orientation_of(const Graph& g) const {
    if (n_ != g.vertex_count() || static_cast<int>(arcs_.size()) != g.edge_count()) return false;
    for (const auto [u, v] : arcs_)
        if (!g.has_edge(u, v)) return false;
    return true;
}

std::optional<std::vector<int>> topological_order(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<int> indegree(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        indegree[static_cast<std::size_t>(v)] = static_cast<int>(d.in_neighbors(v).size());
    std::queue<int> ready;
    for (int v = 0; v < n; ++v)
        if (indegree[static_cast<std::size_t>(v)] == 0) ready.push(v);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    while (!ready.empty()) {
        const int u = ready.front();
        ready.pop();
        order.push_back(u);
        for (const int w : d.out_neighbors(u))
            if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push(w);
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return order;
}

std::vector<int> reachable_set(const Digraph& d, int u, Direction dir, bool closed) {
    if (u < 0 || u >= d.vertex_count()) raise(errc::invalid_parameter, "vertex out of range");
    std::vector<bool> seen(static_cast<std::size_t>(d.vertex_count()), false);
    std::queue<int> queue;
    queue.push(u);
    // u itself is only included when reachable by a positive-length walk or
    // when the closed variant is requested.
    std::vector<int> result;
    bool saw_u_again = false;
    seen[static_cast<std::size_t>(u)] = true;
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop();
        const auto& next = dir == Direction::forward ? d.out_neighbors(x) : d.in_neighbors(x);
        for (const int y : next) {
            if (y == u) saw_u_again = true;
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                result.push_back(y);
                queue.push(y);
            }
        }
    }
    if (closed || saw_u_again) result.push_back(u);
    std::sort(result.begin(), result.end());
    return result;
}

std::optional<Digraph> degeneracy_orientation(const Graph& g, int d) {
    if (d < 0) raise(errc::invalid_parameter, "degeneracy bound must be >= 0");
    const int n = g.vertex_count();
    std::vector<int> degree(static_cast<std::size_t>(n));
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v) degree[static_cast<std::size_t>(v)] = g.degree(v);
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(static_cast<std::size_t>(g.edge_count()));
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (removed[static_cast<std::size_t>(v)]) continue;
            if (pick < 0 || degree[static_cast<std::size_t>(v)] < degree[static_cast<std::size_t>(pick)])
                pick = v;
        }
        if (degree[static_cast<std::size_t>(pick)] > d) return std::nullopt;
        removed[static_cast<std::size_t>(pick)] = true;
        for (const auto [w, e] : g.adjacency(pick)) {
            (void)e;
            if (removed[static_cast<std::size_t>(w)]) continue;
            arcs.emplace_back(pick, w);
            --degree[static_cast<std::size_t>(w)];
        }
    }
    return Digraph(n, std::move(arcs));
}

namespace {

using Bitset = std::vector<std::uint64_t>;

inline void set_bit(Bitset& bits, int i) {
    bits[static_cast<std::size_t>(i) >> 6] |= std::uint64_t(1) << (i & 63);
}

inline bool test_bit(const Bitset& bits, int i) {
    return bits[static_cast<std::size_t>(i) >> 6] >> (i & 63) & 1;
}

inline void or_into(Bitset& dst, const Bitset& src) {
    for (std::size_t w = 0; w < dst.size(); ++w) dst[w] |= src[w];
}

// Shortest even-length directed u->v path, via BFS over (vertex, parity).
std::vector<int> even_path_witness(const Digraph& d, int u, int v) {
    const int n = d.vertex_count();
    std::vector<std::pair<int, int>> pred(static_cast<std::size_t>(2 * n), {-1, -1});
    std::vector<bool> seen(static_cast<std::size_t>(2 * n), false);
    std::queue<int> queue;
    const auto id = [n](int vertex, int parity) { return vertex * 2 + parity; };
    (void)n;
    seen[static_cast<std::size_t>(id(u, 0))] = true;
    queue.push(id(u, 0));
    while (!queue.empty()) {
        const int state = queue.front();
        queue.pop();
        const int x = state / 2;
        const int parity = state % 2;
        for (const int y : d.out_neighbors(x)) {
            const int next = id(y, 1 - parity);
            if (seen[static_cast<std::size_t>(next)]) continue;
            seen[static_cast<std::size_t>(next)] = true;
            pred[static_cast<std::size_t>(next)] = {x, parity};
            queue.push(next);
            if (y == v && 1 - parity == 0) {
                // Acyclicity keeps u out of the interior, so walking the
                // predecessor chain until (u, 0) terminates.
                std::vector<int> path;
                int cx = y;
                int cp = 0;
                while (cx != u || cp != 0) {
                    path.push_back(cx);
                    const auto [px, pp] = pred[static_cast<std::size_t>(id(cx, cp))];
                    cx = px;
                    cp = pp;
                }
                path.push_back(u);
                std::reverse(path.begin(), path.end());
                return path;
            }
        }
    }
    return {};
}

}  // namespace

ParityCheckResult check_parity_condition(const Digraph& d) {
    const auto order = topological_order(d);
    if (!order) raise(errc::not_acyclic, "parity condition requires an acyclic digraph");
    const int n = d.vertex_count();
    const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
    // odd[u] / even[u]: vertices reachable from u by odd / by even (>= 2) paths.
    std::vector<Bitset> odd(static_cast<std::size_t>(n), Bitset(words, 0));
    std::vector<Bitset> even(static_cast<std::size_t>(n), Bitset(words, 0));
    for (auto it = order->rbegin(); it != order->rend(); ++it) {
        const int u = *it;
        for (const int w : d.out_neighbors(u)) {
            set_bit(odd[static_cast<std::size_t>(u)], w);
            or_into(odd[static_cast<std::size_t>(u)], even[static_cast<std::size_t>(w)]);
            or_into(even[static_cast<std::size_t>(u)], odd[static_cast<std::size_t>(w)]);
        }
    }
    ParityCheckResult result;
    for (const auto [u, v] : d.arcs()) {
        if (test_bit(even[static_cast<std::size_t>(u)], v)) {
            result.pass = false;
            result.u = u;
            result.v = v;
            result.even_path = even_path_witness(d, u, v);
            return result;
        }
    }
    return result;
}

std::uint64_t count_directed_paths(const Digraph& d, int u, int v) {
    const auto order = topological_order(d);
    if (!order) raise(errc::not_acyclic, "path counting requires an acyclic digraph");
    if (u < 0 || v < 0 || u >= d.vertex_count() || v >= d.vertex_count())
        raise(errc::invalid_parameter, "vertex out of range");
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> count(static_cast<std::size_t>(d.vertex_count()), 0);
    count[static_cast<std::size_t>(u)] = 1;  // the empty path
    for (const int x : *order) {
        const std::uint64_t cx = count[static_cast<std::size_t>(x)];
        if (cx == 0) continue;
        for (const int y : d.out_neighbors(x)) {
            auto& cy = count[static_cast<std::size_t>(y)];
            cy = (cy > kMax - cx) ? kMax : cy + cx;
        }
    }
    return count[static_cast<std::size_t>(v)];
}

Digraph parse_digraph_text(const std::string& text) {
    std::istringstream in(text);
    long long n = -1;
    long long m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0)
        raise(errc::bad_format, "arc list must start with 'n m'");
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u;
        long long v;
        if (!(in >> u >> v)) raise(errc::bad_format, "arc list ended before all arcs were read");
        arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string trailing;
    if (in >> trailing) raise(errc::bad_format, "trailing content after arc list");
    try {
        return Digraph(static_cast<int>(n), std::move(arcs));
    } catch (const error& e) {
        raise(errc::bad_format, std::string("invalid digraph: ") + e.what());
    }
}

std::string digraph_to_text(const Digraph& d) {
    std::ostringstream out;
    out << d.vertex_count() << ' ' << d.arc_count() << '\n';
    for (const auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace fdp
