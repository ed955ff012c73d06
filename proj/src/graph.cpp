#include "fdp/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <queue>
#include <sstream>

#include "fdp/error.hpp"

namespace fdp {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 0) raise(errc::invalid_parameter, "negative vertex count");
    edges_.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u == v) raise(errc::invalid_parameter, "self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            raise(errc::invalid_parameter, "edge endpoint out of range");
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        raise(errc::invalid_parameter, "duplicate edge");
    adj_.resize(static_cast<std::size_t>(n));
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        const auto [u, v] = edges_[static_cast<std::size_t>(e)];
        adj_[static_cast<std::size_t>(u)].emplace_back(v, e);
        adj_[static_cast<std::size_t>(v)].emplace_back(u, e);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
}

const std::vector<std::pair<int, int>>& Graph::adjacency(int u) const {
    if (u < 0 || u >= n_) raise(errc::invalid_parameter, "vertex out of range");
    return adj_[static_cast<std::size_t>(u)];
}

int Graph::edge_index(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return -1;
    if (u > v) std::swap(u, v);
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges_.begin());
}

Graph make_cycle(int n) {
    if (n < 3) raise(errc::invalid_parameter, "cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

Graph make_path(int n) {
    if (n < 1) raise(errc::invalid_parameter, "path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) raise(errc::invalid_parameter, "complete bipartite needs a, b >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph(a + b, std::move(edges));
}

Graph make_theta(int len1, int len2, int len3) {
    const int lens[3] = {len1, len2, len3};
    int ones = 0;
    for (int len : lens) {
        if (len < 1) raise(errc::invalid_parameter, "theta path length must be >= 1");
        if (len == 1) ++ones;
    }
    if (ones > 1) raise(errc::invalid_parameter, "theta graph would have a duplicate hub edge");
    std::vector<std::pair<int, int>> edges;
    int next = 2;
    for (int len : lens) {
        int prev = 0;
        for (int step = 1; step < len; ++step) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, 1);
    }
    return Graph(next, std::move(edges));
}

Graph make_unicyclic(int cycle_n, const std::vector<int>& pendants) {
    if (cycle_n < 3) raise(errc::invalid_parameter, "unicyclic cycle needs n >= 3");
    if (static_cast<int>(pendants.size()) > cycle_n)
        raise(errc::invalid_parameter, "more pendant slots than cycle vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < cycle_n; ++i) edges.emplace_back(i, (i + 1) % cycle_n);
    int next = cycle_n;
    for (int i = 0; i < static_cast<int>(pendants.size()); ++i) {
        if (pendants[static_cast<std::size_t>(i)] < 0)
            raise(errc::invalid_parameter, "negative pendant count");
        for (int p = 0; p < pendants[static_cast<std::size_t>(i)]; ++p)
            edges.emplace_back(i, next++);
    }
    return Graph(next, std::move(edges));
}

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string token;
    std::stringstream ss(s);
    while (std::getline(ss, token, ',')) {
        try {
            std::size_t pos = 0;
            const int value = std::stoi(token, &pos);
            if (pos != token.size()) throw std::invalid_argument(token);
            out.push_back(value);
        } catch (const std::exception&) {
            raise(errc::invalid_parameter, "bad integer in generator spec: '" + token + "'");
        }
    }
    return out;
}

}  // namespace

Graph make_graph(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        raise(errc::invalid_parameter, "generator spec must look like kind:params");
    const std::string kind = spec.substr(0, colon);
    const std::vector<int> args = parse_int_list(spec.substr(colon + 1));
    auto want = [&](std::size_t lo, std::size_t hi) {
        if (args.size() < lo || args.size() > hi)
            raise(errc::invalid_parameter, "wrong parameter count for generator '" + kind + "'");
    };
    if (kind == "cycle") {
        want(1, 1);
        return make_cycle(args[0]);
    }
    if (kind == "path") {
        want(1, 1);
        return make_path(args[0]);
    }
    if (kind == "complete_bipartite") {
        want(2, 2);
        return make_complete_bipartite(args[0], args[1]);
    }
    if (kind == "theta") {
        want(3, 3);
        return make_theta(args[0], args[1], args[2]);
    }
    if (kind == "unicyclic") {
        want(1, 64);
        return make_unicyclic(args[0], std::vector<int>(args.begin() + 1, args.end()));
    }
    raise(errc::invalid_parameter, "unknown generator kind '" + kind + "'");
}

std::optional<int> girth(const Graph& g) {
    // BFS from every vertex; the minimum over all non-tree edge candidates
    // dist[x] + dist[y] + 1 is the exact girth.
    const int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent_edge(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent_edge.begin(), parent_edge.end(), -1);
        std::queue<int> queue;
        dist[static_cast<std::size_t>(s)] = 0;
        queue.push(s);
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop();
            for (const auto [y, e] : g.adjacency(x)) {
                if (e == parent_edge[static_cast<std::size_t>(x)]) continue;
                if (dist[static_cast<std::size_t>(y)] < 0) {
                    dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                    parent_edge[static_cast<std::size_t>(y)] = e;
                    queue.push(y);
                } else {
                    const int cand =
                        dist[static_cast<std::size_t>(x)] + dist[static_cast<std::size_t>(y)] + 1;
                    if (best < 0 || cand < best) best = cand;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

namespace {

// Greedy clique around high-degree seeds; any clique is a valid lower bound.
int clique_lower_bound(const Graph& g, const std::vector<std::uint64_t>& adj_bits) {
    const int n = g.vertex_count();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    int best = n > 0 ? 1 : 0;
    for (const int seed : order) {
        std::uint64_t common = adj_bits[static_cast<std::size_t>(seed)];
        int size = 1;
        while (common != 0) {
            int pick = -1;
            int pick_deg = -1;
            for (std::uint64_t rest = common; rest != 0; rest &= rest - 1) {
                const int v = std::countr_zero(rest);
                const int deg = std::popcount(common & adj_bits[static_cast<std::size_t>(v)]);
                if (deg > pick_deg) {
                    pick = v;
                    pick_deg = deg;
                }
            }
            ++size;
            common &= adj_bits[static_cast<std::size_t>(pick)];
            common &= ~(std::uint64_t(1) << pick);
        }
        best = std::max(best, size);
    }
    return best;
}

int dsatur_upper_bound(const Graph& g, std::vector<int>& coloring_out) {
    const int n = g.vertex_count();
    coloring_out.assign(static_cast<std::size_t>(n), -1);
    std::vector<std::uint64_t> saturation(static_cast<std::size_t>(n), 0);
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (coloring_out[static_cast<std::size_t>(v)] >= 0) continue;
            if (pick < 0) pick = v;
            const int sat_v = std::popcount(saturation[static_cast<std::size_t>(v)]);
            const int sat_p = std::popcount(saturation[static_cast<std::size_t>(pick)]);
            if (sat_v > sat_p || (sat_v == sat_p && g.degree(v) > g.degree(pick))) pick = v;
        }
        int color = 0;
        while (saturation[static_cast<std::size_t>(pick)] >> color & 1) ++color;
        coloring_out[static_cast<std::size_t>(pick)] = color;
        used = std::max(used, color + 1);
        for (const auto [w, e] : g.adjacency(pick)) {
            (void)e;
            saturation[static_cast<std::size_t>(w)] |= std::uint64_t(1) << color;
        }
    }
    return used;
}

bool colorable_with(const Graph& g, const std::vector<std::uint64_t>& adj_bits, int k) {
    const int n = g.vertex_count();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    // Backtracking with a cap on introducing new colors (color symmetry).
    struct Frame {
        int next_color;
    };
    std::vector<Frame> stack(static_cast<std::size_t>(n), Frame{0});
    int depth = 0;
    std::vector<int> highest(static_cast<std::size_t>(n) + 1, -1);
    while (true) {
        if (depth == n) return true;
        const int v = order[static_cast<std::size_t>(depth)];
        const int cap = std::min(k - 1, (depth == 0 ? -1 : highest[static_cast<std::size_t>(depth)]) + 1);
        int c = stack[static_cast<std::size_t>(depth)].next_color;
        bool advanced = false;
        for (; c <= cap; ++c) {
            bool clash = false;
            for (std::uint64_t rest = adj_bits[static_cast<std::size_t>(v)]; rest != 0;
                 rest &= rest - 1) {
                const int w = std::countr_zero(rest);
                if (color[static_cast<std::size_t>(w)] == c) {
                    clash = true;
                    break;
                }
            }
            if (!clash) {
                color[static_cast<std::size_t>(v)] = c;
                stack[static_cast<std::size_t>(depth)].next_color = c + 1;
                highest[static_cast<std::size_t>(depth) + 1] =
                    std::max(depth == 0 ? -1 : highest[static_cast<std::size_t>(depth)], c);
                ++depth;
                if (depth < n) stack[static_cast<std::size_t>(depth)].next_color = 0;
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            if (depth == 0) return false;
            color[static_cast<std::size_t>(v)] = -1;
            --depth;
            color[static_cast<std::size_t>(order[static_cast<std::size_t>(depth)])] = -1;
        }
    }
}

}  // namespace

int chromatic_number(const Graph& g, const ChromaticOptions& opts) {
    const int n = g.vertex_count();
    if (n > opts.max_vertices || n > 64)
        raise(errc::size_limit, "chromatic_number limited to " +
                                    std::to_string(std::min(opts.max_vertices, 64)) + " vertices");
    if (n == 0) return 0;
    std::vector<std::uint64_t> adj_bits(static_cast<std::size_t>(n), 0);
    for (const auto [u, v] : g.edges()) {
        adj_bits[static_cast<std::size_t>(u)] |= std::uint64_t(1) << v;
        adj_bits[static_cast<std::size_t>(v)] |= std::uint64_t(1) << u;
    }
    std::vector<int> greedy;
    const int upper = dsatur_upper_bound(g, greedy);
    const int lower = clique_lower_bound(g, adj_bits);
    for (int k = lower; k < upper; ++k) {
        if (colorable_with(g, adj_bits, k)) return k;
    }
    return upper;
}

Rational max_average_degree(const Graph& g, const MadOptions& opts) {
    const int n = g.vertex_count();
    if (n == 0) raise(errc::invalid_parameter, "max_average_degree of empty graph");
    if (n > opts.max_vertices || n > 22)
        raise(errc::size_limit, "max_average_degree limited to " +
                                    std::to_string(std::min(opts.max_vertices, 22)) + " vertices");
    std::vector<std::uint64_t> adj_bits(static_cast<std::size_t>(n), 0);
    for (const auto [u, v] : g.edges()) {
        adj_bits[static_cast<std::size_t>(u)] |= std::uint64_t(1) << v;
        adj_bits[static_cast<std::size_t>(v)] |= std::uint64_t(1) << u;
    }
    // edge_count[S] built incrementally from S minus its lowest vertex.
    const std::size_t total = std::size_t(1) << n;
    std::vector<std::uint32_t> edge_count(total, 0);
    long long best_num = 0;  // 2|E(G[U])|
    long long best_den = 1;  // |U|
    for (std::size_t mask = 1; mask < total; ++mask) {
        const int low = std::countr_zero(mask);
        const std::size_t rest = mask & (mask - 1);
        edge_count[mask] =
            edge_count[rest] +
            static_cast<std::uint32_t>(std::popcount(adj_bits[static_cast<std::size_t>(low)] & rest));
        const long long num = 2LL * edge_count[mask];
        const long long den = std::popcount(mask);
        if (num * best_den > best_num * den) {
            best_num = num;
            best_den = den;
        }
    }
    return make_rational(best_num, best_den);
}

Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    long long n = -1;
    long long m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0)
        raise(errc::bad_format, "graph text must start with 'n m'");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u;
        long long v;
        if (!(in >> u >> v)) raise(errc::bad_format, "graph text ended before all edges were read");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string trailing;
    if (in >> trailing) raise(errc::bad_format, "trailing content after edge list");
    try {
        return Graph(static_cast<int>(n), std::move(edges));
    } catch (const error& e) {
        raise(errc::bad_format, std::string("invalid graph: ") + e.what());
    }
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace fdp
