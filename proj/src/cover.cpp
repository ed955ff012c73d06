#include "fdp/cover.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <set>

#include <json.hpp>

#include "fdp/error.hpp"
#include "fdp/rng.hpp"

namespace fdp {

int Cover::partner(int u, int v, int i) const {
    const int e = base.edge_index(u, v);
    if (e < 0) raise(errc::invalid_parameter, "partner query on a non-edge");
    if (i < 0 || i >= k) raise(errc::invalid_parameter, "index out of range");
    const auto& m = maps[static_cast<std::size_t>(e)];
    if (u < v) return m[static_cast<std::size_t>(i)];
    for (int j = 0; j < k; ++j)
        if (m[static_cast<std::size_t>(j)] == i) return j;
    return -1;
}

bool Cover::all_perfect() const {
    for (const auto& m : maps)
        for (const int j : m)
            if (j < 0) return false;
    return true;
}

bool Selection::contains(int u, int i) const {
    const auto& s = sel[static_cast<std::size_t>(u)];
    return std::binary_search(s.begin(), s.end(), i);
}

CoverViolation validate(const Cover& c) {
    CoverViolation report;
    auto fail = [&](const std::string& condition, int u, int v, const std::string& detail) {
        report.ok = false;
        report.condition = condition;
        report.u = u;
        report.v = v;
        report.detail = detail;
        return report;
    };
    if (c.k < 1) return fail("shape", -1, -1, "fold k must be >= 1");
    if (static_cast<int>(c.maps.size()) != c.base.edge_count())
        return fail("C3", -1, -1, "matching count differs from base edge count");
    for (int e = 0; e < c.base.edge_count(); ++e) {
        const auto [u, v] = c.base.edges()[static_cast<std::size_t>(e)];
        const auto& m = c.maps[static_cast<std::size_t>(e)];
        if (static_cast<int>(m.size()) != c.k)
            return fail("shape", u, v, "matching must have one entry per list index");
        std::vector<bool> hit(static_cast<std::size_t>(c.k), false);
        for (const int j : m) {
            if (j < -1 || j >= c.k) return fail("shape", u, v, "partner index out of range");
            if (j >= 0) {
                if (hit[static_cast<std::size_t>(j)])
                    return fail("C4", u, v, "two indices matched to the same partner");
                hit[static_cast<std::size_t>(j)] = true;
            }
        }
    }
    return report;
}

Cover identity_cover(const Graph& g, int k) {
    if (k < 1) raise(errc::invalid_parameter, "fold must be >= 1");
    std::vector<int> identity(static_cast<std::size_t>(k));
    std::iota(identity.begin(), identity.end(), 0);
    Cover c;
    c.base = g;
    c.k = k;
    c.maps.assign(static_cast<std::size_t>(g.edge_count()), identity);
    return c;
}

namespace {

bool is_permutation(const std::vector<int>& sigma, int k) {
    if (static_cast<int>(sigma.size()) != k) return false;
    std::vector<bool> hit(static_cast<std::size_t>(k), false);
    for (const int j : sigma) {
        if (j < 0 || j >= k || hit[static_cast<std::size_t>(j)]) return false;
        hit[static_cast<std::size_t>(j)] = true;
    }
    return true;
}

}  // namespace

Cover twisted_cycle_cover(int n, int k, const std::vector<int>& sigma) {
    if (n < 4 || n % 2 != 0) raise(errc::invalid_parameter, "twisted cycle cover needs even n >= 4");
    if (!is_permutation(sigma, k)) raise(errc::invalid_parameter, "sigma is not a permutation of [k]");
    Cover c = identity_cover(make_cycle(n), k);
    const int closing = c.base.edge_index(0, n - 1);
    c.maps[static_cast<std::size_t>(closing)] = sigma;
    return c;
}

ListAssignmentCover from_list_assignment(const Graph& g, const std::vector<std::vector<int>>& lists) {
    if (static_cast<int>(lists.size()) != g.vertex_count())
        raise(errc::invalid_parameter, "one list per vertex required");
    if (lists.empty()) raise(errc::invalid_parameter, "empty assignment");
    const std::size_t k = lists.front().size();
    for (const auto& list : lists) {
        if (list.empty()) raise(errc::invalid_parameter, "every list must be nonempty");
        if (list.size() != k) raise(errc::unsupported, "unequal list sizes are not supported");
        std::set<int> distinct(list.begin(), list.end());
        if (distinct.size() != list.size())
            raise(errc::invalid_parameter, "duplicate color within a list");
    }
    ListAssignmentCover result;
    result.cover.base = g;
    result.cover.k = static_cast<int>(k);
    result.colors = lists;
    result.cover.maps.reserve(static_cast<std::size_t>(g.edge_count()));
    for (const auto [u, v] : g.edges()) {
        std::vector<int> m(k, -1);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (lists[static_cast<std::size_t>(u)][i] == lists[static_cast<std::size_t>(v)][j]) {
                    m[i] = static_cast<int>(j);
                    break;
                }
        result.cover.maps.push_back(std::move(m));
    }
    return result;
}

namespace {

struct BfsForest {
    // parent[v] = (parent vertex, edge index), or (-1, -1) for roots.
    std::vector<std::pair<int, int>> parent;
    std::vector<int> order;        // BFS visit order
    std::vector<bool> tree_edge;   // per edge index
};

// Deterministic forest: roots are the lowest-numbered vertices of their
// components, queues expand in adjacency (sorted) order.
BfsForest bfs_forest(const Graph& g) {
    const int n = g.vertex_count();
    BfsForest forest;
    forest.parent.assign(static_cast<std::size_t>(n), {-1, -1});
    forest.tree_edge.assign(static_cast<std::size_t>(g.edge_count()), false);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int root = 0; root < n; ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        seen[static_cast<std::size_t>(root)] = true;
        std::queue<int> queue;
        queue.push(root);
        forest.order.push_back(root);
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop();
            for (const auto [y, e] : g.adjacency(x)) {
                if (seen[static_cast<std::size_t>(y)]) continue;
                seen[static_cast<std::size_t>(y)] = true;
                forest.parent[static_cast<std::size_t>(y)] = {x, e};
                forest.tree_edge[static_cast<std::size_t>(e)] = true;
                forest.order.push_back(y);
                queue.push(y);
            }
        }
    }
    return forest;
}

}  // namespace

Cover normalize(const Cover& c) {
    const auto report = validate(c);
    if (!report.ok) raise(errc::invalid_parameter, "normalize on invalid cover: " + report.detail);
    if (!c.all_perfect())
        raise(errc::needs_perfect_matchings, "normalize requires full permutations on every edge");
    const int k = c.k;
    const auto forest = bfs_forest(c.base);
    // relabel[v][old index] = new index within L(v)
    std::vector<std::vector<int>> relabel(static_cast<std::size_t>(c.base.vertex_count()));
    std::vector<int> identity(static_cast<std::size_t>(k));
    std::iota(identity.begin(), identity.end(), 0);
    for (const int v : forest.order) {
        const auto [p, e] = forest.parent[static_cast<std::size_t>(v)];
        if (p < 0) {
            relabel[static_cast<std::size_t>(v)] = identity;
            continue;
        }
        const auto& m = c.maps[static_cast<std::size_t>(e)];
        const auto& rp = relabel[static_cast<std::size_t>(p)];
        std::vector<int> rv(static_cast<std::size_t>(k));
        if (p < v) {
            // stored map runs p -> v; identity needs rv(m(i)) = rp(i)
            for (int i = 0; i < k; ++i)
                rv[static_cast<std::size_t>(m[static_cast<std::size_t>(i)])] =
                    rp[static_cast<std::size_t>(i)];
        } else {
            // stored map runs v -> p; identity needs rv(j) = rp(m(j))
            for (int j = 0; j < k; ++j)
                rv[static_cast<std::size_t>(j)] =
                    rp[static_cast<std::size_t>(m[static_cast<std::size_t>(j)])];
        }
        relabel[static_cast<std::size_t>(v)] = std::move(rv);
    }
    Cover out;
    out.base = c.base;
    out.k = k;
    out.maps.resize(c.maps.size());
    for (int e = 0; e < c.base.edge_count(); ++e) {
        const auto [u, v] = c.base.edges()[static_cast<std::size_t>(e)];
        const auto& m = c.maps[static_cast<std::size_t>(e)];
        const auto& ru = relabel[static_cast<std::size_t>(u)];
        const auto& rv = relabel[static_cast<std::size_t>(v)];
        std::vector<int> nm(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            nm[static_cast<std::size_t>(ru[static_cast<std::size_t>(i)])] =
                rv[static_cast<std::size_t>(m[static_cast<std::size_t>(i)])];
        out.maps[static_cast<std::size_t>(e)] = std::move(nm);
    }
    return out;
}

Cover random_cover(const Graph& g, int k, std::uint64_t seed) {
    if (k < 1) raise(errc::invalid_parameter, "fold must be >= 1");
    Cover c;
    c.base = g;
    c.k = k;
    c.maps.reserve(static_cast<std::size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) {
        Rng rng(derive_seed(seed, stream::cover_edge, static_cast<std::uint64_t>(e)));
        c.maps.push_back(rng.permutation(k));
    }
    return c;
}

namespace {

std::uint64_t saturating_pow(std::uint64_t base, int exp) {
    std::uint64_t result = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        result *= base;
    }
    return result;
}

std::uint64_t factorial_u64(int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) {
        if (f > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(i))
            return std::numeric_limits<std::uint64_t>::max();
        f *= static_cast<std::uint64_t>(i);
    }
    return f;
}

}  // namespace

CoverEnumerator::CoverEnumerator(const Graph& g, int k, std::uint64_t max_covers) : base_(g), k_(k) {
    if (k < 1) raise(errc::invalid_parameter, "fold must be >= 1");
    const auto forest = bfs_forest(g);
    for (int e = 0; e < g.edge_count(); ++e)
        if (!forest.tree_edge[static_cast<std::size_t>(e)]) nontree_edges_.push_back(e);
    total_ = saturating_pow(factorial_u64(k), static_cast<int>(nontree_edges_.size()));
    if (total_ > max_covers)
        raise(errc::size_limit, "cover enumeration needs " + std::to_string(total_) +
                                    " covers, over the budget of " + std::to_string(max_covers));
    std::vector<int> identity(static_cast<std::size_t>(k));
    std::iota(identity.begin(), identity.end(), 0);
    perms_.assign(nontree_edges_.size(), identity);
}

bool CoverEnumerator::next(Cover& out) {
    if (done_) return false;
    if (!first_) {
        // lexicographic odometer, last edge fastest
        std::size_t pos = perms_.size();
        while (pos > 0) {
            if (std::next_permutation(perms_[pos - 1].begin(), perms_[pos - 1].end())) break;
            --pos;  // wrapped back to identity, carry on
        }
        if (pos == 0) {
            done_ = true;
            return false;
        }
    }
    first_ = false;
    out = identity_cover(base_, k_);
    for (std::size_t i = 0; i < nontree_edges_.size(); ++i)
        out.maps[static_cast<std::size_t>(nontree_edges_[i])] = perms_[i];
    return true;
}

std::string cover_to_json(const Cover& c) {
    nlohmann::json j;
    j["n"] = c.base.vertex_count();
    j["k"] = c.k;
    nlohmann::json edges = nlohmann::json::array();
    for (int e = 0; e < c.base.edge_count(); ++e) {
        const auto [u, v] = c.base.edges()[static_cast<std::size_t>(e)];
        nlohmann::json entry;
        entry["u"] = u;
        entry["v"] = v;
        entry["map"] = c.maps[static_cast<std::size_t>(e)];
        edges.push_back(std::move(entry));
    }
    j["edges"] = std::move(edges);
    return j.dump();
}

Cover cover_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        raise(errc::bad_format, std::string("cover JSON: ") + e.what());
    }
    try {
        const int n = j.at("n").get<int>();
        const int k = j.at("k").get<int>();
        std::vector<std::pair<int, int>> edges;
        std::vector<std::pair<std::pair<int, int>, std::vector<int>>> entries;
        for (const auto& entry : j.at("edges")) {
            const int u = entry.at("u").get<int>();
            const int v = entry.at("v").get<int>();
            if (u >= v) raise(errc::bad_format, "cover JSON edges must have u < v");
            edges.emplace_back(u, v);
            entries.push_back({{u, v}, entry.at("map").get<std::vector<int>>()});
        }
        Cover c;
        c.base = Graph(n, edges);
        c.k = k;
        c.maps.assign(static_cast<std::size_t>(c.base.edge_count()), {});
        for (auto& [uv, m] : entries) {
            const int e = c.base.edge_index(uv.first, uv.second);
            c.maps[static_cast<std::size_t>(e)] = std::move(m);
        }
        const auto report = validate(c);
        if (!report.ok)
            raise(errc::bad_format, "cover JSON violates " + report.condition + ": " + report.detail);
        return c;
    } catch (const nlohmann::json::exception& e) {
        raise(errc::bad_format, std::string("cover JSON: ") + e.what());
    } catch (const error&) {
        throw;
    }
}

std::string selection_to_json(const Selection& s) {
    nlohmann::json j = nlohmann::json::object();
    for (std::size_t u = 0; u < s.sel.size(); ++u) j[std::to_string(u)] = s.sel[u];
    return j.dump();
}

}  // namespace fdp
