#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "ramsey/hypergraph.hpp"

namespace ramsey {

struct ForestDecomposition {
    std::vector<std::vector<int>> forests;  // edge indices, each set acyclic
    int count = 0;
    // a subgraph with ceil(|E|/(|V|-1)) = count, certifying optimality
    std::optional<Hypergraph> witness;
};

namespace detail {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] =
                parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[static_cast<std::size_t>(b)] = a;
        return true;
    }

private:
    std::vector<int> parent_;
};

}  // namespace detail

namespace detail {

/// Connected component maximizing ceil(|E|/(|V|-1)), vertices relabeled densely.
inline Hypergraph densest_component(const Hypergraph& g) {
    UnionFind uf(g.vertex_count());
    for (const auto& e : g.edges()) uf.unite(e[0], e[1]);
    std::map<int, std::vector<Edge>> comp_edges;
    std::map<int, std::set<int>> comp_verts;
    for (const auto& e : g.edges()) {
        int root = uf.find(e[0]);
        comp_edges[root].push_back(e);
        comp_verts[root].insert(e.begin(), e.end());
    }
    int best_root = -1;
    double best = -1;
    for (auto& [root, edges] : comp_edges) {
        double density = static_cast<double>(edges.size()) /
                         static_cast<double>(comp_verts[root].size() - 1);
        if (density > best) {
            best = density;
            best_root = root;
        }
    }
    if (best_root == -1) return Hypergraph(2, 0, {});
    std::map<int, int> relabel;
    int next = 0;
    for (int v : comp_verts[best_root]) relabel[v] = next++;
    std::vector<Edge> edges;
    for (auto& e : comp_edges[best_root])
        edges.push_back({std::min(relabel[e[0]], relabel[e[1]]),
                         std::max(relabel[e[0]], relabel[e[1]])});
    return Hypergraph(2, next, edges);
}

}  // namespace detail

// Exact graph arboricity by incremental matroid-partition augmentation:
// every edge is inserted via a shortest exchange path; when no path exists
// the set of reachable edges is a subgraph denser than the current forest
// count, which justifies opening a new forest and doubles as the
// Nash-Williams witness.
inline ForestDecomposition arboricity_decompose(const Hypergraph& g) {
    if (g.k() != 2) throw std::invalid_argument("arboricity expects a 2-graph");
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<int> assigned(static_cast<std::size_t>(m), -1);
    int num_forests = 0;
    ForestDecomposition result;
    std::vector<int> last_reachable;

    auto forest_edges = [&](int f) {
        std::vector<int> out;
        for (int i = 0; i < m; ++i)
            if (assigned[static_cast<std::size_t>(i)] == f) out.push_back(i);
        return out;
    };

    // path between the endpoints of `edge` inside forest f, as edge indices;
    // empty when the endpoints are disconnected there
    auto forest_path = [&](int f, int edge) {
        std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
        for (int i : forest_edges(f)) {
            const auto& e = g.edge(i);
            adj[static_cast<std::size_t>(e[0])].push_back({e[1], i});
            adj[static_cast<std::size_t>(e[1])].push_back({e[0], i});
        }
        const int src = g.edge(edge)[0], dst = g.edge(edge)[1];
        std::vector<int> via_edge(static_cast<std::size_t>(n), -1), prev(static_cast<std::size_t>(n), -1);
        std::deque<int> queue{src};
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        seen[static_cast<std::size_t>(src)] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (u == dst) break;
            for (auto [w, i] : adj[static_cast<std::size_t>(u)]) {
                if (seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = 1;
                prev[static_cast<std::size_t>(w)] = u;
                via_edge[static_cast<std::size_t>(w)] = i;
                queue.push_back(w);
            }
        }
        std::vector<int> path;
        if (!seen[static_cast<std::size_t>(dst)]) return path;
        for (int u = dst; u != src; u = prev[static_cast<std::size_t>(u)])
            path.push_back(via_edge[static_cast<std::size_t>(u)]);
        return path;
    };

    auto independent_in = [&](int f, int edge) {
        detail::UnionFind uf(n);
        for (int i : forest_edges(f)) uf.unite(g.edge(i)[0], g.edge(i)[1]);
        return uf.find(g.edge(edge)[0]) != uf.find(g.edge(edge)[1]);
    };

    auto try_augment = [&](int x) -> bool {
        std::vector<int> parent(static_cast<std::size_t>(m), -2);
        std::vector<int> slot(static_cast<std::size_t>(m), -1);
        std::deque<int> queue{x};
        parent[static_cast<std::size_t>(x)] = -1;
        int goal = -1;
        while (!queue.empty() && goal == -1) {
            int y = queue.front();
            queue.pop_front();
            for (int f = 0; f < num_forests; ++f) {
                if (assigned[static_cast<std::size_t>(y)] == f) continue;
                if (independent_in(f, y)) {
                    slot[static_cast<std::size_t>(y)] = f;
                    goal = y;
                    break;
                }
                for (int z : forest_path(f, y)) {
                    if (parent[static_cast<std::size_t>(z)] != -2) continue;
                    parent[static_cast<std::size_t>(z)] = y;
                    queue.push_back(z);
                }
            }
        }
        if (goal == -1) {
            last_reachable.clear();
            for (int i = 0; i < m; ++i)
                if (parent[static_cast<std::size_t>(i)] != -2) last_reachable.push_back(i);
            return false;
        }
        // walk back: each element moves into the forest of the one it evicts
        int dest = slot[static_cast<std::size_t>(goal)];
        for (int y = goal; y != -1; y = parent[static_cast<std::size_t>(y)]) {
            int previous = assigned[static_cast<std::size_t>(y)];
            assigned[static_cast<std::size_t>(y)] = dest;
            dest = previous;
        }
        return true;
    };

    for (int x = 0; x < m; ++x) {
        while (!(num_forests > 0 && try_augment(x))) {
            if (num_forests == 0) last_reachable = {x};
            // the reachable edges satisfy |E| > num_forests * rank, so some
            // connected component is denser than the current forest count
            std::set<int> verts;
            std::vector<Edge> edges;
            for (int i : last_reachable) {
                edges.push_back(g.edge(i));
                verts.insert(g.edge(i)[0]);
                verts.insert(g.edge(i)[1]);
            }
            std::map<int, int> relabel;
            int next = 0;
            for (int v : verts) relabel[v] = next++;
            for (auto& e : edges)
                e = {std::min(relabel[e[0]], relabel[e[1]]), std::max(relabel[e[0]], relabel[e[1]])};
            result.witness = detail::densest_component(Hypergraph(2, next, edges));
            ++num_forests;
        }
    }

    result.count = num_forests;
    result.forests.resize(static_cast<std::size_t>(num_forests));
    for (int i = 0; i < m; ++i)
        result.forests[static_cast<std::size_t>(assigned[static_cast<std::size_t>(i)])].push_back(i);
    return result;
}

/// Splits a forest into two star forests by edge depth parity (BFS from the
/// least vertex of each tree).
inline std::pair<std::vector<int>, std::vector<int>> star_forest_split(const Hypergraph& f) {
    if (f.k() != 2) throw std::invalid_argument("star split expects a 2-graph");
    const int n = f.vertex_count();
    detail::UnionFind uf(n);
    for (const auto& e : f.edges())
        if (!uf.unite(e[0], e[1])) throw std::invalid_argument("input has a cycle");

    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
    for (int i = 0; i < f.edge_count(); ++i) {
        const auto& e = f.edge(i);
        adj[static_cast<std::size_t>(e[0])].push_back({e[1], i});
        adj[static_cast<std::size_t>(e[1])].push_back({e[0], i});
    }
    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    std::pair<std::vector<int>, std::vector<int>> parts;
    // ascending scan roots each tree at its least vertex
    for (int root = 0; root < n; ++root) {
        if (depth[static_cast<std::size_t>(root)] != -1 || adj[static_cast<std::size_t>(root)].empty())
            continue;
        depth[static_cast<std::size_t>(root)] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (auto [w, i] : adj[static_cast<std::size_t>(u)]) {
                if (depth[static_cast<std::size_t>(w)] != -1) continue;
                depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
                (depth[static_cast<std::size_t>(u)] % 2 == 0 ? parts.first : parts.second)
                    .push_back(i);
                queue.push_back(w);
            }
        }
    }
    return parts;
}

/// Star-forest structural test: each component has at most one vertex of
/// degree above 1.
inline bool is_star_forest(const Hypergraph& g, const std::vector<int>& edge_indices) {
    std::map<int, int> deg;
    detail::UnionFind uf(g.vertex_count());
    for (int i : edge_indices) {
        const auto& e = g.edge(i);
        ++deg[e[0]];
        ++deg[e[1]];
        uf.unite(e[0], e[1]);
    }
    std::map<int, int> centers;
    for (auto [v, d] : deg)
        if (d > 1 && ++centers[uf.find(v)] > 1) return false;
    return true;
}

struct ComponentColoring {
    std::vector<int> color_of;
    int colors_used = 0;
    int max_component = 0;
    int max_degree = 0;
};

namespace detail {

inline int component_of(const std::vector<std::vector<int>>& adj, const std::vector<int>& color,
                        int start, std::vector<int>& member_buffer) {
    member_buffer.clear();
    member_buffer.push_back(start);
    std::vector<char> seen(adj.size(), 0);
    seen[static_cast<std::size_t>(start)] = 1;
    for (std::size_t head = 0; head < member_buffer.size(); ++head) {
        int u = member_buffer[head];
        for (int w : adj[static_cast<std::size_t>(u)]) {
            if (seen[static_cast<std::size_t>(w)] ||
                color[static_cast<std::size_t>(w)] != color[static_cast<std::size_t>(start)])
                continue;
            seen[static_cast<std::size_t>(w)] = 1;
            member_buffer.push_back(w);
        }
    }
    return static_cast<int>(member_buffer.size());
}

}  // namespace detail

// Vertex coloring with ceil((max_degree+2)/3) colors whose monochromatic
// components stay below 12*max_degree^2 vertices. Local-search heuristic with
// post-hoc verification; fails loudly when the budget runs out instead of
// returning an unverified coloring.
inline ComponentColoring bounded_component_coloring(const Hypergraph& g,
                                                    std::uint64_t seed = 0,
                                                    long long iteration_budget = 200000) {
    if (g.k() != 2) throw std::invalid_argument("component coloring expects a 2-graph");
    const int n = g.vertex_count();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& e : g.edges()) {
        adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
        adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
    }
    int delta = 0;
    for (const auto& nb : adj) delta = std::max(delta, static_cast<int>(nb.size()));
    const int q = (delta + 2 + 2) / 3;  // ceil((delta+2)/3)
    const int cap = std::max(1, 12 * delta * delta);

    ComponentColoring out;
    out.max_degree = delta;
    out.color_of.assign(static_cast<std::size_t>(n), 0);
    std::vector<int> buffer;

    auto component_size = [&](int v) { return detail::component_of(adj, out.color_of, v, buffer); };

    // greedy: each vertex takes the color minimizing its component
    for (int v = 0; v < n; ++v) {
        int best_color = 0, best_size = n + 1;
        for (int c = 0; c < q; ++c) {
            out.color_of[static_cast<std::size_t>(v)] = c;
            int size = component_size(v);
            if (size < best_size) {
                best_size = size;
                best_color = c;
            }
        }
        out.color_of[static_cast<std::size_t>(v)] = best_color;
    }

    std::mt19937_64 rng(seed);
    long long steps = 0;
    while (steps < iteration_budget) {
        int offender = -1;
        for (int v = 0; v < n; ++v)
            if (component_size(v) > cap) { offender = v; break; }
        if (offender == -1) break;
        ++steps;
        detail::component_of(adj, out.color_of, offender, buffer);
        int v = buffer[rng() % buffer.size()];
        int best_color = out.color_of[static_cast<std::size_t>(v)], best_size = n + 1;
        for (int c = 0; c < q; ++c) {
            if (c == out.color_of[static_cast<std::size_t>(v)]) continue;
            out.color_of[static_cast<std::size_t>(v)] = c;
            int size = component_size(v);
            if (size < best_size) {
                best_size = size;
                best_color = c;
            }
        }
        out.color_of[static_cast<std::size_t>(v)] = best_color;
    }

    out.max_component = 0;
    for (int v = 0; v < n; ++v) out.max_component = std::max(out.max_component, component_size(v));
    if (out.max_component > cap)
        throw std::runtime_error("bounded component coloring failed within the iteration budget");
    std::set<int> used(out.color_of.begin(), out.color_of.end());
    out.colors_used = n == 0 ? 0 : static_cast<int>(used.size());
    return out;
}

struct Digraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;

    int max_out_degree() const {
        std::vector<int> out(static_cast<std::size_t>(n), 0);
        for (auto [a, b] : arcs) ++out[static_cast<std::size_t>(a)];
        int d = 0;
        for (int x : out) d = std::max(d, x);
        return d;
    }
};

/// Proper coloring of the underlying graph with at most 2*max_out_degree+1
/// colors: every subgraph has a vertex of undirected degree <= 2*Delta+, so
/// degeneracy-order greedy suffices.
inline std::vector<int> digraph_square_coloring(const Digraph& d) {
    const int n = d.n;
    std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
    for (auto [a, b] : d.arcs) {
        if (a == b) continue;
        adj[static_cast<std::size_t>(a)].insert(b);
        adj[static_cast<std::size_t>(b)].insert(a);
    }
    // degeneracy order: repeatedly strip a minimum-degree vertex
    std::vector<int> degree(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) degree[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    std::vector<int> order;
    for (int round = 0; round < n; ++round) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[static_cast<std::size_t>(v)] &&
                (pick == -1 || degree[static_cast<std::size_t>(v)] < degree[static_cast<std::size_t>(pick)]))
                pick = v;
        removed[static_cast<std::size_t>(pick)] = 1;
        order.push_back(pick);
        for (int w : adj[static_cast<std::size_t>(pick)])
            if (!removed[static_cast<std::size_t>(w)]) --degree[static_cast<std::size_t>(w)];
    }
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::set<int> taken;
        for (int w : adj[static_cast<std::size_t>(*it)])
            if (color[static_cast<std::size_t>(w)] != -1) taken.insert(color[static_cast<std::size_t>(w)]);
        int c = 0;
        while (taken.count(c)) ++c;
        color[static_cast<std::size_t>(*it)] = c;
    }
    return color;
}

// First-fit partition of a codegree-<=1 hypergraph into matchings. An
// optional resolution hint reorders the edges class by class, so a valid
// resolution is reproduced exactly.
inline std::vector<std::vector<int>> greedy_matching_decomposition(
    const Hypergraph& h, const std::vector<std::vector<int>>* resolution_hint = nullptr) {
    // validate pairwise codegree
    std::map<std::pair<int, int>, int> pair_count;
    for (const auto& e : h.edges())
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j)
                if (++pair_count[{e[i], e[j]}] > 1)
                    throw std::invalid_argument("codegree above 1: not a partial linear space");

    std::vector<int> order;
    if (resolution_hint) {
        std::vector<char> seen(static_cast<std::size_t>(h.edge_count()), 0);
        for (const auto& cls : *resolution_hint)
            for (int i : cls) {
                if (i < 0 || i >= h.edge_count() || seen[static_cast<std::size_t>(i)])
                    throw std::invalid_argument("resolution hint is not a permutation of edges");
                seen[static_cast<std::size_t>(i)] = 1;
                order.push_back(i);
            }
        if (static_cast<int>(order.size()) != h.edge_count())
            throw std::invalid_argument("resolution hint does not cover all edges");
    } else {
        order.resize(static_cast<std::size_t>(h.edge_count()));
        std::iota(order.begin(), order.end(), 0);
    }

    std::vector<std::vector<int>> matchings;
    std::vector<std::set<int>> covered;
    for (int i : order) {
        const auto& e = h.edge(i);
        bool placed = false;
        for (std::size_t mi = 0; mi < matchings.size(); ++mi) {
            bool disjoint = true;
            for (int v : e)
                if (covered[mi].count(v)) { disjoint = false; break; }
            if (disjoint) {
                matchings[mi].push_back(i);
                covered[mi].insert(e.begin(), e.end());
                placed = true;
                break;
            }
        }
        if (!placed) {
            matchings.push_back({i});
            covered.push_back(std::set<int>(e.begin(), e.end()));
        }
    }
    return matchings;
}

}  // namespace ramsey
