#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ramsey/arrow.hpp"
#include "ramsey/decomp.hpp"
#include "ramsey/hypergraph.hpp"
#include "ramsey/pathfind.hpp"

namespace ramsey {

// ---------------------------------------------------------------------------
// Partite majority coloring: parts A_1..A_{r-1} of order m'-1 and A_r of
// order n-1; an edge takes the least part index it meets. Classes i < r have
// matching number below m', class r spans fewer than n vertices, so no class
// contains the target path.
// ---------------------------------------------------------------------------

struct AflColoring {
    Hypergraph host;
    EdgeColoring coloring;
    int m_prime = 0;
    std::vector<std::pair<int, int>> part_ranges;  // [begin, end) per part
};

inline AflColoring afl_coloring(int r, const PathSpec& spec) {
    if (r < 2) throw std::invalid_argument("need at least two colors");
    if (spec.ell < 1) throw std::invalid_argument("overlap must be at least 1");
    const int k = spec.k;
    const int m = spec.edge_count();
    const int window = (k + (k - spec.ell) - 1) / (k - spec.ell);  // ceil(k/(k-l))
    const int m_prime = (m + window - 1) / window;

    AflColoring out;
    out.m_prime = m_prime;
    int begin = 0;
    for (int i = 0; i < r - 1; ++i) {
        out.part_ranges.push_back({begin, begin + m_prime - 1});
        begin += m_prime - 1;
    }
    out.part_ranges.push_back({begin, begin + spec.n - 1});
    const int order = begin + spec.n - 1;

    out.host = order >= k ? complete_hypergraph(order, k) : Hypergraph(k, order, {});
    std::vector<int> colors;
    for (const auto& e : out.host.edges()) {
        int color = r - 1;
        for (int i = 0; i < r; ++i) {
            const auto [lo, hi] = out.part_ranges[static_cast<std::size_t>(i)];
            bool meets = false;
            for (int v : e)
                if (v >= lo && v < hi) { meets = true; break; }
            if (meets) { color = i; break; }
        }
        colors.push_back(color);
    }
    out.coloring = EdgeColoring(std::move(colors), r);
    return out;
}

/// Exact maximum matching size within an edge subset, by DFS.
inline int matching_number(const Hypergraph& h, const std::vector<int>& edge_indices) {
    int best = 0;
    std::vector<int> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t at) {
        best = std::max(best, static_cast<int>(chosen.size()));
        for (std::size_t i = at; i < edge_indices.size(); ++i) {
            const auto& e = h.edge(edge_indices[i]);
            bool disjoint = true;
            for (int j : chosen)
                if (intersection_size(h.edge(j), e) > 0) { disjoint = false; break; }
            if (!disjoint) continue;
            chosen.push_back(edge_indices[i]);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return best;
}

// ---------------------------------------------------------------------------
// Layered degree coloring. B_1 = H and B_j collects the t_j-sets whose degree
// in B_{j-1} exceeds r; when |H| <= r^m/g the top layer is empty. Edge pairs
// sharing exactly l vertices that exhibit the layer-jump property get
// different colors, which rules out any path with m+1 edges.
// ---------------------------------------------------------------------------

struct HierarchyTrace {
    std::vector<Hypergraph> layers;  // B_1..B_{m+1}, uniformities t_1..t_{m+1}
    Digraph aux;                     // vertices = edge indices of H
    int colors_used = 0;
    long long f = 0, g = 0;
    int max_out_degree = 0;
};

struct HierarchyColoring {
    EdgeColoring coloring;
    HierarchyTrace trace;
};

namespace detail {

inline long long small_binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

template <typename F>
inline void for_each_subset_of(const Edge& pool, int size, const F& f) {
    Edge cur(static_cast<std::size_t>(size));
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == size) {
            f(cur);
            return;
        }
        for (int i = start; i < static_cast<int>(pool.size()); ++i) {
            cur[static_cast<std::size_t>(pos)] = pool[static_cast<std::size_t>(i)];
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

}  // namespace detail

inline HierarchyColoring hierarchy_coloring(const Hypergraph& h, int ell, int r, int m) {
    const int k = h.k();
    if (ell < 1 || ell > k - 1) throw std::invalid_argument("need 1 <= l <= k-1");
    if (m < 1 || m > k / (k - ell)) throw std::invalid_argument("need 1 <= m <= floor(k/(k-l))");
    if (r < 1) throw std::invalid_argument("need r >= 1");

    std::vector<int> t(static_cast<std::size_t>(m + 2));
    for (int j = 1; j <= m + 1; ++j) t[static_cast<std::size_t>(j)] = k - (j - 1) * (k - ell);
    long long f = 0, g = 1;
    for (int j = 1; j <= m; ++j)
        f += detail::small_binomial(ell, t[static_cast<std::size_t>(j + 1)]);
    f *= detail::small_binomial(k, ell);
    for (int j = 1; j <= m - 1; ++j)
        g *= detail::small_binomial(t[static_cast<std::size_t>(j)], t[static_cast<std::size_t>(j + 1)]);

    // the hypothesis |H| <= r^m / g
    long long rm = 1;
    for (int i = 0; i < m; ++i) rm *= r;
    if (static_cast<long long>(h.edge_count()) * g > rm)
        throw std::invalid_argument("edge count exceeds r^m/g: layer hypothesis fails");

    HierarchyColoring out;
    out.trace.f = f;
    out.trace.g = g;
    out.trace.layers.push_back(h);
    for (int j = 2; j <= m + 1; ++j) {
        const int tj = t[static_cast<std::size_t>(j)];
        const Hypergraph& prev = out.trace.layers.back();
        std::map<Edge, int> deg;
        for (const auto& e : prev.edges())
            detail::for_each_subset_of(e, tj, [&](const Edge& s) { ++deg[s]; });
        if (tj == 0) {
            const bool empty_edge = prev.edge_count() > r;
            out.trace.layers.push_back(Hypergraph::trivial(h.vertex_count(), empty_edge));
        } else {
            std::vector<Edge> heavy;
            for (const auto& [s, d] : deg)
                if (d > r) heavy.push_back(s);
            out.trace.layers.push_back(Hypergraph(tj, h.vertex_count(), std::move(heavy)));
        }
    }
    if (out.trace.layers.back().edge_count() != 0)
        throw std::logic_error("top layer is nonempty despite the edge-count hypothesis");

    // arc (e,e') iff |e ∩ e'| = l and for some j the set S = e ∩ e' has a
    // t_{j+1}-subset outside B_{j+1} whose union with e'\e lands in B_j
    out.trace.aux.n = h.edge_count();
    for (int a = 0; a < h.edge_count(); ++a) {
        for (int b = 0; b < h.edge_count(); ++b) {
            if (a == b) continue;
            const Edge& e = h.edge(a);
            const Edge& ep = h.edge(b);
            Edge shared = edge_intersection(e, ep);
            if (static_cast<int>(shared.size()) != ell) continue;
            Edge fresh = edge_difference(ep, e);
            bool arc = false;
            for (int j = 1; j <= m && !arc; ++j) {
                const int tnext = t[static_cast<std::size_t>(j + 1)];
                const Hypergraph& bj = out.trace.layers[static_cast<std::size_t>(j - 1)];
                const Hypergraph& bnext = out.trace.layers[static_cast<std::size_t>(j)];
                detail::for_each_subset_of(shared, tnext, [&](const Edge& s) {
                    if (arc) return;
                    const bool in_next = bnext.is_trivial_uniformity() ? bnext.has_empty_edge()
                                                                       : bnext.has_edge(s);
                    if (in_next) return;
                    if (bj.has_edge(edge_union(s, fresh))) arc = true;
                });
            }
            if (arc) out.trace.aux.arcs.push_back({a, b});
        }
    }
    out.trace.max_out_degree = out.trace.aux.max_out_degree();

    auto colors = digraph_square_coloring(out.trace.aux);
    int used = 0;
    for (int c : colors) used = std::max(used, c + 1);
    out.trace.colors_used = std::max(used, 1);
    if (h.edge_count() == 0)
        out.coloring = EdgeColoring({}, 1);
    else
        out.coloring = EdgeColoring(colors, out.trace.colors_used);
    return out;
}

// ---------------------------------------------------------------------------
// Composite coloring. Vertices of degree below d_hat form S; the rest is
// colored by the base oracle, and edges meeting S are colored per vertex so
// that every link stays free of the short (k-1,l-1)-path. Any surviving
// monochromatic path has all its S-vertices near its ends.
// ---------------------------------------------------------------------------

/// Returns a coloring of `host` with at most `colors` colors avoiding
/// `forbidden`, or nothing when it cannot.
using ColoringOracle =
    std::function<std::optional<EdgeColoring>(const Hypergraph& host, int colors,
                                              const PathSpec& forbidden)>;

/// Completes a partial coloring (fixed[i] = -1 for free edges) so that no
/// color class of the full host contains the forbidden path.
using ExtensionOracle = std::function<std::optional<std::vector<int>>(
    const Hypergraph& host, int colors, const PathSpec& forbidden,
    const std::vector<int>& fixed)>;

struct OracleFailure : std::runtime_error {
    OracleFailure(const std::string& what, Hypergraph failing)
        : std::runtime_error(what), instance(std::move(failing)) {}
    Hypergraph instance;
};

/// Exhaustive avoiding-coloring search; fails when the host arrows the target.
inline ColoringOracle exhaustive_oracle(const SearchOptions& opts = {}) {
    return [opts](const Hypergraph& host, int colors, const PathSpec& forbidden)
               -> std::optional<EdgeColoring> {
        if (host.edge_count() == 0) return EdgeColoring({}, std::max(colors, 0));
        if (colors < 1) return std::nullopt;
        auto decision = arrows(host, colors, Target{forbidden}, opts);
        if (decision.outcome != ArrowOutcome::avoided) return std::nullopt;
        return decision.witness;
    };
}

/// Backtracking completion of a partial coloring.
inline ExtensionOracle exhaustive_extension_oracle() {
    return [](const Hypergraph& host, int colors, const PathSpec& forbidden,
              const std::vector<int>& fixed) -> std::optional<std::vector<int>> {
        if (colors < 1 && host.edge_count() > 0) return std::nullopt;
        std::vector<int> assignment = fixed;
        std::vector<int> free_edges;
        for (int i = 0; i < host.edge_count(); ++i)
            if (fixed[static_cast<std::size_t>(i)] < 0) free_edges.push_back(i);

        auto class_ok = [&](int color) {
            std::vector<const Edge*> cls;
            for (int i = 0; i < host.edge_count(); ++i)
                if (assignment[static_cast<std::size_t>(i)] == color) cls.push_back(&host.edge(i));
            return !class_contains_path(cls, host.vertex_count(), forbidden);
        };
        for (int c = 0; c < colors; ++c)
            if (!class_ok(c)) return std::nullopt;  // the fixed part is already bad

        std::function<bool(std::size_t)> rec = [&](std::size_t at) {
            if (at == free_edges.size()) return true;
            const int i = free_edges[at];
            for (int c = 0; c < colors; ++c) {
                assignment[static_cast<std::size_t>(i)] = c;
                if (class_ok(c) && rec(at + 1)) return true;
            }
            assignment[static_cast<std::size_t>(i)] = -1;
            return false;
        };
        if (!rec(0)) return std::nullopt;
        return assignment;
    };
}

struct CompositeTrace {
    std::vector<int> low_degree_set;              // S
    std::vector<std::vector<int>> partition;      // S_1..S_c
    std::vector<std::vector<int>> edge_classes;   // E_1..E_c, edge indices into H
    EdgeColoring base_coloring;                   // on H \ S
    int d_hat = 0;
    int c = 0;
    PathSpec link_target = PathSpec(2, 1, 4);
    int guaranteed_n = 0;  // least valid order with no monochromatic path
};

struct CompositeColoring {
    EdgeColoring coloring;
    CompositeTrace trace;
};

inline CompositeColoring composite_coloring(const Hypergraph& h, int ell, int r, int n_prime,
                                            const ColoringOracle& base_oracle,
                                            int base_vertex_budget,
                                            const ExtensionOracle& link_oracle, int d_hat) {
    const int k = h.k();
    if (ell < 1 || ell > k - 1) throw std::invalid_argument("need 1 <= l <= k-1");
    if (k < 2) throw std::invalid_argument("need k >= 2");
    if (static_cast<long long>(k) * h.edge_count() >=
        static_cast<long long>(d_hat) * base_vertex_budget)
        throw std::invalid_argument("edge count too large: need |E| < (d_hat/k) * vertex budget");

    const int window = k / (k - ell);
    const int q = ell - 1 + window * (k - ell);
    CompositeColoring out;
    out.trace.d_hat = d_hat;
    out.trace.link_target = PathSpec(k - 1, ell - 1, q);

    auto degrees = h.degrees();
    for (int v = 0; v < h.vertex_count(); ++v)
        if (degrees[static_cast<std::size_t>(v)] < d_hat) out.trace.low_degree_set.push_back(v);
    const auto& s = out.trace.low_degree_set;

    Hypergraph base_host = remove_vertices(h, s);
    auto base = base_oracle(base_host, r, PathSpec(k, ell, n_prime));
    if (!base) throw OracleFailure("base oracle failed on H minus S", base_host);
    out.trace.base_coloring = *base;

    std::vector<int> es;  // edges meeting S
    std::set<int> s_set(s.begin(), s.end());
    for (int i = 0; i < h.edge_count(); ++i) {
        bool meets = false;
        for (int v : h.edge(i))
            if (s_set.count(v)) { meets = true; break; }
        if (meets) es.push_back(i);
    }
    Hypergraph hs = edge_subgraph(h, es);
    out.trace.partition = strong_independent_partition(hs, s);
    out.trace.c = static_cast<int>(out.trace.partition.size());

    std::vector<int> total(static_cast<std::size_t>(h.edge_count()), -1);
    // base edges: match them back to their indices in h
    {
        std::map<Edge, int> base_color;
        for (int i = 0; i < base_host.edge_count(); ++i)
            base_color[base_host.edge(i)] = base->color_of[static_cast<std::size_t>(i)];
        for (int i = 0; i < h.edge_count(); ++i) {
            auto it = base_color.find(h.edge(i));
            if (it != base_color.end()) total[static_cast<std::size_t>(i)] = it->second;
        }
    }

    std::vector<char> claimed(static_cast<std::size_t>(h.edge_count()), 0);
    for (const auto& part : out.trace.partition) {
        std::set<int> part_set(part.begin(), part.end());
        std::vector<int> ei;
        for (int i : es) {
            if (claimed[static_cast<std::size_t>(i)]) continue;
            bool meets = false;
            for (int v : h.edge(i))
                if (part_set.count(v)) { meets = true; break; }
            if (meets) ei.push_back(i);
        }
        for (int i : ei) claimed[static_cast<std::size_t>(i)] = 1;
        out.trace.edge_classes.push_back(ei);

        // within E_i each edge has exactly one vertex of S_i. The free edges
        // through v are colored so that the FULL link of v (including edges
        // already colored through earlier parts) has no short link path.
        std::set<int> ei_set(ei.begin(), ei.end());
        for (int v : part) {
            std::vector<int> through;  // all S-side edges through v
            for (int i : es)
                if (edge_contains(h.edge(i), v)) through.push_back(i);
            if (through.empty()) continue;
            bool any_free = false;
            for (int i : through)
                if (ei_set.count(i)) { any_free = true; break; }
            if (!any_free) continue;
            std::vector<Edge> residues;
            std::vector<int> fixed;
            for (int i : through) {
                residues.push_back(edge_difference(h.edge(i), Edge{v}));
                fixed.push_back(ei_set.count(i) ? -1 : total[static_cast<std::size_t>(i)]);
            }
            Hypergraph link(k - 1, h.vertex_count(), residues);
            // the link constructor sorts edges: realign the fixed vector
            std::map<Edge, int> position;
            for (int j = 0; j < link.edge_count(); ++j) position[link.edge(j)] = j;
            std::vector<int> fixed_sorted(static_cast<std::size_t>(link.edge_count()), -1);
            for (std::size_t idx = 0; idx < through.size(); ++idx)
                fixed_sorted[static_cast<std::size_t>(position.at(residues[idx]))] = fixed[idx];
            auto link_colors = link_oracle(link, r, out.trace.link_target, fixed_sorted);
            if (!link_colors)
                throw OracleFailure("link oracle failed on a vertex link", link);
            for (std::size_t idx = 0; idx < through.size(); ++idx)
                total[static_cast<std::size_t>(through[idx])] =
                    (*link_colors)[static_cast<std::size_t>(position.at(residues[idx]))];
        }
    }

    for (int c : total)
        if (c < 0) throw std::logic_error("edge left uncolored by the composite construction");
    out.coloring = EdgeColoring(total, r);

    const long long bound = n_prime - 1 + 2LL * (ell + static_cast<long long>(out.trace.c) * (k - 1));
    long long n0 = std::max<long long>(bound + 1, k);
    while ((n0 - ell) % (k - ell) != 0) ++n0;
    out.trace.guaranteed_n = static_cast<int>(n0);
    return out;
}

// ---------------------------------------------------------------------------
// Star arboricity coloring: forests from the exact arboricity decomposition,
// each split into two star forests; star forests have no 3-vertex path of
// edges, so each class avoids P4.
// ---------------------------------------------------------------------------

struct StarArbError : std::runtime_error {
    StarArbError(int a, Hypergraph w)
        : std::runtime_error("star arboricity exceeds the color budget: 2*arb = " +
                             std::to_string(2 * a)),
          arboricity(a), witness(std::move(w)) {}
    int arboricity;
    Hypergraph witness;  // Nash-Williams density witness
};

inline EdgeColoring star_arboricity_coloring(const Hypergraph& g, int r) {
    if (g.k() != 2) throw std::invalid_argument("expects a 2-graph");
    if (2 * g.edge_count() > r * r)
        throw std::invalid_argument("edge count above r^2/2");
    auto decomposition = arboricity_decompose(g);
    if (2 * decomposition.count > r)
        throw StarArbError(decomposition.count,
                           decomposition.witness ? *decomposition.witness : g);

    std::vector<int> colors(static_cast<std::size_t>(g.edge_count()), 0);
    int next_color = 0;
    for (const auto& forest : decomposition.forests) {
        std::vector<Edge> forest_edges;
        for (int i : forest) forest_edges.push_back(g.edge(i));
        Hypergraph fg(2, g.vertex_count(), forest_edges);
        // map back: forest edges are distinct within g
        std::map<Edge, int> back;
        for (int i : forest) back[g.edge(i)] = i;
        auto [even, odd] = star_forest_split(fg);
        if (!even.empty()) {
            for (int j : even) colors[static_cast<std::size_t>(back.at(fg.edge(j)))] = next_color;
            ++next_color;
        }
        if (!odd.empty()) {
            for (int j : odd) colors[static_cast<std::size_t>(back.at(fg.edge(j)))] = next_color;
            ++next_color;
        }
    }
    return EdgeColoring(colors, std::max(next_color, 1));
}

// ---------------------------------------------------------------------------
// Loose-path coloring: low-degree vertices form S, the rest takes
// floor((2r-2)/3) base colors, and the auxiliary graph on edges meeting S
// (adjacent when sharing exactly l vertices) is vertex-colored with the
// remaining ceil((r+2)/3) colors so monochromatic components stay small.
// ---------------------------------------------------------------------------

struct LoosePathColoring {
    EdgeColoring coloring;
    std::vector<int> low_degree_set;
    std::vector<int> s_edges;  // E_S
    int aux_max_degree = 0;
    int max_component = 0;
    int base_colors = 0;
    int fresh_colors = 0;
};

inline LoosePathColoring loose_path_coloring(const Hypergraph& h, int r, const PathSpec& spec,
                                             const ColoringOracle& base_oracle,
                                             std::uint64_t seed = 0) {
    const int k = h.k();
    const int ell = spec.ell;
    if (spec.k != k) throw std::invalid_argument("uniformity mismatch");
    if (ell < 1 || 2 * ell > k) throw std::invalid_argument("need 1 <= l <= k/2");
    if (r < 2) throw std::invalid_argument("need r >= 2");
    if (spec.n <= 12 * r * r * (k - ell) + ell)
        throw std::invalid_argument("target too short: need n > 12r^2(k-l)+l");

    LoosePathColoring out;
    out.base_colors = (2 * r - 2) / 3;
    out.fresh_colors = r - out.base_colors;

    auto degrees = h.degrees();
    for (int v = 0; v < h.vertex_count(); ++v)
        if (static_cast<long long>(k) * degrees[static_cast<std::size_t>(v)] < r)
            out.low_degree_set.push_back(v);

    Hypergraph base_host = remove_vertices(h, out.low_degree_set);
    std::optional<EdgeColoring> base;
    if (out.base_colors == 0) {
        if (base_host.edge_count() > 0)
            throw std::invalid_argument(
                "no base colors available (r=2) but H minus S still has edges");
        base = EdgeColoring({}, 0);
    } else {
        base = base_oracle(base_host, out.base_colors, spec);
        if (!base) throw OracleFailure("base oracle failed on H minus S", base_host);
    }

    std::set<int> s_set(out.low_degree_set.begin(), out.low_degree_set.end());
    for (int i = 0; i < h.edge_count(); ++i) {
        bool meets = false;
        for (int v : h.edge(i))
            if (s_set.count(v)) { meets = true; break; }
        if (meets) out.s_edges.push_back(i);
    }

    // auxiliary graph on E_S: adjacency = sharing exactly l vertices
    std::vector<Edge> aux_edges;
    for (std::size_t a = 0; a < out.s_edges.size(); ++a)
        for (std::size_t b = a + 1; b < out.s_edges.size(); ++b)
            if (intersection_size(h.edge(out.s_edges[a]), h.edge(out.s_edges[b])) == ell)
                aux_edges.push_back({static_cast<int>(a), static_cast<int>(b)});
    Hypergraph aux(2, static_cast<int>(out.s_edges.size()), aux_edges);
    out.aux_max_degree = aux.max_degree();
    if (out.aux_max_degree >= r)
        throw std::invalid_argument(
            "auxiliary graph max degree reached r: the degree hypothesis fails on this host");

    auto component = bounded_component_coloring(aux, seed);
    out.max_component = component.max_component;
    const int fresh_used = component.colors_used;
    if (fresh_used > out.fresh_colors)
        throw std::logic_error("component coloring used more than the reserved colors");

    std::vector<int> colors(static_cast<std::size_t>(h.edge_count()), -1);
    {
        std::map<Edge, int> base_color;
        for (int i = 0; i < base_host.edge_count(); ++i)
            base_color[base_host.edge(i)] = base->color_of[static_cast<std::size_t>(i)];
        for (int i = 0; i < h.edge_count(); ++i) {
            auto it = base_color.find(h.edge(i));
            if (it != base_color.end()) colors[static_cast<std::size_t>(i)] = it->second;
        }
    }
    for (std::size_t a = 0; a < out.s_edges.size(); ++a)
        colors[static_cast<std::size_t>(out.s_edges[a])] =
            out.base_colors + component.color_of[a];
    for (int c : colors)
        if (c < 0) throw std::logic_error("edge left uncolored by the loose-path construction");
    out.coloring = EdgeColoring(colors, r);
    return out;
}

// ---------------------------------------------------------------------------
// Design-based coloring: cliques of a clique decomposition become edges of an
// auxiliary hypergraph with codegree 1; its matchings become colors. Within a
// color, cliques pairwise share at most k-2 vertices, so tight components
// stay inside single cliques.
// ---------------------------------------------------------------------------

struct DesignInput {
    int N = 0;
    int clique_order = 0;
    std::vector<std::vector<int>> cliques;
    std::optional<std::vector<std::vector<int>>> resolution;  // clique indices per class
};

inline void validate_design(const DesignInput& input, int k) {
    if (k < 2 || input.clique_order < k || input.N < input.clique_order)
        throw std::invalid_argument("design parameters out of range");
    std::map<Edge, int> cover;
    for (const auto& clique : input.cliques) {
        if (static_cast<int>(clique.size()) != input.clique_order)
            throw std::invalid_argument("clique has the wrong order");
        Edge sorted_clique(clique.begin(), clique.end());
        std::sort(sorted_clique.begin(), sorted_clique.end());
        if (std::adjacent_find(sorted_clique.begin(), sorted_clique.end()) != sorted_clique.end())
            throw std::invalid_argument("clique has repeated vertices");
        if (sorted_clique.front() < 0 || sorted_clique.back() >= input.N)
            throw std::invalid_argument("clique vertex out of range");
        detail::for_each_subset_of(sorted_clique, k, [&](const Edge& s) { ++cover[s]; });
    }
    for (const auto& [s, count] : cover)
        if (count > 1) throw std::invalid_argument("two cliques share a k-set: not edge-disjoint");
    if (static_cast<long long>(cover.size()) != detail::small_binomial(input.N, k))
        throw std::invalid_argument("cliques do not cover every k-set");
    if (input.resolution) {
        std::vector<char> seen(input.cliques.size(), 0);
        for (const auto& cls : *input.resolution)
            for (int i : cls) {
                if (i < 0 || i >= static_cast<int>(input.cliques.size()) ||
                    seen[static_cast<std::size_t>(i)])
                    throw std::invalid_argument("resolution is not a partition of the cliques");
                seen[static_cast<std::size_t>(i)] = 1;
            }
        for (char c : seen)
            if (!c) throw std::invalid_argument("resolution misses a clique");
    }
}

struct DesignColoring {
    Hypergraph host;       // complete k-graph on N vertices
    EdgeColoring coloring;
    Hypergraph auxiliary;  // one edge per clique, vertices = (k-1)-subsets
    std::vector<std::vector<int>> matchings;  // clique indices per color
};

inline DesignColoring design_coloring(const DesignInput& input, int k) {
    validate_design(input, k);
    DesignColoring out;

    // vertices of the auxiliary hypergraph: (k-1)-subsets of the ground set
    std::map<Edge, int> sub_id;
    {
        Edge ground(static_cast<std::size_t>(input.N));
        std::iota(ground.begin(), ground.end(), 0);
        int next = 0;
        detail::for_each_subset_of(ground, k - 1, [&](const Edge& s) { sub_id[s] = next++; });
    }
    std::vector<Edge> aux_edges;
    for (const auto& clique : input.cliques) {
        Edge sorted_clique(clique.begin(), clique.end());
        std::sort(sorted_clique.begin(), sorted_clique.end());
        Edge aux_edge;
        detail::for_each_subset_of(sorted_clique, k - 1,
                                   [&](const Edge& s) { aux_edge.push_back(sub_id.at(s)); });
        std::sort(aux_edge.begin(), aux_edge.end());
        aux_edges.push_back(aux_edge);
    }
    out.auxiliary = Hypergraph(static_cast<int>(detail::small_binomial(input.clique_order, k - 1)),
                               static_cast<int>(sub_id.size()), aux_edges);

    // clique index -> auxiliary edge index (construction sorts the edge list)
    std::map<Edge, int> aux_index;
    for (int i = 0; i < out.auxiliary.edge_count(); ++i) aux_index[out.auxiliary.edge(i)] = i;
    std::vector<int> clique_to_aux;
    for (const auto& e : aux_edges) clique_to_aux.push_back(aux_index.at(e));

    std::optional<std::vector<std::vector<int>>> hint;
    if (input.resolution) {
        hint = std::vector<std::vector<int>>();
        for (const auto& cls : *input.resolution) {
            std::vector<int> mapped;
            for (int i : cls) mapped.push_back(clique_to_aux[static_cast<std::size_t>(i)]);
            hint->push_back(mapped);
        }
    }
    auto matchings = greedy_matching_decomposition(out.auxiliary, hint ? &*hint : nullptr);

    // color per clique = its matching id
    std::vector<int> clique_color(input.cliques.size(), -1);
    {
        std::vector<int> aux_to_clique(aux_edges.size());
        for (std::size_t i = 0; i < clique_to_aux.size(); ++i)
            aux_to_clique[static_cast<std::size_t>(clique_to_aux[i])] = static_cast<int>(i);
        out.matchings.resize(matchings.size());
        for (std::size_t mi = 0; mi < matchings.size(); ++mi)
            for (int aux_i : matchings[mi]) {
                const int ci = aux_to_clique[static_cast<std::size_t>(aux_i)];
                clique_color[static_cast<std::size_t>(ci)] = static_cast<int>(mi);
                out.matchings[mi].push_back(ci);
            }
    }

    // k-set -> containing clique
    std::map<Edge, int> owner;
    for (std::size_t ci = 0; ci < input.cliques.size(); ++ci) {
        Edge sorted_clique(input.cliques[ci].begin(), input.cliques[ci].end());
        std::sort(sorted_clique.begin(), sorted_clique.end());
        detail::for_each_subset_of(sorted_clique, k,
                                   [&](const Edge& s) { owner[s] = static_cast<int>(ci); });
    }
    out.host = complete_hypergraph(input.N, k);
    std::vector<int> colors;
    for (const auto& e : out.host.edges())
        colors.push_back(clique_color[static_cast<std::size_t>(owner.at(e))]);
    out.coloring = EdgeColoring(colors, static_cast<int>(matchings.size()));
    return out;
}

/// Lines of the Fano plane: the 7-point Steiner triple system.
inline DesignInput sts7_fixture() {
    DesignInput d;
    d.N = 7;
    d.clique_order = 3;
    for (int i = 0; i < 7; ++i) d.cliques.push_back({i, (i + 1) % 7, (i + 3) % 7});
    return d;
}

/// Lines of the 3x3 affine plane: the resolvable 9-point Steiner triple
/// system, with its four parallel classes as the resolution.
inline DesignInput sts9_fixture() {
    DesignInput d;
    d.N = 9;
    d.clique_order = 3;
    auto id = [](int x, int y) { return 3 * x + y; };
    // rows, columns, slope-1 and slope-2 lines
    for (int c = 0; c < 3; ++c) d.cliques.push_back({id(c, 0), id(c, 1), id(c, 2)});
    for (int c = 0; c < 3; ++c) d.cliques.push_back({id(0, c), id(1, c), id(2, c)});
    for (int c = 0; c < 3; ++c)
        d.cliques.push_back({id(0, c), id(1, (c + 1) % 3), id(2, (c + 2) % 3)});
    for (int c = 0; c < 3; ++c)
        d.cliques.push_back({id(0, c), id(1, (c + 2) % 3), id(2, (c + 4) % 3)});
    d.resolution = std::vector<std::vector<int>>{
        {0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}};
    return d;
}

}  // namespace ramsey
