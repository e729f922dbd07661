#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey {

/// A hyperedge: sorted list of distinct vertex ids.
using Edge = std::vector<int>;

inline bool edge_contains(const Edge& e, int v) {
    return std::binary_search(e.begin(), e.end(), v);
}

inline Edge edge_intersection(const Edge& a, const Edge& b) {
    Edge out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Edge edge_difference(const Edge& a, const Edge& b) {
    Edge out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Edge edge_union(const Edge& a, const Edge& b) {
    Edge out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline int intersection_size(const Edge& a, const Edge& b) {
    std::size_t i = 0, j = 0;
    int count = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

// A k-uniform hypergraph on dense vertex ids [0, vertex_count).
// Edges are kept sorted internally and the edge list is kept in lexicographic
// order, so structurally equal hypergraphs compare equal.
//
// k == 0 is the degenerate case used by layered constructions where the only
// possible edge is the empty set; it is tracked by a flag instead of storing
// empty edges.
class Hypergraph {
public:
    Hypergraph() : k_(1), vertex_count_(0) {}

    Hypergraph(int k, int vertex_count, std::vector<Edge> edges)
        : k_(k), vertex_count_(vertex_count), edges_(std::move(edges)) {
        if (k_ < 1) throw std::invalid_argument("uniformity must be >= 1");
        if (vertex_count_ < 0) throw std::invalid_argument("vertex count must be >= 0");
        for (auto& e : edges_) {
            std::sort(e.begin(), e.end());
            if (static_cast<int>(e.size()) != k_)
                throw std::invalid_argument("edge size differs from uniformity");
            if (std::adjacent_find(e.begin(), e.end()) != e.end())
                throw std::invalid_argument("edge has repeated vertices");
            if (e.front() < 0 || e.back() >= vertex_count_)
                throw std::invalid_argument("edge vertex out of range");
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw std::invalid_argument("duplicate edge");
    }

    /// Degenerate 0-uniform object: carries only whether the empty edge is present.
    static Hypergraph trivial(int vertex_count, bool empty_edge_present) {
        Hypergraph h;
        h.k_ = 0;
        h.vertex_count_ = vertex_count;
        h.trivial_edge_ = empty_edge_present;
        return h;
    }

    int k() const { return k_; }
    int vertex_count() const { return vertex_count_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }
    int edge_count() const {
        if (k_ == 0) return trivial_edge_ ? 1 : 0;
        return static_cast<int>(edges_.size());
    }
    bool is_trivial_uniformity() const { return k_ == 0; }
    bool has_empty_edge() const { return k_ == 0 && trivial_edge_; }

    bool has_edge(const Edge& e) const {
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    int degree(int v) const {
        int d = 0;
        for (const auto& e : edges_)
            if (edge_contains(e, v)) ++d;
        return d;
    }

    std::vector<int> degrees() const {
        std::vector<int> d(static_cast<std::size_t>(vertex_count_), 0);
        for (const auto& e : edges_)
            for (int v : e) ++d[static_cast<std::size_t>(v)];
        return d;
    }

    int max_degree() const {
        auto d = degrees();
        return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
    }

    std::vector<int> edges_through(int v) const {
        std::vector<int> out;
        for (int i = 0; i < edge_count(); ++i)
            if (edge_contains(edges_[static_cast<std::size_t>(i)], v)) out.push_back(i);
        return out;
    }

    bool operator==(const Hypergraph& o) const {
        return k_ == o.k_ && vertex_count_ == o.vertex_count_ && edges_ == o.edges_ &&
               trivial_edge_ == o.trivial_edge_;
    }
    bool operator!=(const Hypergraph& o) const { return !(*this == o); }

private:
    int k_;
    int vertex_count_;
    std::vector<Edge> edges_;
    bool trivial_edge_ = false;
};

// Target pattern P_n^{(k,l)}: vertex sequence whose consecutive k-windows,
// stepped by k-l, are edges. l = k-1 is the tight path, l = 1 the loose path,
// l = 0 a matching.
struct PathSpec {
    int k;
    int ell;
    int n;

    PathSpec(int k_, int ell_, int n_) : k(k_), ell(ell_), n(n_) {
        if (k < 1) throw std::invalid_argument("path uniformity must be >= 1");
        if (ell < 0 || ell > k - 1) throw std::invalid_argument("overlap must satisfy 0 <= l <= k-1");
        if (n < k) throw std::invalid_argument("path must have at least k vertices");
        if ((n - ell) % (k - ell) != 0)
            throw std::invalid_argument("malformed target: (n-l) not divisible by (k-l)");
    }

    int edge_count() const { return (n - ell) / (k - ell); }

    bool operator==(const PathSpec& o) const { return k == o.k && ell == o.ell && n == o.n; }
};

inline PathSpec path_spec(int k, int ell, int n) { return PathSpec(k, ell, n); }

/// The family of k-uniform tight cycles on at least min_length vertices.
struct CycleSpec {
    int k;
    int min_length;

    CycleSpec(int k_, int min_length_) : k(k_), min_length(min_length_) {
        if (k < 2) throw std::invalid_argument("cycle uniformity must be >= 2");
        if (min_length < k + 1)
            throw std::invalid_argument("tight cycle needs at least k+1 vertices");
    }

    bool operator==(const CycleSpec& o) const { return k == o.k && min_length == o.min_length; }
};

// Total map edge-index -> color id in [0, num_colors).
struct EdgeColoring {
    std::vector<int> color_of;
    int num_colors = 0;

    EdgeColoring() = default;
    EdgeColoring(std::vector<int> colors, int r) : color_of(std::move(colors)), num_colors(r) {
        for (int c : color_of)
            if (c < 0 || c >= num_colors)
                throw std::invalid_argument("color id out of range");
    }

    int size() const { return static_cast<int>(color_of.size()); }

    std::vector<std::vector<int>> classes() const {
        std::vector<std::vector<int>> by_color(static_cast<std::size_t>(num_colors));
        for (int i = 0; i < size(); ++i)
            by_color[static_cast<std::size_t>(color_of[static_cast<std::size_t>(i)])].push_back(i);
        return by_color;
    }

    int colors_used() const {
        std::set<int> seen(color_of.begin(), color_of.end());
        return static_cast<int>(seen.size());
    }

    bool operator==(const EdgeColoring& o) const {
        return color_of == o.color_of && num_colors == o.num_colors;
    }
};

inline Hypergraph generate_path(const PathSpec& spec) {
    std::vector<Edge> edges;
    const int m = spec.edge_count();
    for (int i = 0; i < m; ++i) {
        Edge e(static_cast<std::size_t>(spec.k));
        std::iota(e.begin(), e.end(), i * (spec.k - spec.ell));
        edges.push_back(std::move(e));
    }
    return Hypergraph(spec.k, spec.n, std::move(edges));
}

inline Hypergraph complete_hypergraph(int N, int k) {
    if (k < 1) throw std::invalid_argument("uniformity must be >= 1");
    if (N < k) throw std::invalid_argument("complete k-graph needs at least k vertices");
    std::vector<Edge> edges;
    Edge cur(static_cast<std::size_t>(k));
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        edges.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == N - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return Hypergraph(k, N, std::move(edges));
}

/// (k-1)-graph of edge residues through v, on the same vertex set.
inline Hypergraph link_graph(const Hypergraph& h, int v) {
    if (h.k() <= 1) throw std::invalid_argument("link of a 1-graph would be 0-uniform");
    if (v < 0 || v >= h.vertex_count()) throw std::invalid_argument("vertex out of range");
    std::vector<Edge> edges;
    for (const auto& e : h.edges())
        if (edge_contains(e, v)) edges.push_back(edge_difference(e, Edge{v}));
    return Hypergraph(h.k() - 1, h.vertex_count(), std::move(edges));
}

// Partition S so that every edge meets each part at most once. Parts are
// extracted one at a time: a maximum strong independent subset (exhaustive)
// when the remainder has at most max_exhaustive vertices, else a maximal one
// grown by ascending vertex id. Part count is at most (k-1)*max_deg(S)+1.
inline std::vector<std::vector<int>> strong_independent_partition(const Hypergraph& h,
                                                                  const std::vector<int>& s,
                                                                  int max_exhaustive = 20) {
    for (int v : s)
        if (v < 0 || v >= h.vertex_count()) throw std::invalid_argument("S not within vertex set");
    std::vector<int> remaining = s;
    std::sort(remaining.begin(), remaining.end());
    remaining.erase(std::unique(remaining.begin(), remaining.end()), remaining.end());

    auto is_strong_independent = [&](const std::vector<int>& a) {
        for (const auto& e : h.edges()) {
            int hits = 0;
            for (int v : a)
                if (edge_contains(e, v) && ++hits > 1) return false;
        }
        return true;
    };

    std::vector<std::vector<int>> parts;
    while (!remaining.empty()) {
        std::vector<int> part;
        if (static_cast<int>(remaining.size()) <= max_exhaustive) {
            // exhaustive maximum over subsets, preferring lexicographically
            // least among maximum-size sets for determinism
            const int n = static_cast<int>(remaining.size());
            std::uint32_t best_mask = 0;
            int best_size = 0;
            for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
                int size = __builtin_popcount(mask);
                if (size <= best_size) continue;
                std::vector<int> cand;
                for (int i = 0; i < n; ++i)
                    if (mask & (1u << i)) cand.push_back(remaining[static_cast<std::size_t>(i)]);
                if (is_strong_independent(cand)) {
                    best_mask = mask;
                    best_size = size;
                }
            }
            for (int i = 0; i < n; ++i)
                if (best_mask & (1u << i)) part.push_back(remaining[static_cast<std::size_t>(i)]);
        } else {
            for (int v : remaining) {
                part.push_back(v);
                if (!is_strong_independent(part)) part.pop_back();
            }
        }
        parts.push_back(part);
        std::vector<int> next;
        std::set_difference(remaining.begin(), remaining.end(), part.begin(), part.end(),
                            std::back_inserter(next));
        remaining = std::move(next);
    }
    return parts;
}

// ---------------------------------------------------------------------------
// Blow-up transforms. Vertex naming is block-contiguous: old vertex v becomes
// the block [v*b, (v+1)*b) for block size b, and freshly added private
// vertices are numbered after all blocks, in edge order.
// ---------------------------------------------------------------------------

/// Each vertex of the 2-graph becomes an l-set; each edge gains k-2l private
/// vertices. Preserves edge count.
inline Hypergraph blowup_overlap(const Hypergraph& g, int k, int ell) {
    if (g.k() != 2) throw std::invalid_argument("overlap blow-up expects a 2-graph");
    if (ell < 1 || 2 * ell > k) throw std::invalid_argument("overlap blow-up needs 1 <= l <= k/2");
    const int private_per_edge = k - 2 * ell;
    int next_private = g.vertex_count() * ell;
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        Edge big;
        for (int v : e)
            for (int t = 0; t < ell; ++t) big.push_back(v * ell + t);
        for (int t = 0; t < private_per_edge; ++t) big.push_back(next_private++);
        edges.push_back(std::move(big));
    }
    return Hypergraph(k, next_private, std::move(edges));
}

/// Each vertex becomes a d-set; uniformity multiplies by d. Preserves edge count.
inline Hypergraph blowup_divide(const Hypergraph& g, int d) {
    if (d < 1) throw std::invalid_argument("block size must be >= 1");
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        Edge big;
        for (int v : e)
            for (int t = 0; t < d; ++t) big.push_back(v * d + t);
        edges.push_back(std::move(big));
    }
    return Hypergraph(g.k() * d, g.vertex_count() * d, std::move(edges));
}

/// Adds one new apex vertex to every edge. Preserves edge count.
inline Hypergraph cone(const Hypergraph& g) {
    const int y = g.vertex_count();
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        Edge big = e;
        big.push_back(y);
        edges.push_back(std::move(big));
    }
    return Hypergraph(g.k() + 1, g.vertex_count() + 1, std::move(edges));
}

/// Adds a common core of k - m*(k-l) fresh vertices to every edge of an
/// m*(k-l)-uniform input. Preserves edge count.
inline Hypergraph core_extend(const Hypergraph& g, int k, int ell, int m) {
    const int core_size = k - m * (k - ell);
    if (core_size <= 0)
        throw std::invalid_argument("core would be empty: need m < k/(k-l)");
    if (g.k() != m * (k - ell))
        throw std::invalid_argument("input uniformity must be m*(k-l)");
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        Edge big = e;
        for (int t = 0; t < core_size; ++t) big.push_back(g.vertex_count() + t);
        edges.push_back(std::move(big));
    }
    return Hypergraph(k, g.vertex_count() + core_size, std::move(edges));
}

/// Sub-hypergraph on the edges that avoid every vertex of `removed`.
inline Hypergraph remove_vertices(const Hypergraph& h, const std::vector<int>& removed) {
    std::set<int> gone(removed.begin(), removed.end());
    std::vector<Edge> edges;
    for (const auto& e : h.edges()) {
        bool keep = true;
        for (int v : e)
            if (gone.count(v)) { keep = false; break; }
        if (keep) edges.push_back(e);
    }
    return Hypergraph(h.k(), h.vertex_count(), std::move(edges));
}

/// Hypergraph induced by a subset of edge indices (same vertex set).
inline Hypergraph edge_subgraph(const Hypergraph& h, const std::vector<int>& edge_indices) {
    std::vector<Edge> edges;
    for (int i : edge_indices) edges.push_back(h.edge(i));
    return Hypergraph(h.k(), h.vertex_count(), std::move(edges));
}

}  // namespace ramsey
