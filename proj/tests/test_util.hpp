#pragma once

// Shared helpers: seeded random instances and definition-transcribed oracles
// kept independent of the library's search paths.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ramsey/hypergraph.hpp"

namespace testutil {

using ramsey::Edge;
using ramsey::EdgeColoring;
using ramsey::Hypergraph;
using ramsey::PathSpec;

inline Hypergraph random_hypergraph(std::mt19937_64& rng, int k, int vertices, int edges) {
    std::set<Edge> chosen;
    std::vector<int> pool(static_cast<std::size_t>(vertices));
    std::iota(pool.begin(), pool.end(), 0);
    int guard = 0;
    while (static_cast<int>(chosen.size()) < edges && ++guard < 20000) {
        std::shuffle(pool.begin(), pool.end(), rng);
        Edge e(pool.begin(), pool.begin() + k);
        std::sort(e.begin(), e.end());
        chosen.insert(e);
    }
    return Hypergraph(k, vertices, std::vector<Edge>(chosen.begin(), chosen.end()));
}

inline Hypergraph random_graph(std::mt19937_64& rng, int vertices, int edges) {
    return random_hypergraph(rng, 2, vertices, edges);
}

// Direct transcription of the path definition: try every injective vertex
// sequence of length n and test all windows against the given edge set.
inline bool naive_sequence_path(const std::vector<Edge>& class_edges, int vertex_count,
                                const PathSpec& spec) {
    std::set<Edge> edge_set(class_edges.begin(), class_edges.end());
    std::vector<int> seq;
    std::vector<char> used(static_cast<std::size_t>(vertex_count), 0);
    const int step = spec.k - spec.ell;

    std::function<bool()> rec = [&]() {
        const int len = static_cast<int>(seq.size());
        if (len >= spec.k && (len - spec.k) % step == 0) {
            Edge window(seq.end() - spec.k, seq.end());
            std::sort(window.begin(), window.end());
            if (!edge_set.count(window)) return false;
            if (len == spec.n) return true;
        }
        if (len == spec.n) return false;
        for (int v = 0; v < vertex_count; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = 1;
            seq.push_back(v);
            if (rec()) return true;
            seq.pop_back();
            used[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    };
    return rec();
}

inline bool naive_mono_path(const Hypergraph& h, const EdgeColoring& coloring,
                            const PathSpec& spec) {
    for (int c = 0; c < coloring.num_colors; ++c) {
        std::vector<Edge> cls;
        for (int i = 0; i < h.edge_count(); ++i)
            if (coloring.color_of[static_cast<std::size_t>(i)] == c) cls.push_back(h.edge(i));
        if (naive_sequence_path(cls, h.vertex_count(), spec)) return true;
    }
    return false;
}

/// Longest path order within one class by the naive oracle; 0 when empty.
inline int naive_longest(const std::vector<Edge>& class_edges, int vertex_count, int k, int ell) {
    if (class_edges.empty()) return 0;
    int best = 0;
    for (int n = k; n <= vertex_count; n += k - ell)
        if (naive_sequence_path(class_edges, vertex_count, PathSpec(k, ell, n))) best = n;
    return best;
}

/// Nash-Williams density by brute force over all vertex subsets.
inline int brute_force_arboricity(const Hypergraph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size < 2) continue;
        int inside = 0;
        for (const auto& e : g.edges())
            if ((mask >> e[0] & 1) && (mask >> e[1] & 1)) ++inside;
        if (inside == 0) continue;
        best = std::max(best, (inside + size - 2) / (size - 1));  // ceil
    }
    return best;
}

}  // namespace testutil
