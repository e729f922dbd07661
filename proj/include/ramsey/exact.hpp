#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ramsey/arrow.hpp"
#include "ramsey/canonical.hpp"
#include "ramsey/hypergraph.hpp"
#include "ramsey/pathfind.hpp"

namespace ramsey {

enum class ExactStatus { found, bound_only, unknown };

struct ExactResult {
    ExactStatus status = ExactStatus::unknown;
    long long value = 0;       // exact value, or the certified strict bound+1
    std::optional<Hypergraph> witness_host;
    SearchStats stats;
};

/// Smallest N <= n_max such that the complete k-graph on N vertices arrows
/// the target; otherwise certifies the lower bound n_max+1. Monotone in N,
/// so the scan stops at the first arrowing order.
inline ExactResult ramsey_number_exact(const Target& target, int r, int n_max,
                                       const SearchOptions& opts = {}) {
    if (r < 1) throw std::invalid_argument("need at least one color");
    const int k = target_uniformity(target);
    int start = k;
    if (std::holds_alternative<PathSpec>(target)) start = std::get<PathSpec>(target).n;
    else start = std::get<CycleSpec>(target).min_length;

    ExactResult result;
    for (int n = start; n <= n_max; ++n) {
        auto host = complete_hypergraph(n, k);
        auto decision = arrows(host, r, target, opts);
        result.stats.nodes += decision.stats.nodes;
        result.stats.prunes += decision.stats.prunes;
        if (decision.outcome == ArrowOutcome::unknown) {
            result.status = ExactStatus::unknown;
            result.value = n;
            return result;
        }
        if (decision.outcome == ArrowOutcome::arrows) {
            result.status = ExactStatus::found;
            result.value = n;
            result.witness_host = std::move(host);
            return result;
        }
    }
    result.status = ExactStatus::bound_only;
    result.value = static_cast<long long>(n_max) + 1;
    return result;
}

namespace detail {

// All isolated-vertex-free k-uniform hypergraphs with exactly one more edge
// than the parents, one representative per isomorphism class. New vertices
// are interchangeable, so a candidate edge is a subset of existing vertices
// plus a block of fresh ones.
inline std::vector<Hypergraph> extend_hosts(const std::vector<Hypergraph>& parents, int k,
                                            int vertex_limit) {
    std::map<std::vector<int>, Hypergraph> seen;
    auto consider = [&](const Hypergraph& parent, const Edge& extra) {
        std::vector<Edge> edges = parent.edges();
        edges.push_back(extra);
        int vc = parent.vertex_count();
        for (int v : extra) vc = std::max(vc, v + 1);
        Hypergraph candidate(k, vc, std::move(edges));
        auto label = canonical_form(candidate, vertex_limit);
        seen.emplace(std::move(label.code), std::move(candidate));
    };
    for (const auto& parent : parents) {
        const int v = parent.vertex_count();
        // choose j existing vertices, k-j fresh ones
        for (int j = k; j >= 0; --j) {
            if (v + (k - j) > vertex_limit) continue;
            std::vector<int> pick(static_cast<std::size_t>(j));
            std::function<void(int, int)> rec = [&](int pos, int start) {
                if (pos == j) {
                    Edge extra(pick.begin(), pick.end());
                    for (int t = 0; t < k - j; ++t) extra.push_back(v + t);
                    std::sort(extra.begin(), extra.end());
                    if (j == k && parent.has_edge(extra)) return;
                    consider(parent, extra);
                    return;
                }
                for (int x = start; x < v; ++x) {
                    pick[static_cast<std::size_t>(pos)] = x;
                    rec(pos + 1, x + 1);
                }
            };
            rec(0, 0);
        }
    }
    std::vector<Hypergraph> out;
    for (auto& [code, host] : seen) out.push_back(std::move(host));
    return out;  // ordered by canonical code
}

inline bool host_contains_target(const Hypergraph& h, const Target& t) {
    EdgeColoring mono(std::vector<int>(static_cast<std::size_t>(h.edge_count()), 0), 1);
    return coloring_contains_target(h, mono, t);
}

}  // namespace detail

/// Minimum edge count of a k-graph arrowing the target, scanning hosts by
/// increasing edge count up to edge_budget with isomorph rejection; certifies
/// the lower bound edge_budget+1 when none arrows. The witness is the
/// arrowing host with the least canonical code at the optimal edge count.
inline ExactResult size_ramsey_exact(const Target& target, int r, int edge_budget,
                                     const SearchOptions& opts = {}) {
    if (r < 1) throw std::invalid_argument("need at least one color");
    const int k = target_uniformity(target);
    const int vertex_limit = std::max(16, k * edge_budget);
    const int floor_edges = target_edge_floor(target);

    ExactResult result;
    std::vector<Hypergraph> level{complete_hypergraph(k, k)};  // the single edge
    for (int m = 1; m <= edge_budget; ++m) {
        if (m > 1) level = detail::extend_hosts(level, k, vertex_limit);
        if (m >= floor_edges) {
            std::optional<Hypergraph> best;
            bool any_unknown = false;
            for (const auto& host : level) {
                if (!detail::host_contains_target(host, target)) continue;
                auto decision = arrows(host, r, target, opts);
                result.stats.nodes += decision.stats.nodes;
                result.stats.prunes += decision.stats.prunes;
                if (decision.outcome == ArrowOutcome::unknown) any_unknown = true;
                if (decision.outcome == ArrowOutcome::arrows && !best) best = host;
            }
            if (best) {
                result.status = ExactStatus::found;
                result.value = m;
                result.witness_host = std::move(best);
                return result;
            }
            if (any_unknown) {
                result.status = ExactStatus::unknown;
                result.value = m;
                return result;
            }
        }
    }
    result.status = ExactStatus::bound_only;
    result.value = static_cast<long long>(edge_budget) + 1;
    return result;
}

}  // namespace ramsey
