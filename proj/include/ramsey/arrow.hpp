#pragma once

#include <atomic>
#include <climits>
#include <optional>
#include <thread>
#include <variant>
#include <vector>

#include "ramsey/hypergraph.hpp"
#include "ramsey/pathfind.hpp"

namespace ramsey {

/// Either a path pattern or the tight-cycle-length family.
using Target = std::variant<PathSpec, CycleSpec>;

inline int target_uniformity(const Target& t) {
    return std::visit([](const auto& s) { return s.k; }, t);
}

inline int target_edge_floor(const Target& t) {
    if (std::holds_alternative<PathSpec>(t)) return std::get<PathSpec>(t).edge_count();
    return std::get<CycleSpec>(t).min_length;  // a tight cycle on p vertices has p edges
}

inline bool class_contains_target(const std::vector<const Edge*>& cls, int vertex_count,
                                  const Target& t) {
    if (std::holds_alternative<PathSpec>(t))
        return class_contains_path(cls, vertex_count, std::get<PathSpec>(t));
    return class_contains_tight_cycle(cls, vertex_count, std::get<CycleSpec>(t));
}

/// True iff some color class contains the target.
inline bool coloring_contains_target(const Hypergraph& h, const EdgeColoring& coloring,
                                     const Target& t) {
    for (int c = 0; c < coloring.num_colors; ++c) {
        auto cls = detail::class_pointers(h, coloring, c);
        if (class_contains_target(cls, h.vertex_count(), t)) return true;
    }
    return false;
}

enum class ArrowOutcome { arrows, avoided, unknown };

inline const char* to_string(ArrowOutcome o) {
    switch (o) {
        case ArrowOutcome::arrows: return "arrows";
        case ArrowOutcome::avoided: return "avoided";
        default: return "unknown";
    }
}

struct SearchStats {
    long long nodes = 0;
    long long prunes = 0;
};

struct ArrowDecision {
    ArrowOutcome outcome = ArrowOutcome::unknown;
    std::optional<EdgeColoring> witness;  // avoiding coloring, original edge order
    SearchStats stats;
};

struct SearchOptions {
    long long node_budget = 50'000'000;  // per search subtree
    int threads = 1;
};

namespace detail {

// Backtracking over edge colorings in a fixed static order (descending
// degree-sum). A color is admissible iff the extended class still avoids the
// target; an edge may only use colors up to 1 + the maximum used before it
// (first-seen symmetry breaking). Subtrees below a fixed split depth are
// distributed over worker threads; the split is independent of the thread
// count so outcomes and witnesses are reproducible.
class ArrowSearch {
public:
    ArrowSearch(const Hypergraph& h, int r, const Target& target, const SearchOptions& opts)
        : h_(h), r_(r), target_(target), opts_(opts) {
        const int m = h.edge_count();
        auto deg = h.degrees();
        std::vector<std::pair<long long, int>> keyed;
        for (int i = 0; i < m; ++i) {
            long long sum = 0;
            for (int v : h.edge(i)) sum += deg[static_cast<std::size_t>(v)];
            keyed.push_back({-sum, i});
        }
        std::stable_sort(keyed.begin(), keyed.end());
        for (auto& [key, idx] : keyed) order_.push_back(idx);
    }

    ArrowDecision run() {
        ArrowDecision result;
        const int m = h_.edge_count();
        if (m == 0) {
            result.outcome = ArrowOutcome::avoided;
            result.witness = EdgeColoring(std::vector<int>{}, r_);
            return result;
        }

        // breadth-first prefix enumeration down to the split depth
        std::vector<Prefix> frontier{Prefix{}};
        int depth = 0;
        long long enum_nodes = 0, enum_prunes = 0;
        while (depth < m && static_cast<int>(frontier.size()) < kSplitWidth) {
            std::vector<Prefix> next;
            for (const auto& p : frontier) {
                const int limit = std::min(r_ - 1, p.max_used + 1);
                for (int c = 0; c <= limit; ++c) {
                    ++enum_nodes;
                    Prefix q = p;
                    q.colors.push_back(c);
                    q.max_used = std::max(p.max_used, c);
                    if (prefix_admissible(q)) next.push_back(std::move(q));
                    else ++enum_prunes;
                }
            }
            frontier = std::move(next);
            ++depth;
            if (frontier.empty()) {
                result.outcome = ArrowOutcome::arrows;
                result.stats = {enum_nodes, enum_prunes};
                return result;
            }
        }
        result.stats.nodes = enum_nodes;
        result.stats.prunes = enum_prunes;

        if (depth == m) {
            // prefixes are complete colorings; the first admissible one in
            // enumeration order is the lexicographically least witness
            result.outcome = ArrowOutcome::avoided;
            result.witness = to_original(frontier.front().colors);
            return result;
        }

        // worker pass over subtree tasks
        std::vector<TaskResult> task_results(frontier.size());
        std::atomic<std::size_t> next_task{0};
        std::atomic<long long> best_witness_task{LLONG_MAX};
        auto worker = [&] {
            while (true) {
                const std::size_t t = next_task.fetch_add(1);
                if (t >= frontier.size()) break;
                if (static_cast<long long>(t) > best_witness_task.load()) {
                    task_results[t].skipped = true;
                    continue;
                }
                run_task(frontier[t], task_results[t]);
                if (task_results[t].witness) {
                    long long cur = best_witness_task.load();
                    while (static_cast<long long>(t) < cur &&
                           !best_witness_task.compare_exchange_weak(cur, static_cast<long long>(t))) {
                    }
                }
            }
        };
        const int nthreads = std::max(1, opts_.threads);
        if (nthreads == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }

        bool any_unknown = false;
        for (std::size_t t = 0; t < frontier.size(); ++t) {
            const auto& tr = task_results[t];
            result.stats.nodes += tr.stats.nodes;
            result.stats.prunes += tr.stats.prunes;
            if (tr.skipped) continue;
            if (tr.witness) {
                result.outcome = ArrowOutcome::avoided;
                result.witness = to_original(*tr.witness);
                return result;
            }
            if (tr.budget_exhausted) any_unknown = true;
        }
        result.outcome = any_unknown ? ArrowOutcome::unknown : ArrowOutcome::arrows;
        return result;
    }

private:
    static constexpr int kSplitWidth = 64;

    struct Prefix {
        std::vector<int> colors;  // by search position
        int max_used = -1;
    };

    struct TaskResult {
        std::optional<std::vector<int>> witness;
        SearchStats stats;
        bool budget_exhausted = false;
        bool skipped = false;
    };

    bool prefix_admissible(const Prefix& p) const {
        // only the last assignment needs re-checking
        const int pos = static_cast<int>(p.colors.size()) - 1;
        const int c = p.colors[static_cast<std::size_t>(pos)];
        std::vector<const Edge*> cls;
        for (int i = 0; i <= pos; ++i)
            if (p.colors[static_cast<std::size_t>(i)] == c)
                cls.push_back(&h_.edge(order_[static_cast<std::size_t>(i)]));
        return !class_contains_target(cls, h_.vertex_count(), target_);
    }

    EdgeColoring to_original(const std::vector<int>& by_position) const {
        std::vector<int> colors(static_cast<std::size_t>(h_.edge_count()), 0);
        for (std::size_t pos = 0; pos < by_position.size(); ++pos)
            colors[static_cast<std::size_t>(order_[pos])] = by_position[pos];
        return EdgeColoring(colors, r_);
    }

    // Depth-first completion of one prefix; finds the first (lex least)
    // avoiding coloring below it, if any.
    void run_task(const Prefix& prefix, TaskResult& out) const {
        const int m = h_.edge_count();
        std::vector<std::vector<const Edge*>> classes(static_cast<std::size_t>(r_));
        for (std::size_t i = 0; i < prefix.colors.size(); ++i)
            classes[static_cast<std::size_t>(prefix.colors[i])].push_back(
                &h_.edge(order_[i]));
        std::vector<int> colors = prefix.colors;
        int max_used = prefix.max_used;

        std::function<bool(int)> dfs = [&](int pos) -> bool {
            if (pos == m) {
                out.witness = colors;
                return true;
            }
            if (out.stats.nodes >= opts_.node_budget) {
                out.budget_exhausted = true;
                return true;  // abort
            }
            const Edge* e = &h_.edge(order_[static_cast<std::size_t>(pos)]);
            const int limit = std::min(r_ - 1, max_used + 1);
            for (int c = 0; c <= limit; ++c) {
                ++out.stats.nodes;
                auto& cls = classes[static_cast<std::size_t>(c)];
                cls.push_back(e);
                if (!class_contains_target(cls, h_.vertex_count(), target_)) {
                    colors.push_back(c);
                    const int prev_max = max_used;
                    max_used = std::max(max_used, c);
                    if (dfs(pos + 1)) return true;
                    max_used = prev_max;
                    colors.pop_back();
                } else {
                    ++out.stats.prunes;
                }
                cls.pop_back();
            }
            return false;
        };
        dfs(static_cast<int>(prefix.colors.size()));
        if (out.budget_exhausted) out.witness.reset();
    }

    const Hypergraph& h_;
    int r_;
    Target target_;
    SearchOptions opts_;
    std::vector<int> order_;
};

}  // namespace detail

// Decides G ->_r target exactly: Arrows iff every r-coloring of the edges
// contains a monochromatic copy; Avoided returns a concrete avoiding
// coloring. Budget exhaustion is reported as unknown, never as a decision.
inline ArrowDecision arrows(const Hypergraph& h, int r, const Target& target,
                            const SearchOptions& opts = {}) {
    if (r < 1) throw std::invalid_argument("need at least one color");
    if (target_uniformity(target) != h.k()) throw std::invalid_argument("uniformity mismatch");
    detail::ArrowSearch search(h, r, target, opts);
    return search.run();
}

}  // namespace ramsey
