#pragma once

#include <algorithm>
#include <climits>
#include <optional>
#include <vector>

#include "ramsey/hypergraph.hpp"

namespace ramsey {

/// A concrete monochromatic (k,l)-path: every window of k consecutive
/// positions, stepped by k-l, is a host edge of the stated color.
struct PathWitness {
    std::vector<int> sequence;
    int color = 0;
};

struct CycleWitness {
    std::vector<int> cycle;  // cyclic vertex order
    int color = 0;
};

namespace detail {

// DFS over (k,l)-path sequences inside a single edge class.
//
// The search state is the ordered tail of the last l sequence positions: the
// next window is tail + (k-l) unused vertices. When l <= k-l the tail's
// internal order cannot influence later windows, so branching is over
// tail-sets; when l > k-l the appended block is permuted and the new tail
// reuses the old tail's last l-(k-l) entries.
class PathSearch {
public:
    PathSearch(const std::vector<const Edge*>& class_edges, int k, int ell, int vertex_count,
               int stop_at)
        : edges_(class_edges), k_(k), ell_(ell), stop_at_(stop_at),
          used_(static_cast<std::size_t>(vertex_count), 0) {}

    // Longest reachable sequence length (0 when the class is empty), with one
    // witness sequence of that length.
    int run(std::vector<int>& best_seq) {
        best_len_ = 0;
        best_seq_.clear();
        for (const Edge* e : edges_) {
            enumerate_initial_tails(*e);
            if (best_len_ >= stop_at_) break;
        }
        best_seq = best_seq_;
        return best_len_;
    }

private:
    void enumerate_initial_tails(const Edge& e) {
        for (int v : e) used_[static_cast<std::size_t>(v)] = 1;
        if (ell_ == 0) {
            seq_ = e;
            record_and_extend();
        } else if (ell_ <= k_ - ell_) {
            Edge tail(static_cast<std::size_t>(ell_));
            for_each_subset(e, tail, 0, 0, [&] {
                seq_ = edge_difference(e, tail);
                seq_.insert(seq_.end(), tail.begin(), tail.end());
                record_and_extend();
            });
        } else {
            Edge tail(static_cast<std::size_t>(ell_));
            std::vector<char> taken(e.size(), 0);
            for_each_ordered_tuple(e, tail, taken, 0, [&] {
                seq_ = edge_difference(e, tail);
                seq_.insert(seq_.end(), tail.begin(), tail.end());
                record_and_extend();
            });
        }
        for (int v : e) used_[static_cast<std::size_t>(v)] = 0;
    }

    void record_and_extend() {
        const int len = static_cast<int>(seq_.size());
        if (len > best_len_) {
            best_len_ = len;
            best_seq_ = seq_;
        }
        if (best_len_ >= stop_at_) return;
        const int step = k_ - ell_;
        for (const Edge* next : edges_) {
            // next must meet the current path exactly in the tail set
            if (!tail_subset_of(*next)) continue;
            Edge fresh;
            fresh.reserve(static_cast<std::size_t>(step));
            bool clean = true;
            for (int v : *next) {
                if (!in_tail(v)) {
                    if (used_[static_cast<std::size_t>(v)]) { clean = false; break; }
                    fresh.push_back(v);
                }
            }
            if (!clean || static_cast<int>(fresh.size()) != step) continue;
            extend_with(fresh);
            if (best_len_ >= stop_at_) return;
        }
    }

    void extend_with(const Edge& fresh) {
        for (int v : fresh) used_[static_cast<std::size_t>(v)] = 1;
        const std::size_t base = seq_.size();
        if (ell_ == 0) {
            seq_.insert(seq_.end(), fresh.begin(), fresh.end());
            record_and_extend();
            seq_.resize(base);
        } else if (ell_ <= k_ - ell_) {
            Edge tail(static_cast<std::size_t>(ell_));
            for_each_subset(fresh, tail, 0, 0, [&] {
                Edge lead = edge_difference(fresh, tail);
                seq_.insert(seq_.end(), lead.begin(), lead.end());
                seq_.insert(seq_.end(), tail.begin(), tail.end());
                record_and_extend();
                seq_.resize(base);
            });
        } else {
            std::vector<char> taken(fresh.size(), 0);
            Edge block(fresh.size());
            for_each_ordered_tuple(fresh, block, taken, 0, [&] {
                seq_.insert(seq_.end(), block.begin(), block.end());
                record_and_extend();
                seq_.resize(base);
            });
        }
        for (int v : fresh) used_[static_cast<std::size_t>(v)] = 0;
    }

    bool in_tail(int v) const {
        const std::size_t len = seq_.size();
        for (int i = 0; i < ell_; ++i)
            if (seq_[len - 1 - static_cast<std::size_t>(i)] == v) return true;
        return false;
    }

    bool tail_subset_of(const Edge& e) const {
        const std::size_t len = seq_.size();
        for (int i = 0; i < ell_; ++i)
            if (!edge_contains(e, seq_[len - 1 - static_cast<std::size_t>(i)])) return false;
        return true;
    }

    template <typename F>
    void for_each_subset(const Edge& pool, Edge& out, int pos, int start, const F& f) {
        if (pos == static_cast<int>(out.size())) {
            f();
            return;
        }
        for (int i = start; i < static_cast<int>(pool.size()); ++i) {
            out[static_cast<std::size_t>(pos)] = pool[static_cast<std::size_t>(i)];
            for_each_subset(pool, out, pos + 1, i + 1, f);
        }
    }

    template <typename F>
    void for_each_ordered_tuple(const Edge& pool, Edge& out, std::vector<char>& taken, int pos,
                                const F& f) {
        if (pos == static_cast<int>(out.size())) {
            f();
            return;
        }
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (taken[i]) continue;
            taken[i] = 1;
            out[static_cast<std::size_t>(pos)] = pool[i];
            for_each_ordered_tuple(pool, out, taken, pos + 1, f);
            taken[i] = 0;
        }
    }

    const std::vector<const Edge*>& edges_;
    int k_, ell_, stop_at_;
    std::vector<char> used_;
    std::vector<int> seq_;
    int best_len_ = 0;
    std::vector<int> best_seq_;
};

inline std::vector<const Edge*> class_pointers(const Hypergraph& h, const EdgeColoring& coloring,
                                               int color) {
    std::vector<const Edge*> out;
    for (int i = 0; i < h.edge_count(); ++i)
        if (coloring.color_of[static_cast<std::size_t>(i)] == color) out.push_back(&h.edge(i));
    return out;
}

}  // namespace detail

struct ColorPathMax {
    int max_vertices = 0;
    std::optional<PathWitness> witness;
};

/// Per color, the exact maximum p such that a monochromatic (k,l)-path on p
/// vertices exists; 0 for empty color classes.
inline std::vector<ColorPathMax> longest_mono_path(const Hypergraph& h,
                                                   const EdgeColoring& coloring, int k, int ell) {
    if (h.k() != k) throw std::invalid_argument("uniformity mismatch");
    if (coloring.size() != h.edge_count()) throw std::invalid_argument("coloring not total");
    std::vector<ColorPathMax> out(static_cast<std::size_t>(coloring.num_colors));
    for (int c = 0; c < coloring.num_colors; ++c) {
        auto cls = detail::class_pointers(h, coloring, c);
        if (cls.empty()) continue;
        detail::PathSearch search(cls, k, ell, h.vertex_count(), INT_MAX);
        std::vector<int> seq;
        out[static_cast<std::size_t>(c)].max_vertices = search.run(seq);
        if (!seq.empty()) out[static_cast<std::size_t>(c)].witness = PathWitness{seq, c};
    }
    return out;
}

/// Shortest-circuit detector for a monochromatic copy of the target path.
inline std::optional<PathWitness> contains_mono_path(const Hypergraph& h,
                                                     const EdgeColoring& coloring,
                                                     const PathSpec& spec) {
    if (spec.k != h.k()) throw std::invalid_argument("uniformity mismatch");
    if (coloring.size() != h.edge_count()) throw std::invalid_argument("coloring not total");
    const int m = spec.edge_count();
    for (int c = 0; c < coloring.num_colors; ++c) {
        auto cls = detail::class_pointers(h, coloring, c);
        if (static_cast<int>(cls.size()) < m) continue;
        detail::PathSearch search(cls, spec.k, spec.ell, h.vertex_count(), spec.n);
        std::vector<int> seq;
        if (search.run(seq) >= spec.n) return PathWitness{seq, c};
    }
    return std::nullopt;
}

/// Single-class variant used by the backtracking decider.
inline bool class_contains_path(const std::vector<const Edge*>& class_edges, int vertex_count,
                                const PathSpec& spec) {
    if (static_cast<int>(class_edges.size()) < spec.edge_count()) return false;
    detail::PathSearch search(class_edges, spec.k, spec.ell, vertex_count, spec.n);
    std::vector<int> seq;
    return search.run(seq) >= spec.n;
}

/// Replays a witness: injectivity, window membership, color.
inline bool verify_path_witness(const Hypergraph& h, const EdgeColoring& coloring,
                                const PathSpec& spec, const PathWitness& w) {
    if (static_cast<int>(w.sequence.size()) != spec.n) return false;
    std::set<int> distinct(w.sequence.begin(), w.sequence.end());
    if (static_cast<int>(distinct.size()) != spec.n) return false;
    const int step = spec.k - spec.ell;
    for (int i = 0; i < spec.edge_count(); ++i) {
        Edge window(w.sequence.begin() + i * step, w.sequence.begin() + i * step + spec.k);
        std::sort(window.begin(), window.end());
        bool found = false;
        for (int j = 0; j < h.edge_count(); ++j) {
            if (h.edge(j) == window && coloring.color_of[static_cast<std::size_t>(j)] == w.color) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

namespace detail {

class TightCycleSearch {
public:
    TightCycleSearch(const std::vector<const Edge*>& class_edges, int k, int min_length,
                     int vertex_count)
        : edges_(class_edges), k_(k), min_length_(min_length),
          used_(static_cast<std::size_t>(vertex_count), 0) {}

    std::optional<std::vector<int>> run() {
        // canonical representative: the cycle is rotated so that it starts at
        // its minimum vertex, and reflected so the second entry is smaller
        // than the last
        for (const Edge* e : edges_) {
            const int c0 = (*e)[0];
            Edge rest(e->begin() + 1, e->end());
            std::vector<char> taken(rest.size(), 0);
            std::vector<int> order(rest.size());
            if (try_orders(*e, c0, rest, taken, order, 0)) return found_;
        }
        return std::nullopt;
    }

private:
    bool try_orders(const Edge& e, int c0, const Edge& rest, std::vector<char>& taken,
                    std::vector<int>& order, int pos) {
        if (pos == static_cast<int>(rest.size())) {
            seq_.assign(1, c0);
            seq_.insert(seq_.end(), order.begin(), order.end());
            for (int v : seq_) used_[static_cast<std::size_t>(v)] = 1;
            bool ok = extend();
            for (int v : seq_) used_[static_cast<std::size_t>(v)] = 0;
            return ok;
        }
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (taken[i]) continue;
            taken[i] = 1;
            order[static_cast<std::size_t>(pos)] = rest[i];
            if (try_orders(e, c0, rest, taken, order, pos + 1)) return true;
            taken[i] = 0;
        }
        return false;
    }

    bool class_has(Edge window) const {
        std::sort(window.begin(), window.end());
        for (const Edge* e : edges_)
            if (*e == window) return true;
        return false;
    }

    bool can_close() const {
        const int p = static_cast<int>(seq_.size());
        if (p < min_length_ || p < k_ + 1) return false;
        if (seq_[1] > seq_[static_cast<std::size_t>(p - 1)]) return false;  // reflection
        for (int s = p - k_ + 1; s < p; ++s) {
            Edge window;
            for (int t = 0; t < k_; ++t)
                window.push_back(seq_[static_cast<std::size_t>((s + t) % p)]);
            if (!class_has(std::move(window))) return false;
        }
        return true;
    }

    bool extend() {
        if (can_close()) {
            found_ = seq_;
            return true;
        }
        for (const Edge* e : edges_) {
            // window = last k-1 sequence entries + one unused vertex > seq_[0]
            bool tail_ok = true;
            for (int i = 1; i < k_; ++i) {
                if (!edge_contains(*e, seq_[seq_.size() - static_cast<std::size_t>(i)])) {
                    tail_ok = false;
                    break;
                }
            }
            if (!tail_ok) continue;
            for (int v : *e) {
                if (used_[static_cast<std::size_t>(v)] || v < seq_[0]) continue;
                bool in_tail = false;
                for (int i = 1; i < k_; ++i)
                    if (seq_[seq_.size() - static_cast<std::size_t>(i)] == v) { in_tail = true; break; }
                if (in_tail) continue;
                used_[static_cast<std::size_t>(v)] = 1;
                seq_.push_back(v);
                if (extend()) return true;
                seq_.pop_back();
                used_[static_cast<std::size_t>(v)] = 0;
            }
        }
        return false;
    }

    const std::vector<const Edge*>& edges_;
    int k_, min_length_;
    std::vector<char> used_;
    std::vector<int> seq_;
    std::vector<int> found_;
};

}  // namespace detail

/// True iff some color class contains a tight cycle on >= min_length vertices.
inline std::optional<CycleWitness> contains_mono_tight_cycle_geq(const Hypergraph& h,
                                                                 const EdgeColoring& coloring,
                                                                 const CycleSpec& cycle) {
    if (cycle.k != h.k()) throw std::invalid_argument("uniformity mismatch");
    if (coloring.size() != h.edge_count()) throw std::invalid_argument("coloring not total");
    for (int c = 0; c < coloring.num_colors; ++c) {
        auto cls = detail::class_pointers(h, coloring, c);
        if (static_cast<int>(cls.size()) < cycle.min_length) continue;
        detail::TightCycleSearch search(cls, cycle.k, cycle.min_length, h.vertex_count());
        if (auto found = search.run()) return CycleWitness{*found, c};
    }
    return std::nullopt;
}

inline bool class_contains_tight_cycle(const std::vector<const Edge*>& class_edges,
                                       int vertex_count, const CycleSpec& cycle) {
    if (static_cast<int>(class_edges.size()) < cycle.min_length) return false;
    detail::TightCycleSearch search(class_edges, cycle.k, cycle.min_length, vertex_count);
    return search.run().has_value();
}

}  // namespace ramsey
