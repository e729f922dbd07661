#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "ramsey/hypergraph.hpp"

namespace ramsey {

/// Isomorphism-invariant label: equal codes iff the hypergraphs are isomorphic.
/// The code is ordered so that sparser-from-the-front hosts compare smaller,
/// which fixes the tie-break used when several witness hosts arrow a target.
struct CanonicalLabel {
    std::vector<int> code;

    bool operator==(const CanonicalLabel& o) const { return code == o.code; }
    bool operator!=(const CanonicalLabel& o) const { return code != o.code; }
    bool operator<(const CanonicalLabel& o) const { return code < o.code; }

    std::string bytes() const {
        std::string s;
        for (int x : code) {
            s += std::to_string(x);
            s += '.';
        }
        return s;
    }
};

namespace detail {

// One connected component, vertices reindexed to [0, n).
struct Component {
    int n = 0;
    std::vector<Edge> edges;
};

// Iterated color refinement: vertex key = (color, multiset of incident edge
// keys), edge key = multiset of member colors. Classes are ordered by key, so
// the resulting partition and its order are isomorphism-invariant.
inline std::vector<int> refine_colors(const Component& comp) {
    std::vector<int> color(static_cast<std::size_t>(comp.n), 0);
    int classes = 1;
    while (true) {
        std::vector<std::vector<int>> edge_key(comp.edges.size());
        for (std::size_t i = 0; i < comp.edges.size(); ++i) {
            for (int v : comp.edges[i]) edge_key[i].push_back(color[static_cast<std::size_t>(v)]);
            std::sort(edge_key[i].begin(), edge_key[i].end());
        }
        std::vector<std::vector<std::vector<int>>> incident(static_cast<std::size_t>(comp.n));
        for (std::size_t i = 0; i < comp.edges.size(); ++i)
            for (int v : comp.edges[i]) incident[static_cast<std::size_t>(v)].push_back(edge_key[i]);
        std::map<std::pair<int, std::vector<std::vector<int>>>, std::vector<int>> buckets;
        for (int v = 0; v < comp.n; ++v) {
            auto key = incident[static_cast<std::size_t>(v)];
            std::sort(key.begin(), key.end());
            buckets[{color[static_cast<std::size_t>(v)], std::move(key)}].push_back(v);
        }
        int next = 0;
        for (const auto& [key, members] : buckets) {
            for (int v : members) color[static_cast<std::size_t>(v)] = next;
            ++next;
        }
        if (next == classes) break;
        classes = next;
    }
    return color;
}

// u and v are clones when swapping them is an automorphism; clone subtrees of
// the labeling search are identical, so only one representative is tried.
inline bool are_clones(const Component& comp, int u, int v) {
    auto swapped = [&](Edge e) {
        for (int& x : e) {
            if (x == u) x = v;
            else if (x == v) x = u;
        }
        std::sort(e.begin(), e.end());
        return e;
    };
    std::vector<Edge> original = comp.edges;
    std::sort(original.begin(), original.end());
    for (const auto& e : comp.edges)
        if (!std::binary_search(original.begin(), original.end(), swapped(e))) return false;
    return true;
}

// Minimum labeling search. Labels are assigned class block by class block;
// after each assignment the group of edges completed by the new label is
// compared against the incumbent minimum for pruning.
class MinLabeling {
public:
    explicit MinLabeling(const Component& comp) : comp_(comp), color_(refine_colors(comp)) {
        order_.resize(static_cast<std::size_t>(comp_.n));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return color_[static_cast<std::size_t>(a)] < color_[static_cast<std::size_t>(b)];
        });
        clone_rep_.assign(static_cast<std::size_t>(comp_.n), -1);
        for (int v = 0; v < comp_.n; ++v) {
            if (clone_rep_[static_cast<std::size_t>(v)] != -1) continue;
            clone_rep_[static_cast<std::size_t>(v)] = v;
            for (int u = v + 1; u < comp_.n; ++u)
                if (clone_rep_[static_cast<std::size_t>(u)] == -1 &&
                    color_[static_cast<std::size_t>(u)] == color_[static_cast<std::size_t>(v)] &&
                    are_clones(comp_, v, u))
                    clone_rep_[static_cast<std::size_t>(u)] = v;
        }
        label_.assign(static_cast<std::size_t>(comp_.n), -1);
        groups_.resize(static_cast<std::size_t>(comp_.n));
    }

    // Encoding: per label p, the sorted list of edges whose maximum label is
    // p, each terminated by -1; then -2 and the vertex count.
    std::vector<int> run() {
        dfs(0, false);
        std::vector<int> code;
        for (const auto& g : best_) {
            for (const auto& e : g) {
                code.insert(code.end(), e.begin(), e.end());
            }
            code.push_back(-1);
        }
        code.push_back(-2);
        code.push_back(comp_.n);
        return code;
    }

private:
    std::vector<Edge> completed_group(int v, int p) const {
        std::vector<Edge> group;
        for (const auto& e : comp_.edges) {
            bool through = false, complete = true;
            for (int x : e) {
                if (x == v) through = true;
                else if (label_[static_cast<std::size_t>(x)] == -1) { complete = false; break; }
            }
            if (!through || !complete) continue;
            Edge relabeled;
            for (int x : e)
                relabeled.push_back(x == v ? p : label_[static_cast<std::size_t>(x)]);
            std::sort(relabeled.begin(), relabeled.end());
            group.push_back(std::move(relabeled));
        }
        std::sort(group.begin(), group.end());
        return group;
    }

    void dfs(int p, bool winning) {
        if (p == comp_.n) {
            // the winning flag may be stale once the incumbent was replaced
            // inside this subtree, so the leaf re-checks the full encoding
            if (!have_best_ || groups_ < best_) {
                best_ = groups_;
                have_best_ = true;
            }
            return;
        }
        std::vector<int> tried_reps;
        for (int idx = 0; idx < comp_.n; ++idx) {
            const int v = order_[static_cast<std::size_t>(idx)];
            if (label_[static_cast<std::size_t>(v)] != -1) continue;
            // stay within the first unfinished class block
            if (idx > 0) {
                bool earlier_unlabeled = false;
                for (int j = 0; j < idx; ++j) {
                    int u = order_[static_cast<std::size_t>(j)];
                    if (label_[static_cast<std::size_t>(u)] == -1 &&
                        color_[static_cast<std::size_t>(u)] < color_[static_cast<std::size_t>(v)]) {
                        earlier_unlabeled = true;
                        break;
                    }
                }
                if (earlier_unlabeled) break;
            }
            const int rep = clone_rep_[static_cast<std::size_t>(v)];
            if (std::find(tried_reps.begin(), tried_reps.end(), rep) != tried_reps.end()) continue;
            tried_reps.push_back(rep);

            auto group = completed_group(v, p);
            bool child_winning = winning;
            if (!child_winning && have_best_) {
                if (group > best_[static_cast<std::size_t>(p)]) continue;
                if (group < best_[static_cast<std::size_t>(p)]) child_winning = true;
            }
            label_[static_cast<std::size_t>(v)] = p;
            groups_[static_cast<std::size_t>(p)] = std::move(group);
            dfs(p + 1, child_winning);
            label_[static_cast<std::size_t>(v)] = -1;
        }
    }

    const Component& comp_;
    std::vector<int> color_;
    std::vector<int> order_;
    std::vector<int> clone_rep_;
    std::vector<int> label_;
    std::vector<std::vector<Edge>> groups_;
    std::vector<std::vector<Edge>> best_;
    bool have_best_ = false;
};

inline std::vector<Component> split_components(const Hypergraph& h) {
    std::vector<int> parent(static_cast<std::size_t>(h.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const auto& e : h.edges())
        for (std::size_t i = 1; i < e.size(); ++i) {
            int a = find(e[0]), b = find(e[i]);
            if (a != b) parent[static_cast<std::size_t>(b)] = a;
        }
    std::map<int, std::vector<int>> members;
    for (int v = 0; v < h.vertex_count(); ++v) members[find(v)].push_back(v);
    std::vector<Component> comps;
    for (auto& [root, verts] : members) {
        Component c;
        c.n = static_cast<int>(verts.size());
        std::map<int, int> local;
        for (int i = 0; i < c.n; ++i) local[verts[static_cast<std::size_t>(i)]] = i;
        for (const auto& e : h.edges()) {
            if (find(e[0]) != root) continue;
            Edge le;
            for (int v : e) le.push_back(local[v]);
            std::sort(le.begin(), le.end());
            c.edges.push_back(std::move(le));
        }
        comps.push_back(std::move(c));
    }
    return comps;
}

}  // namespace detail

/// Exact canonical form, intended for hosts with at most `vertex_limit`
/// vertices (per connected component the labeling search is exponential in
/// the worst case; components are canonicalized independently).
inline CanonicalLabel canonical_form(const Hypergraph& h, int vertex_limit = 16) {
    if (h.vertex_count() > vertex_limit)
        throw std::invalid_argument("canonical_form: vertex count exceeds configured limit");
    if (h.is_trivial_uniformity())
        return CanonicalLabel{{-4, h.has_empty_edge() ? 1 : 0, -3, h.vertex_count(), 0}};
    auto comps = detail::split_components(h);
    std::vector<std::vector<int>> codes;
    for (const auto& c : comps) {
        detail::MinLabeling search(c);
        codes.push_back(search.run());
    }
    std::sort(codes.begin(), codes.end());
    CanonicalLabel label;
    for (const auto& c : codes)
        label.code.insert(label.code.end(), c.begin(), c.end());
    label.code.push_back(-3);
    label.code.push_back(h.vertex_count());
    label.code.push_back(h.k());
    return label;
}

}  // namespace ramsey
