#include <catch2/catch_amalgamated.hpp>

#include "ramsey/construct.hpp"
#include "ramsey/pathfind.hpp"
#include "test_util.hpp"

using namespace ramsey;

TEST_CASE("partite majority coloring avoids the target") {
    SECTION("two colors, graph P4") {
        auto afl = afl_coloring(2, path_spec(2, 1, 4));
        CHECK(afl.host.vertex_count() == 4);  // (r-1)(m'-1) + n-1 = 1*1 + 3
        CHECK(!contains_mono_path(afl.host, afl.coloring, path_spec(2, 1, 4)));
        // classes below r have small matchings, the last class spans < n vertices
        auto classes = afl.coloring.classes();
        for (int i = 0; i + 1 < afl.coloring.num_colors; ++i)
            CHECK(matching_number(afl.host, classes[static_cast<std::size_t>(i)]) < afl.m_prime);
        std::set<int> span;
        for (int e : classes.back())
            span.insert(afl.host.edge(e).begin(), afl.host.edge(e).end());
        CHECK(static_cast<int>(span.size()) < 4);
    }
    SECTION("degenerate empty parts") {
        auto afl = afl_coloring(3, path_spec(3, 2, 5));
        CHECK(afl.host.vertex_count() == 4);  // m' = 1, two empty parts
        CHECK(afl.m_prime == 1);
        for (int c : afl.coloring.color_of) CHECK(c == 2);
        CHECK(!contains_mono_path(afl.host, afl.coloring, path_spec(3, 2, 5)));
    }
    SECTION("loose 3-uniform instance checked by detector") {
        auto afl = afl_coloring(2, path_spec(3, 1, 7));
        CHECK(!contains_mono_path(afl.host, afl.coloring, path_spec(3, 1, 7)));
    }
}

TEST_CASE("layered degree coloring") {
    SECTION("disjoint edges, one layer") {
        std::vector<Edge> edges;
        for (int i = 0; i < 3; ++i) edges.push_back({2 * i, 2 * i + 1});
        Hypergraph h(2, 6, edges);
        auto hc = hierarchy_coloring(h, 1, 3, 1);
        CHECK(hc.trace.f == 2);
        CHECK(hc.trace.g == 1);
        CHECK(hc.trace.colors_used <= 2 * 3 * 2 + 1);
        CHECK(!contains_mono_path(h, hc.coloring, path_spec(2, 1, 3)));
    }
    SECTION("two layers on a 3-graph") {
        std::mt19937_64 rng(91);
        const int r = 4;
        // g(3,2,2) = 3, so the hypothesis allows floor(16/3) = 5 edges
        auto h = testutil::random_hypergraph(rng, 3, 9, 5);
        auto hc = hierarchy_coloring(h, 2, r, 2);
        CHECK(hc.trace.layers.size() == 3);
        CHECK(hc.trace.layers[2].edge_count() == 0);
        CHECK(hc.trace.max_out_degree <= r * hc.trace.f);
        CHECK(hc.trace.colors_used <= 2 * r * hc.trace.f + 1);
        CHECK(!contains_mono_path(h, hc.coloring, path_spec(3, 2, 5)));
        // longer paths are avoided a fortiori
        CHECK(!contains_mono_path(h, hc.coloring, path_spec(3, 2, 7)));
    }
    SECTION("single edge uses one color") {
        Hypergraph h(3, 3, {{0, 1, 2}});
        auto hc = hierarchy_coloring(h, 2, 2, 1);
        CHECK(hc.coloring.colors_used() == 1);
    }
    SECTION("hypothesis violation is an explicit error") {
        auto k5 = complete_hypergraph(5, 2);  // 10 edges > r^1/g = 2
        CHECK_THROWS_AS(hierarchy_coloring(k5, 1, 2, 1), std::invalid_argument);
    }
    SECTION("full-k overlap with the trivial top layer") {
        // k=2, l=1, m=2: t = [2,1,0], top layer is the 0-graph
        std::mt19937_64 rng(93);
        const int r = 3;  // allows floor(9/2) = 4 edges
        auto h = testutil::random_graph(rng, 8, 4);
        auto hc = hierarchy_coloring(h, 1, r, 2);
        CHECK(hc.trace.layers[2].is_trivial_uniformity());
        CHECK(!hc.trace.layers[2].has_empty_edge());
        CHECK(!contains_mono_path(h, hc.coloring, path_spec(2, 1, 4)));
    }
}

namespace {

Hypergraph composite_desk_host() {
    std::vector<Edge> edges;
    for (int i = 1; i <= 8; ++i) {
        Edge e{0, i, i % 8 + 1};
        std::sort(e.begin(), e.end());
        edges.push_back(e);
    }
    edges.push_back({1, 4, 7});
    edges.push_back({2, 5, 8});
    edges.push_back({3, 6, 9});
    return Hypergraph(3, 10, edges);
}

}  // namespace

TEST_CASE("composite coloring on the desk instance") {
    auto h = composite_desk_host();
    REQUIRE(h.edge_count() == 11);
    REQUIRE(h.degree(0) == 8);

    const int d_hat = 7;  // exact two-color size-Ramsey threshold of the link path
    auto cc = composite_coloring(h, 2, 2, 5, exhaustive_oracle(), 6,
                                 exhaustive_extension_oracle(), d_hat);

    // S-vertices have degree below d_hat
    for (int v : cc.trace.low_degree_set) CHECK(h.degree(v) < d_hat);
    // the partition is strongly independent on the S-side subgraph
    for (const auto& part : cc.trace.partition)
        for (const auto& e : h.edges()) {
            int hits = 0;
            for (int v : part)
                if (edge_contains(e, v)) ++hits;
            CHECK(hits <= 1);
        }
    CHECK(cc.trace.c <= (3 - 1) * (d_hat - 1) + 1);

    // no S-vertex link contains the short link path, in any color
    PathSpec link_target = cc.trace.link_target;
    for (int v : cc.trace.low_degree_set) {
        for (int color = 0; color < cc.coloring.num_colors; ++color) {
            std::vector<Edge> residues;
            for (int i = 0; i < h.edge_count(); ++i)
                if (cc.coloring.color_of[static_cast<std::size_t>(i)] == color &&
                    edge_contains(h.edge(i), v))
                    residues.push_back(edge_difference(h.edge(i), Edge{v}));
            CHECK(!testutil::naive_sequence_path(residues, h.vertex_count(), link_target));
        }
    }
    CHECK(!contains_mono_path(h, cc.coloring, path_spec(3, 2, cc.trace.guaranteed_n)));
}

TEST_CASE("composite coloring degenerate cases") {
    SECTION("all degrees above the threshold reduce to the base oracle") {
        auto k4 = complete_hypergraph(4, 3);  // every degree is 3
        auto cc = composite_coloring(k4, 2, 2, 5, exhaustive_oracle(), 20,
                                     exhaustive_extension_oracle(), 1);
        CHECK(cc.trace.low_degree_set.empty());
        CHECK(cc.trace.partition.empty());
    }
    SECTION("single edge gets one color") {
        Hypergraph h(3, 3, {{0, 1, 2}});
        auto cc = composite_coloring(h, 2, 2, 4, exhaustive_oracle(), 5,
                                     exhaustive_extension_oracle(), 7);
        CHECK(cc.coloring.colors_used() == 1);
    }
    SECTION("edge bound precondition is enforced") {
        auto k5 = complete_hypergraph(5, 3);
        CHECK_THROWS_AS(composite_coloring(k5, 2, 2, 5, exhaustive_oracle(), 2,
                                           exhaustive_extension_oracle(), 2),
                        std::invalid_argument);
    }
}

TEST_CASE("star arboricity coloring") {
    SECTION("four-cycle with four colors") {
        Hypergraph c4(2, 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
        auto coloring = star_arboricity_coloring(c4, 4);
        CHECK(coloring.colors_used() <= 4);
        for (int c = 0; c < coloring.num_colors; ++c) {
            std::vector<int> cls;
            for (int i = 0; i < 4; ++i)
                if (coloring.color_of[static_cast<std::size_t>(i)] == c) cls.push_back(i);
            CHECK(is_star_forest(c4, cls));
        }
        CHECK(!contains_mono_path(c4, coloring, path_spec(2, 1, 4)));
    }
    SECTION("K4 with four colors") {
        auto k4 = complete_hypergraph(4, 2);
        auto coloring = star_arboricity_coloring(k4, 4);
        CHECK(!contains_mono_path(k4, coloring, path_spec(2, 1, 4)));
    }
    SECTION("single edge, one color") {
        Hypergraph g(2, 2, {{0, 1}});
        CHECK(star_arboricity_coloring(g, 2).colors_used() == 1);
    }
    SECTION("edge budget enforced") {
        auto k4 = complete_hypergraph(4, 2);  // 6 edges > 9/2
        CHECK_THROWS_AS(star_arboricity_coloring(k4, 3), std::invalid_argument);
    }
    SECTION("odd color budget can fail with a density witness") {
        Hypergraph c4(2, 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
        try {
            star_arboricity_coloring(c4, 3);
            FAIL("expected the parity failure");
        } catch (const StarArbError& e) {
            CHECK(e.arboricity == 2);
            const int ew = e.witness.edge_count(), vw = e.witness.vertex_count();
            REQUIRE(vw >= 2);
            CHECK((ew + vw - 2) / (vw - 1) == 2);
        }
    }
}

TEST_CASE("loose path coloring") {
    SECTION("k=4, l=2, r=5 on a sparse host") {
        std::mt19937_64 rng(101);
        auto h = testutil::random_hypergraph(rng, 4, 40, 24);
        PathSpec spec(4, 2, 604);  // > 12 r^2 (k-l) + l = 602
        auto lc = loose_path_coloring(h, 5, spec, exhaustive_oracle(), 0);
        CHECK(lc.coloring.num_colors == 5);
        CHECK(lc.aux_max_degree < 5);
        CHECK(lc.max_component <= 12 * 5 * 5);
        CHECK(lc.base_colors == 2);
        CHECK(lc.fresh_colors == 3);
        CHECK(!contains_mono_path(h, lc.coloring, spec));
    }
    SECTION("r=2 requires an edgeless base side") {
        Hypergraph h(4, 4, {{0, 1, 2, 3}});
        PathSpec spec(4, 1, 101);  // > 12*4*3+1
        CHECK_THROWS_AS(loose_path_coloring(h, 2, spec, exhaustive_oracle(), 0),
                        std::invalid_argument);
    }
    SECTION("empty host yields an empty coloring") {
        Hypergraph h(4, 0, {});
        PathSpec spec(4, 2, 604);
        auto lc = loose_path_coloring(h, 5, spec, exhaustive_oracle(), 0);
        CHECK(lc.coloring.size() == 0);
    }
    SECTION("overlap above k/2 is rejected") {
        Hypergraph h(4, 5, {{0, 1, 2, 3}});
        CHECK_THROWS_AS(loose_path_coloring(h, 5, PathSpec(4, 3, 904), exhaustive_oracle(), 0),
                        std::invalid_argument);
    }
}

TEST_CASE("design coloring") {
    SECTION("resolvable 9-point system gives a 4-coloring of K9") {
        auto dc = design_coloring(sts9_fixture(), 2);
        CHECK(dc.coloring.num_colors == 4);
        CHECK(dc.host.edge_count() == 36);
        CHECK(!contains_mono_path(dc.host, dc.coloring, path_spec(2, 1, 4)));
        // within each color the cliques are pairwise disjoint (k-2 = 0)
        for (const auto& matching : dc.matchings)
            for (std::size_t a = 0; a < matching.size(); ++a)
                for (std::size_t b = a + 1; b < matching.size(); ++b) {
                    const auto& ca = sts9_fixture().cliques[static_cast<std::size_t>(matching[a])];
                    const auto& cb = sts9_fixture().cliques[static_cast<std::size_t>(matching[b])];
                    Edge ea(ca.begin(), ca.end()), eb(cb.begin(), cb.end());
                    std::sort(ea.begin(), ea.end());
                    std::sort(eb.begin(), eb.end());
                    CHECK(intersection_size(ea, eb) == 0);
                }
    }
    SECTION("Fano system colors K7 line by line") {
        auto dc = design_coloring(sts7_fixture(), 2);
        CHECK(dc.host.edge_count() == 21);
        CHECK(dc.coloring.num_colors == 7);
        CHECK(!contains_mono_path(dc.host, dc.coloring, path_spec(2, 1, 4)));
    }
    SECTION("trivial decomposition of K3 by itself") {
        DesignInput d;
        d.N = 3;
        d.clique_order = 3;
        d.cliques = {{0, 1, 2}};
        auto dc = design_coloring(d, 2);
        CHECK(dc.coloring.num_colors == 1);
    }
    SECTION("broken covers are rejected") {
        auto d = sts9_fixture();
        d.cliques.pop_back();
        d.resolution.reset();
        CHECK_THROWS_AS(design_coloring(d, 2), std::invalid_argument);
    }
}
