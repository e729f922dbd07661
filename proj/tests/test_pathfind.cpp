#include <catch2/catch_amalgamated.hpp>

#include "ramsey/pathfind.hpp"
#include "test_util.hpp"

using namespace ramsey;

namespace {

EdgeColoring mono(const Hypergraph& h) {
    return EdgeColoring(std::vector<int>(static_cast<std::size_t>(h.edge_count()), 0), 1);
}

}  // namespace

TEST_CASE("longest path on the path host itself") {
    auto p4 = generate_path(path_spec(2, 1, 4));
    auto result = longest_mono_path(p4, mono(p4), 2, 1);
    CHECK(result[0].max_vertices == 4);
    REQUIRE(result[0].witness);
    CHECK(verify_path_witness(p4, mono(p4), path_spec(2, 1, 4), *result[0].witness));
}

TEST_CASE("triangle/star split of K4 has no mono P4") {
    auto k4 = complete_hypergraph(4, 2);
    std::vector<int> colors;
    for (const auto& e : k4.edges()) colors.push_back(edge_contains(e, 3) ? 1 : 0);
    EdgeColoring coloring(colors, 2);
    auto result = longest_mono_path(k4, coloring, 2, 1);
    CHECK(result[0].max_vertices == 3);
    CHECK(result[1].max_vertices == 3);
    CHECK(!contains_mono_path(k4, coloring, path_spec(2, 1, 4)));
}

TEST_CASE("K5^(3) single color has a tight Hamilton path") {
    auto k5 = complete_hypergraph(5, 3);
    auto result = longest_mono_path(k5, mono(k5), 3, 2);
    CHECK(result[0].max_vertices == 5);
}

TEST_CASE("empty color classes report zero") {
    auto p4 = generate_path(path_spec(2, 1, 4));
    EdgeColoring coloring(std::vector<int>(3, 0), 2);
    auto result = longest_mono_path(p4, coloring, 2, 1);
    CHECK(result[1].max_vertices == 0);
    CHECK(!result[1].witness);
}

TEST_CASE("single edge is a path on k vertices") {
    Hypergraph h(3, 3, {{0, 1, 2}});
    auto hit = contains_mono_path(h, mono(h), path_spec(3, 2, 3));
    REQUIRE(hit);
    CHECK(hit->sequence.size() == 3);
}

TEST_CASE("every 2-coloring of K5 has a monochromatic P4") {
    auto k5 = complete_hypergraph(5, 2);
    const int m = k5.edge_count();
    REQUIRE(m == 10);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> colors;
        for (int i = 0; i < m; ++i) colors.push_back(mask >> i & 1);
        if (!contains_mono_path(k5, EdgeColoring(colors, 2), path_spec(2, 1, 4))) {
            FAIL("avoiding coloring found at mask " << mask);
        }
    }
}

TEST_CASE("uniformity mismatch is rejected") {
    auto k4 = complete_hypergraph(4, 2);
    CHECK_THROWS_AS(contains_mono_path(k4, mono(k4), path_spec(3, 2, 5)),
                    std::invalid_argument);
}

TEST_CASE("interior links of paths contain the short link path") {
    // interior vertex of a (k,l)-path has the (k-1,l-1)-path with
    // floor(k/(k-l)) edges inside its link
    struct Case { int k, ell, n, v; };
    for (auto [k, ell, n, v] : {Case{3, 2, 7, 3}, Case{3, 2, 9, 4}, Case{4, 3, 10, 4},
                                Case{4, 2, 10, 4}}) {
        auto p = generate_path(path_spec(k, ell, n));
        auto link = link_graph(p, v);
        const int window = k / (k - ell);
        const int q = (ell - 1) + window * (k - ell);
        auto lspec = path_spec(k - 1, ell - 1, q);
        EdgeColoring all(std::vector<int>(static_cast<std::size_t>(link.edge_count()), 0), 1);
        CHECK(contains_mono_path(link, all, lspec));
    }
}

TEST_CASE("DFS agrees with the naive sequence oracle") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        int k = 2 + static_cast<int>(rng() % 3);
        int ell = 1 + static_cast<int>(rng() % (k - 1));
        if (rng() % 5 == 0) ell = 0;
        int vertices = std::min<int>(7, k + 1 + static_cast<int>(rng() % 5));
        if (vertices < k) vertices = k;
        int edges = 1 + static_cast<int>(rng() % 8);
        auto h = testutil::random_hypergraph(rng, k, vertices, edges);
        auto result = longest_mono_path(h, mono(h), k, ell);
        std::vector<Edge> cls = h.edges();
        CHECK(result[0].max_vertices == testutil::naive_longest(cls, vertices, k, ell));
        if (result[0].witness) {
            auto spec = path_spec(k, ell, result[0].max_vertices);
            CHECK(verify_path_witness(h, mono(h), spec, *result[0].witness));
        }
    }
}

TEST_CASE("matchings are found as zero-overlap paths") {
    Hypergraph h(3, 9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
    auto result = longest_mono_path(h, mono(h), 3, 0);
    CHECK(result[0].max_vertices == 9);
}

TEST_CASE("tight cycle detection") {
    SECTION("K5^(3) holds a tight 5-cycle") {
        auto k5 = complete_hypergraph(5, 3);
        auto hit = contains_mono_tight_cycle_geq(k5, mono(k5), CycleSpec(3, 5));
        REQUIRE(hit);
        CHECK(hit->cycle.size() >= 5);
    }
    SECTION("paths have no tight cycles") {
        auto p7 = generate_path(path_spec(3, 2, 7));
        CHECK(!contains_mono_tight_cycle_geq(p7, mono(p7), CycleSpec(3, 5)));
    }
    SECTION("a 5-cycle is too small for min length 6") {
        std::vector<Edge> edges;
        for (int i = 0; i < 5; ++i) {
            Edge e{i, (i + 1) % 5, (i + 2) % 5};
            std::sort(e.begin(), e.end());
            edges.push_back(e);
        }
        Hypergraph c5(3, 5, edges);
        CHECK(!contains_mono_tight_cycle_geq(c5, mono(c5), CycleSpec(3, 6)));
        CHECK(contains_mono_tight_cycle_geq(c5, mono(c5), CycleSpec(3, 5)));
    }
    SECTION("graph cycles as 2-uniform tight cycles") {
        std::vector<Edge> edges;
        for (int i = 0; i < 6; ++i) edges.push_back({std::min(i, (i + 1) % 6), std::max(i, (i + 1) % 6)});
        Hypergraph c6(2, 6, edges);
        CHECK(contains_mono_tight_cycle_geq(c6, mono(c6), CycleSpec(2, 6)));
        CHECK(!contains_mono_tight_cycle_geq(c6, mono(c6), CycleSpec(2, 7)));
        auto p6 = generate_path(path_spec(2, 1, 6));
        CHECK(!contains_mono_tight_cycle_geq(p6, mono(p6), CycleSpec(2, 3)));
    }
}

TEST_CASE("witness replay rejects tampering") {
    auto p4 = generate_path(path_spec(2, 1, 4));
    auto hit = contains_mono_path(p4, mono(p4), path_spec(2, 1, 4));
    REQUIRE(hit);
    auto bad = *hit;
    std::swap(bad.sequence[0], bad.sequence[2]);
    CHECK(!verify_path_witness(p4, mono(p4), path_spec(2, 1, 4), bad));
}
