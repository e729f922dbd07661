#include <catch2/catch_amalgamated.hpp>

#include "ramsey/bounds.hpp"

using namespace ramsey;

TEST_CASE("combinatorial constants") {
    SECTION("tight 3-path, full depth") {
        auto c = combinatorial_constants(3, 2, 3);
        CHECK(c.t == std::vector<int>{3, 2, 1, 0});
        CHECK(c.f == 12);
        CHECK(c.g == 6);
        CHECK(c.q == 4);
    }
    SECTION("half overlap") {
        auto c = combinatorial_constants(4, 2, 2);
        CHECK(c.t == std::vector<int>{4, 2, 0});
        CHECK(c.f == 12);
        CHECK(c.g == 6);
    }
    SECTION("empty product") {
        auto c = combinatorial_constants(2, 1, 1);
        CHECK(c.t == std::vector<int>{2, 1});
        CHECK(c.f == 2);
        CHECK(c.g == 1);
    }
    SECTION("closed forms at l = k-1, m = k") {
        for (int k = 2; k <= 8; ++k) {
            auto c = combinatorial_constants(k, k - 1, k);
            BigInt pow2 = 1;
            for (int i = 0; i < k - 1; ++i) pow2 *= 2;
            BigInt fact = 1;
            for (int i = 2; i <= k; ++i) fact *= i;
            CHECK(c.f == k * pow2);
            CHECK(c.g == fact);
        }
    }
    CHECK_THROWS_AS(combinatorial_constants(3, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(combinatorial_constants(3, 1, 2), std::invalid_argument);
}

TEST_CASE("matching-based Ramsey lower bound") {
    CHECK(afl_ramsey_lower(2, 2, 1, 4) == 4);
    CHECK(afl_ramsey_lower(3, 3, 2, 5) == 4);
    SECTION("divisible-overlap closed form at spot values") {
        for (int n : {6, 9}) {
            // (r-1+k)/k * n - 2r + 1 at r=2, k=3
            Rational closed = Rational(2 - 1 + 3, 3) * n - 2 * 2 + 1;
            CHECK(Rational(afl_ramsey_lower(2, 3, 2, n)) >= closed);
        }
    }
    CHECK_THROWS_AS(afl_ramsey_lower(2, 4, 2, 7), std::invalid_argument);
}

TEST_CASE("path Turan upper bound") {
    CHECK(turan_upper_paths(10, 4, 2) == 10);
    CHECK(turan_upper_paths(10, 6, 3) == Rational(225, 2));  // (5/2) * C(10,2)
    CHECK(turan_upper_paths(8, 2, 2) == 0);
    CHECK(turan_upper_paths(8, 4, 4) == 0);
}

TEST_CASE("majority upper bounds") {
    auto a = majority_ramsey_upper(2, 4, 2);
    CHECK(a.ramsey_upper == 6);
    CHECK(a.size_upper == 15);
    auto b = majority_ramsey_upper(2, 6, 3);
    CHECK(b.ramsey_upper == 18);
    CHECK(b.size_upper == 816);
    SECTION("cap on a parameter grid") {
        for (int r = 2; r <= 5; ++r)
            for (int k = 2; k <= 5; ++k)
                for (int n = k; n <= 5; ++n) {
                    auto m = majority_ramsey_upper(r, n, k);
                    CHECK(2 * m.ramsey_upper <= static_cast<long long>(r) * (k + 1) * n);
                }
    }
}

TEST_CASE("exact multicolor Ramsey numbers of the graph P4") {
    CHECK(bierbrauer_R(2) == 5);
    CHECK(bierbrauer_R(3) == 6);
    CHECK(bierbrauer_R(4) == 10);
    const std::vector<int> golden{5, 6, 10, 11, 13, 16, 17, 19, 22};
    for (int r = 2; r <= 10; ++r) CHECK(bierbrauer_R(r) == golden[static_cast<std::size_t>(r - 2)]);
    CHECK_THROWS_AS(bierbrauer_R(1), std::invalid_argument);
}

TEST_CASE("short path size-Ramsey bounds") {
    SECTION("two-edge tight path is exact") {
        for (int r = 2; r <= 6; ++r) {
            auto b = short_path_size_bounds(r, 3, 2, 1);
            REQUIRE(b.exact);
            CHECK(*b.exact == r + 1);
            CHECK(b.lower < Rational(*b.exact));
            CHECK(Rational(*b.exact) <= Rational(b.upper));
        }
    }
    SECTION("graph P3 numbers") {
        auto b = short_path_size_bounds(5, 2, 1, 1);
        CHECK(*b.exact == 6);
        CHECK(b.lower == 1);
        CHECK(b.upper == 28);
    }
    SECTION("graph P4 refinement") {
        auto b = short_path_size_bounds(2, 2, 1, 2);
        CHECK(b.lower == 2);       // r^2/2, strict
        CHECK(b.upper == 15);      // (r+1)(2r+1)
        CHECK(!b.exact);
        CHECK(b.lower < Rational(7));
        CHECK(Rational(7) <= Rational(b.upper));
    }
    SECTION("lower stays below upper on a grid") {
        for (int r = 2; r <= 8; ++r)
            for (int k = 2; k <= 5; ++k)
                for (int ell = 1; ell < k; ++ell)
                    for (int m = 1; m <= k / (k - ell); ++m) {
                        auto b = short_path_size_bounds(r, k, ell, m);
                        CHECK(b.lower < Rational(b.upper));
                    }
    }
}

TEST_CASE("composed lower-bound report") {
    SECTION("tight 3-path closed forms") {
        auto r2 = composed_lower_bounds(2, 3, 2, 90);
        bool found = false;
        for (const auto& e : r2.entries)
            if (e.formula == "k3_r2_closed_form") {
                found = true;
                CHECK(*e.value == 250);
            }
        CHECK(found);

        auto r3 = composed_lower_bounds(3, 3, 2, 120);
        found = false;
        for (const auto& e : r3.entries)
            if (e.formula == "k3_closed_form") {
                found = true;
                CHECK(*e.value == 342);
            }
        CHECK(found);
    }
    SECTION("link combinator with the exact link value") {
        ComposedInputs inputs;
        inputs.size_ramsey_pq = 7;
        auto report = composed_lower_bounds(2, 3, 2, 200, inputs);
        bool combinator = false, discrepancy = false;
        for (const auto& e : report.entries) {
            if (e.formula == "link_combinator" && e.kind == "lower") {
                combinator = true;
                // c0 = 2*9*7 = 126; the strict AFL bound on P_74 is 96, so >= 97
                CHECK(*e.value == Rational(7, 3) * 97);
            }
            if (e.formula == "k3_discrepancy") discrepancy = true;
        }
        CHECK(combinator);
        CHECK(discrepancy);
    }
    SECTION("validity windows drop entries with notes") {
        ComposedInputs inputs;
        inputs.size_ramsey_pq = 7;
        auto report = composed_lower_bounds(2, 3, 2, 90, inputs);  // 90 < c0
        for (const auto& e : report.entries)
            if (e.formula == "link_combinator") CHECK(e.kind == "note");
        // l > k/2 drops the loose combinator
        auto tight = composed_lower_bounds(5, 3, 2, 10000);
        for (const auto& e : tight.entries)
            if (e.formula == "loose_combinator") CHECK(e.kind == "note");
    }
    SECTION("loose combinator inside its window") {
        auto report = composed_lower_bounds(5, 4, 2, 1204);
        bool found = false;
        for (const auto& e : report.entries)
            if (e.formula == "loose_combinator" && e.kind == "lower") {
                found = true;
                // floor((2r-2)/3) = 2; AFL lower (2,4,2,1204): m=601, m'=301, 301+1204-2
                CHECK(*e.value == Rational(5, 16) * (afl_ramsey_lower(2, 4, 2, 1204) + 1));
            }
        CHECK(found);
    }
}

TEST_CASE("full report carries exact entries and annotations") {
    auto report = full_report(3, 2, 1, 4);
    bool bier = false;
    int asymptotic = 0;
    for (const auto& e : report.entries) {
        if (e.formula == "bierbrauer_exact") {
            bier = true;
            CHECK(e.kind == "exact");
            CHECK(*e.value == 6);
        }
        if (e.kind == "asymptotic") {
            ++asymptotic;
            CHECK(!e.value);  // never asserted numerically
        }
    }
    CHECK(bier);
    CHECK(asymptotic >= 4);

    auto hm = full_report(2, 2, 1, 4);
    bool seven = false;
    for (const auto& e : hm.entries)
        if (e.formula == "harary_miller_exact") {
            seven = true;
            CHECK(*e.value == 7);
        }
    CHECK(seven);
}

TEST_CASE("report serialization round trip") {
    auto report = full_report(2, 3, 2, 90);
    auto j = to_json(report);
    CHECK(j["format"] == 1);
    CHECK(j["entries"].size() == report.entries.size());
    auto table = to_table(report);
    CHECK(table.find("250") != std::string::npos);
}
