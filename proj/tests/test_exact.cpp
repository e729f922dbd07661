#include <catch2/catch_amalgamated.hpp>

#include "ramsey/canonical.hpp"
#include "ramsey/exact.hpp"

using namespace ramsey;

TEST_CASE("Ramsey number of P3 with two colors is 3") {
    auto res = ramsey_number_exact(PathSpec(2, 1, 3), 2, 4);
    CHECK(res.status == ExactStatus::found);
    CHECK(res.value == 3);
}

TEST_CASE("Ramsey number of P4: 5 for two colors, 6 for three") {
    auto r2 = ramsey_number_exact(PathSpec(2, 1, 4), 2, 6);
    REQUIRE(r2.status == ExactStatus::found);
    CHECK(r2.value == 5);
    auto r3 = ramsey_number_exact(PathSpec(2, 1, 4), 3, 7);
    REQUIRE(r3.status == ExactStatus::found);
    CHECK(r3.value == 6);
}

TEST_CASE("Ramsey scan certifies lower bounds when the budget is too small") {
    auto res = ramsey_number_exact(PathSpec(2, 1, 4), 2, 4);
    CHECK(res.status == ExactStatus::bound_only);
    CHECK(res.value == 5);  // meaning: the number exceeds 4
}

TEST_CASE("size-Ramsey number of P3 is 3 with the star as witness") {
    auto res = size_ramsey_exact(PathSpec(2, 1, 3), 2, 3);
    REQUIRE(res.status == ExactStatus::found);
    CHECK(res.value == 3);
    REQUIRE(res.witness_host);
    Hypergraph star(2, 4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(canonical_form(*res.witness_host) == canonical_form(star));
}

TEST_CASE("size-Ramsey number of the 2-edge tight 3-path is 3 (two colors)") {
    auto res = size_ramsey_exact(PathSpec(3, 2, 4), 2, 3);
    REQUIRE(res.status == ExactStatus::found);
    CHECK(res.value == 3);
    Hypergraph sunflower(3, 5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
    CHECK(canonical_form(*res.witness_host, 32) == canonical_form(sunflower, 32));
}

TEST_CASE("size-Ramsey search certifies lower bounds") {
    auto res = size_ramsey_exact(PathSpec(2, 1, 4), 2, 3);
    CHECK(res.status == ExactStatus::bound_only);
    CHECK(res.value == 4);
}

TEST_CASE("host enumeration and witness choice are deterministic") {
    auto a = size_ramsey_exact(PathSpec(2, 1, 3), 3, 4);
    auto b = size_ramsey_exact(PathSpec(2, 1, 3), 3, 4);
    REQUIRE(a.status == ExactStatus::found);
    CHECK(a.value == 4);
    REQUIRE(a.witness_host && b.witness_host);
    CHECK(*a.witness_host == *b.witness_host);
    // the witness is the 4-petal star (the 1-core sunflower)
    Hypergraph star(2, 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(canonical_form(*a.witness_host, 32) == canonical_form(star, 32));
}
