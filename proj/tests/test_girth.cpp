#include "doctest.h"
#include "ordpat/girth.hpp"
#include "ordpat/rng.hpp"
#include "support/oracles.hpp"

using namespace ordpat;
namespace oracle = ordpat::testing;

namespace {

RelStructure binary(int size, std::initializer_list<Tuple> tuples) {
    RelStructure s(Signature{{{"E", 2}}}, size);
    for (const auto& t : tuples) s.add_tuple(0, t);
    return s;
}

}  // namespace

TEST_CASE("degenerate cycles have length one") {
    auto s = binary(2, {{0, 0}, {0, 1}});
    auto c = shortest_cycle(s);
    REQUIRE(c);
    CHECK(c->length() == 1);
    CHECK(cycle_valid(s, *c));
    CHECK(girth(s) == 1);
}

TEST_CASE("triangle has girth three") {
    auto s = binary(3, {{0, 1}, {1, 2}, {2, 0}});
    auto c = shortest_cycle(s);
    REQUIRE(c);
    CHECK(c->length() == 3);
    CHECK(cycle_valid(s, *c));
}

TEST_CASE("two ternary tuples sharing two elements form a 2-cycle") {
    RelStructure s(Signature{{{"T", 3}}}, 4);
    s.add_tuple(0, {0, 1, 2});
    s.add_tuple(0, {0, 1, 3});
    auto c = shortest_cycle(s);
    REQUIRE(c);
    CHECK(c->length() == 2);
    CHECK(cycle_valid(s, *c));
}

TEST_CASE("forests are acyclic") {
    auto s = binary(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK_FALSE(shortest_cycle(s));
    CHECK_FALSE(girth(s));
    CHECK(raise_girth(s, 5) == s);
}

TEST_CASE("shortest_cycle equals the brute-force minimum") {
    Rng rng(23);
    for (int trial = 0; trial < 120; ++trial) {
        const int size = 2 + static_cast<int>(rng.below(7));  // up to 8 elements
        const int ntuples = static_cast<int>(rng.below(11));  // up to 10 tuples
        const int arity = 2 + static_cast<int>(rng.below(2));
        RelStructure s(Signature{{{"R", arity}}}, size);
        for (int i = 0; i < ntuples; ++i) {
            Tuple t;
            for (int j = 0; j < arity; ++j) t.push_back(static_cast<int>(rng.below(size)));
            s.add_tuple(0, t);
        }
        auto fast = girth(s);
        auto slow = oracle::brute_girth(s);
        CHECK(fast == slow);
        if (auto c = shortest_cycle(s)) CHECK(cycle_valid(s, *c));
    }
}

TEST_CASE("raise_girth removes the triangle's least tuple") {
    auto s = binary(3, {{0, 1}, {1, 2}, {2, 0}});
    auto out = raise_girth(s, 4);
    CHECK(out.tuple_count() == 2);
    CHECK_FALSE(shortest_cycle(out));
    // the lexicographically least tuple [0,1] is the one removed
    CHECK_FALSE(out.has_tuple(0, {0, 1}));
    CHECK(out.has_tuple(0, {1, 2}));
    CHECK(out.has_tuple(0, {2, 0}));
    CHECK(raise_girth(out, 4) == out);  // idempotent
    CHECK(raise_girth(s, 3) == s);      // girth already 3
}

TEST_CASE("raise_girth only removes tuples and reaches the target") {
    Rng rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        const int size = 2 + static_cast<int>(rng.below(6));
        RelStructure s(Signature{{{"E", 2}}}, size);
        const int ntuples = static_cast<int>(rng.below(12));
        for (int i = 0; i < ntuples; ++i)
            s.add_tuple(0, {static_cast<int>(rng.below(size)), static_cast<int>(rng.below(size))});
        for (int g = 1; g <= 5; ++g) {
            auto out = raise_girth(s, g);
            auto gi = girth(out);
            CHECK((!gi || *gi >= g));
            for (const auto& t : out.tuples(0)) CHECK(s.has_tuple(0, t));  // substructure
            CHECK(raise_girth(out, g) == out);
        }
    }
}
