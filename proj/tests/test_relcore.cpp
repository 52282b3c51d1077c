#include <algorithm>

#include "doctest.h"
#include "ordpat/relcore.hpp"
#include "ordpat/rng.hpp"
#include "support/oracles.hpp"

using namespace ordpat;
namespace oracle = ordpat::testing;

namespace {

Signature binary_sig() { return Signature{{{"E", 2}}}; }

RelStructure triangle_structure() {
    RelStructure s(binary_sig(), 3);
    s.add_tuple(0, {0, 1});
    s.add_tuple(0, {1, 2});
    s.add_tuple(0, {2, 0});
    return s;
}

// the four-vertex example's template, written out from its defining chains
TemporalStructure example_template() {
    TemporalStructure t(Signature{{{"R1", 4}}});
    const std::vector<RankPattern> chains = {RankPattern{{1, 2, 3, 4}}, RankPattern{{3, 2, 1, 4}},
                                             RankPattern{{1, 4, 3, 2}}, RankPattern{{3, 4, 1, 2}}};
    for (const auto& p : all_rank_patterns(4)) {
        if (!p.repeat_free()) continue;
        if (std::find(chains.begin(), chains.end(), p) != chains.end()) continue;
        t.add_allowed(0, p);
    }
    return t;
}

// every map a -> b, checked directly
bool brute_hom_exists(const RelStructure& a, const RelStructure& b) {
    if (a.size() == 0) return true;
    std::vector<int> map(a.size(), 0);
    while (true) {
        if (is_homomorphism(a, b, map)) return true;
        int i = a.size() - 1;
        while (i >= 0 && map[i] == b.size() - 1) { map[i] = 0; --i; }
        if (i < 0) return false;
        ++map[i];
    }
}

RelStructure random_structure(int size, int tuples, Rng& rng) {
    RelStructure s(binary_sig(), size);
    for (int i = 0; i < tuples; ++i)
        s.add_tuple(0, {static_cast<int>(rng.below(size)), static_cast<int>(rng.below(size))});
    return s;
}

TemporalStructure random_template(const Signature& sig, Rng& rng) {
    TemporalStructure t(sig);
    for (int sym = 0; sym < static_cast<int>(sig.symbols.size()); ++sym)
        for (auto& p : all_rank_patterns(sig.symbols[sym].arity))
            if (rng.bernoulli(0.5)) t.add_allowed(sym, std::move(p));
    return t;
}

}  // namespace

TEST_CASE("signature and structure invariants") {
    CHECK_THROWS(Signature{{{"E", 0}}}.validate());
    CHECK_THROWS(Signature{{{"E", 2}, {"E", 3}}}.validate());
    CHECK(binary_sig().max_arity() == 2);
    CHECK(binary_sig().index_of("E") == 0);
    CHECK(binary_sig().index_of("F") == -1);

    RelStructure s(binary_sig(), 2);
    CHECK(s.add_tuple(0, {0, 1}));
    CHECK_FALSE(s.add_tuple(0, {0, 1}));  // set semantics
    CHECK_THROWS(s.add_tuple(0, {0, 2}));
    CHECK_THROWS(s.add_tuple(0, {0}));
}

TEST_CASE("max_degree counts incident tuples") {
    RelStructure s(binary_sig(), 3);
    s.add_tuple(0, {0, 1});
    s.add_tuple(0, {1, 2});
    CHECK(max_degree(s) == 2);  // at the shared element

    RelStructure loop(binary_sig(), 1);
    loop.add_tuple(0, {0, 0});
    CHECK(max_degree(loop) == 1);  // one incident tuple, not two

    CHECK(max_degree(RelStructure(binary_sig(), 4)) == 0);
}

TEST_CASE("hom_exists: base examples") {
    auto tri = triangle_structure();
    auto id = hom_exists(tri, tri);
    REQUIRE(id);
    CHECK(*id == std::vector<int>{0, 1, 2});  // lexicographically first is the identity

    RelStructure edge(binary_sig(), 2);
    edge.add_tuple(0, {0, 1});
    CHECK_FALSE(brute_hom_exists(tri, edge));
    CHECK_FALSE(hom_exists(tri, edge));

    RelStructure path(binary_sig(), 3);
    path.add_tuple(0, {0, 1});
    path.add_tuple(0, {1, 2});
    CHECK(brute_hom_exists(path, edge));
    auto w = hom_exists(path, edge);
    REQUIRE(w);
    CHECK(is_homomorphism(path, edge, *w));

    RelStructure other(Signature{{{"F", 2}}}, 2);
    CHECK_THROWS(hom_exists(tri, other));
}

TEST_CASE("hom_exists agrees with brute force and composes") {
    Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        auto a = random_structure(2 + rng.below(3), rng.below(4), rng);
        auto b = random_structure(2 + rng.below(3), rng.below(4), rng);
        auto c = random_structure(2 + rng.below(3), rng.below(4), rng);
        auto ab = hom_exists(a, b);
        CHECK(ab.has_value() == brute_hom_exists(a, b));
        if (!ab) continue;
        CHECK(is_homomorphism(a, b, *ab));
        auto bc = hom_exists(b, c);
        if (!bc) continue;
        std::vector<int> composed(a.size());
        for (int x = 0; x < a.size(); ++x) composed[x] = (*bc)[(*ab)[x]];
        CHECK(is_homomorphism(a, c, composed));
        CHECK(hom_exists(a, c).has_value());
    }
}

TEST_CASE("injective hom_exists is injective") {
    auto tri = triangle_structure();
    auto w = hom_exists(tri, tri, true);
    REQUIRE(w);
    std::vector<int> sorted = *w;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("temporal_tuple_allowed on the four-vertex template") {
    auto t = example_template();
    CHECK_FALSE(temporal_tuple_allowed(t, 0, RankPattern{{1, 2, 3, 4}}));
    CHECK_FALSE(temporal_tuple_allowed(t, 0, RankPattern{{1, 1, 2, 3}}));
    CHECK(temporal_tuple_allowed(t, 0, RankPattern{{2, 1, 3, 4}}));
    CHECK_THROWS(temporal_tuple_allowed(t, 0, RankPattern{{1, 2}}));
}

TEST_CASE("temporal_hom_exists: single-tuple examples") {
    auto t = example_template();
    RelStructure s(Signature{{{"R1", 4}}}, 4);
    s.add_tuple(0, {0, 1, 2, 3});
    auto w = temporal_hom_exists(s, t);
    REQUIRE(w);
    CHECK(witness_valid(s, t, *w));
    CHECK(temporal_tuple_allowed(t, 0, tuple_pattern(*w, {0, 1, 2, 3})));

    TemporalStructure empty(Signature{{{"R1", 4}}});
    CHECK_FALSE(temporal_hom_exists(s, empty));
}

TEST_CASE("temporal_hom_exists matches brute enumeration of weak orders") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto s = random_structure(1 + rng.below(5), rng.below(5), rng);
        auto t = random_template(binary_sig(), rng);
        auto fast = temporal_hom_exists(s, t);
        auto slow = oracle::brute_temporal(s, t);
        CHECK(fast.has_value() == slow.has_value());
        if (fast) CHECK(witness_valid(s, t, *fast));
    }
}

TEST_CASE("temporal_hom_exists is deterministic") {
    Rng rng(13);
    auto s = random_structure(5, 4, rng);
    auto t = random_template(binary_sig(), rng);
    auto a = temporal_hom_exists(s, t);
    auto b = temporal_hom_exists(s, t);
    CHECK(a == b);
}

TEST_CASE("linearize_witness") {
    // all repeat-free binary patterns allowed: ties break freely
    TemporalStructure t(binary_sig());
    t.add_allowed(0, RankPattern{{1, 2}});
    t.add_allowed(0, RankPattern{{2, 1}});

    RelStructure s(binary_sig(), 3);
    s.add_tuple(0, {0, 1});

    WeakOrderWitness linear{{1, 2, 3}};
    auto kept = linearize_witness(s, t, linear);
    REQUIRE(kept);
    CHECK(*kept == linear);

    WeakOrderWitness tied{{1, 2, 1}};
    auto refined = linearize_witness(s, t, tied);
    REQUIRE(refined);
    CHECK(refined->linear());
    CHECK(witness_valid(s, t, *refined));

    // a tuple whose only allowed pattern is the repeat cannot be linearized
    TemporalStructure only_tie(binary_sig());
    only_tie.add_allowed(0, RankPattern{{1, 1}});
    WeakOrderWitness both_tied{{1, 1, 2}};
    REQUIRE(witness_valid(s, only_tie, both_tied));
    CHECK_FALSE(linearize_witness(s, only_tie, both_tied));

    CHECK_THROWS(linearize_witness(s, only_tie, WeakOrderWitness{{1, 2, 3}}));  // invalid input
}

TEST_CASE("linearized witnesses stay valid on random instances") {
    Rng rng(17);
    int refined_count = 0;
    for (int trial = 0; trial < 80; ++trial) {
        auto s = random_structure(1 + rng.below(5), rng.below(5), rng);
        auto t = random_template(binary_sig(), rng);
        auto w = temporal_hom_exists(s, t);
        if (!w) continue;
        auto lin = linearize_witness(s, t, *w);
        if (!lin) continue;
        ++refined_count;
        CHECK(lin->linear());
        CHECK(witness_valid(s, t, *lin));
    }
    CHECK(refined_count > 10);
}

TEST_CASE("blow_up") {
    RelStructure lone(binary_sig(), 1);
    auto b3 = blow_up(lone, 3);
    CHECK(b3.structure.size() == 3);
    CHECK(b3.structure.tuple_count() == 0);

    RelStructure edge(binary_sig(), 2);
    edge.add_tuple(0, {0, 1});
    auto b2 = blow_up(edge, 2);
    CHECK(b2.structure.size() == 4);
    CHECK(b2.structure.tuple_count() == 4);  // all copy combinations
    CHECK(is_homomorphism(b2.structure, edge, b2.projection));
    CHECK(hom_exists(b2.structure, edge).has_value());

    auto tri = triangle_structure();
    for (int n = 1; n <= 3; ++n) {
        auto b = blow_up(tri, n);
        CHECK(is_homomorphism(b.structure, tri, b.projection));
    }
    CHECK_THROWS(blow_up(edge, 0));
}

TEST_CASE("rank pattern canonicalization") {
    CHECK(RankPattern::of_values({7, 3, 7, 9}) == RankPattern{{2, 1, 2, 3}});
    CHECK(RankPattern{{1, 2, 2, 3}}.canonical());
    CHECK_FALSE(RankPattern{{1, 3}}.canonical());
    CHECK_FALSE(RankPattern{{0, 1}}.canonical());
    CHECK(RankPattern{{2, 1, 3}}.repeat_free());
    CHECK_FALSE(RankPattern{{1, 1}}.repeat_free());

    WeakOrderWitness w = WeakOrderWitness::from_ranks({10, 5, 10});
    CHECK(w.ranks == std::vector<int>{2, 1, 2});
}

TEST_CASE("all_rank_patterns matches the brute filter") {
    for (int n = 0; n <= 6; ++n) {
        auto fast = all_rank_patterns(n);
        auto slow = oracle::brute_rank_sequences(n);
        REQUIRE(fast.size() == slow.size());
        for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].ranks == slow[i]);
    }
}

TEST_CASE("graph basics") {
    Graph g(3);
    CHECK(g.add_edge(0, 1));
    CHECK_FALSE(g.add_edge(1, 0));  // same edge
    CHECK_THROWS(g.add_edge(0, 0));
    CHECK_THROWS(g.add_edge(0, 3));
    CHECK(g.adjacent(1, 0));
    CHECK(g.degree(0) == 1);

    OrderedGraph og{g, {2, 0, 1}};
    og.validate();
    CHECK(og.vertices_in_order() == std::vector<int>{1, 2, 0});
    CHECK_THROWS(OrderedGraph{g, {0, 0, 1}}.validate());

    ColoredGraph cg{g, {"red", "blue"}, {0, 1, 0}};
    cg.normalize();
    cg.validate();
    CHECK(cg.palette == std::vector<std::string>{"blue", "red"});
    CHECK(cg.color_name(0) == "red");
    CHECK(cg.color_name(1) == "blue");
}
