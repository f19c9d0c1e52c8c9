#include <doctest.h>

#include "gqu/census.hpp"
#include "gqu/quniform.hpp"

using namespace gqu;

TEST_CASE("base validation reports witnesses") {
    Universe u(3);
    try {
        validate_base(u, {Relation(u, {{0, 0}, {2, 2}})});
        FAIL("missing diagonal pair not reported");
    } catch (const MissingDiagonal& e) {
        CHECK(e.element == 0);
        CHECK(e.point == 1);
    }

    // diag + (0,1) + (1,2) squares to something containing (0,2)
    try {
        validate_base(
            u, {Relation(u, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}})});
        FAIL("square refinement failure not reported");
    } catch (const NoSquareRefinement& e) {
        CHECK(e.element == 0);
    }

    // adding the transitive pair fixes it
    const UniformBase ok = validate_base(
        u, {Relation(u, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {0, 2}})});
    CHECK(ok.elements.size() == 1);
}

TEST_CASE("entourage membership is up-closure of the base") {
    Universe u(2);
    const UniformBase b = validate_base(u, {diagonal(u)});
    CHECK(contains_entourage(b, diagonal(u)));
    CHECK(contains_entourage(b, full_relation(u)));
    CHECK_FALSE(contains_entourage(b, Relation(u, {{0, 0}, {0, 1}})));
}

TEST_CASE("induced supratopology of a one-element base") {
    Universe u(3);
    const UniformBase b =
        validate_base(u, {Relation(u, {{0, 0}, {1, 1}, {2, 2}, {0, 1}})});
    const GenTopology t = induced_supratopology(b);
    CHECK(t.strong);
    CHECK(t.opens.size() == 6);
    CHECK(t.contains(PointSet(u, {1})));
    CHECK(t.contains(PointSet(u, {2})));
    CHECK(t.contains(PointSet(u, {1, 2})));
    CHECK_FALSE(t.contains(PointSet(u, {0}))); // 0's neighborhood is {0,1}
}

TEST_CASE("pervin base of a strong topology") {
    Universe u(2);
    const GenTopology mu =
        validate_family(u, {PointSet(u, {0}), PointSet::full_set(u)}, true);
    const UniformBase b = pervin_base(mu);
    REQUIRE(b.elements.size() == 2);
    // G = {0} contributes (G x G) + (complement x X); G = {} and G = X
    // both contribute X x X
    const Relation g0(u, {{0, 0}, {1, 0}, {1, 1}});
    CHECK((b.elements[0] == g0 || b.elements[1] == g0));
    CHECK((b.elements[0] == full_relation(u) || b.elements[1] == full_relation(u)));
}

TEST_CASE("pervin bases satisfy the axioms for every strong topology") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& mu : enumerate_gentopologies(n, true))
            CHECK_NOTHROW(pervin_base(mu));
}

TEST_CASE("uniform continuity implies continuity of the induced topologies") {
    Universe u(2);
    CensusConfig cfg;
    cfg.n = 2;
    const auto bases = enumerate_bases(cfg);
    std::vector<MapPair> maps;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) maps.push_back(MapPair(u, u, {a, b}));
    for (const auto& bd : bases)
        for (const auto& bc : bases)
            for (const auto& f : maps)
                if (is_gqu_continuous(f, bd, bc))
                    CHECK(is_generalized_continuous(f, induced_supratopology(bd),
                                                    induced_supratopology(bc)));
}

TEST_CASE("core entourage is the intersection of the base") {
    Universe u(2);
    const UniformBase b = validate_base(
        u, {Relation(u, {{0, 0}, {1, 1}, {0, 1}}), full_relation(u)});
    CHECK(core_entourage(b) == Relation(u, {{0, 0}, {1, 1}, {0, 1}}));
}

TEST_CASE("classification of eventually periodic sequences") {
    Universe u(3);
    const UniformBase b =
        validate_base(u, {Relation(u, {{0, 0}, {1, 1}, {2, 2}, {0, 1}})});

    const EPClassification alt = classify_ep_sequence(b, EPSeq(u, {2}, {0, 1}));
    CHECK_FALSE(alt.cauchy);   // (1,0) is outside the core
    CHECK_FALSE(alt.g_cauchy); // consecutive pair (1,0) likewise
    CHECK(alt.pseudo_cauchy);
    CHECK_FALSE(alt.distinct_terms);

    const EPClassification cst = classify_ep_sequence(b, EPSeq(u, {1}, {0}));
    CHECK(cst.cauchy);
    CHECK(cst.g_cauchy);

    Universe v(2);
    const UniformBase bf = validate_base(v, {full_relation(v)});
    const EPClassification full = classify_ep_sequence(bf, EPSeq(v, {}, {0, 1}));
    CHECK(full.cauchy);
    CHECK(full.g_cauchy);
}

TEST_CASE("cauchy implies g-cauchy over every small base") {
    Universe u(2);
    CensusConfig cfg;
    cfg.n = 2;
    for (const auto& b : enumerate_bases(cfg))
        for (const auto& s : enumerate_ep_sequences(u, 2, 2)) {
            const EPClassification c = classify_ep_sequence(b, s);
            if (c.cauchy) CHECK(c.g_cauchy);
        }
}

TEST_CASE("limit points of a recurrent set") {
    Universe u(3);
    const UniformBase b =
        validate_base(u, {Relation(u, {{0, 0}, {1, 1}, {2, 2}, {0, 1}})});
    CHECK(limit_points_of_recurrent_set(b, PointSet(u, {1})) == PointSet(u, {0, 1}));
    CHECK(limit_points_of_recurrent_set(b, PointSet(u, {0})) == PointSet(u, {0}));
    CHECK(limit_points_of_recurrent_set(b, PointSet(u, {2})) == PointSet(u, {2}));
    // {0,1} is not strongly connected in the core: no path 1 -> 0
    CHECK_THROWS_AS(limit_points_of_recurrent_set(b, PointSet(u, {0, 1})),
                    InvalidArgument);
    CHECK_THROWS_AS(limit_points_of_recurrent_set(b, PointSet::empty_set(u)),
                    InvalidArgument);
}

TEST_CASE("strong connectivity within a subset") {
    Universe u(3);
    const Relation r(u, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(strongly_connected_on(r, PointSet(u, {0, 1})));
    CHECK_FALSE(strongly_connected_on(r, PointSet(u, {0, 1, 2})));
    CHECK(strongly_connected_on(r, PointSet(u, {2}))); // singleton, vacuous
}

TEST_CASE("finite space report carries checkable certificates") {
    Universe u(3);
    const UniformBase b =
        validate_base(u, {Relation(u, {{0, 0}, {1, 1}, {2, 2}, {0, 1}})});
    const SpaceReport r = decide_space_properties(b);
    CHECK(r.sequentially_complete);
    CHECK(r.g_complete);
    CHECK(r.weak_g_complete);
    CHECK(r.strongly_lebesgue);
    CHECK(r.sequentially_lebesgue);
    CHECK(r.compact);
    CHECK(r.certificates.size() == 3); // singletons are the only recurrent sets
    const Relation core = core_entourage(b);
    for (const auto& c : r.certificates) {
        CHECK(strongly_connected_on(core, c.visit_set));
        CHECK_FALSE(c.limit_set.empty());
        CHECK(c.limit_set == limit_points_of_recurrent_set(b, c.visit_set));
    }
}
