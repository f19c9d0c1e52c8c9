#include <doctest.h>

#include <random>

#include "gqu/relation.hpp"

using namespace gqu;

namespace {

Relation random_relation(const Universe& u, std::mt19937_64& rng) {
    Relation r(u);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int x = 0; x < u.size; ++x)
        for (int y = 0; y < u.size; ++y)
            if (coin(rng)) r.insert(x, y);
    return r;
}

} // namespace

TEST_CASE("point set algebra") {
    Universe u(4);
    PointSet a(u, {0, 2});
    PointSet b(u, {2, 3});
    CHECK(a.united(b) == PointSet(u, {0, 2, 3}));
    CHECK(a.intersected(b) == PointSet(u, {2}));
    CHECK(a.complement() == PointSet(u, {1, 3}));
    CHECK(a.intersects(b));
    CHECK_FALSE(a.subset_of(b));
    CHECK(PointSet(u, {2}).subset_of(b));
    CHECK(a.members() == std::vector<int>{0, 2});
    CHECK(PointSet::empty_set(u).empty());
    CHECK(PointSet::full_set(u).size() == 4);
    CHECK_THROWS_AS(a.insert(4), InvalidArgument);
    CHECK_THROWS_AS(a.united(PointSet(Universe(3))), UniverseMismatch);
}

TEST_CASE("diagonal and full relation") {
    Universe u(3);
    const Relation d = diagonal(u);
    CHECK(d.pair_count() == 3);
    CHECK(d.contains(1, 1));
    CHECK_FALSE(d.contains(0, 1));
    CHECK(full_relation(u).pair_count() == 9);
}

TEST_CASE("compose convention: (x,z) iff exists y with (x,y) and (y,z)") {
    Universe u(3);
    Relation r(u, {{0, 1}});
    Relation s(u, {{1, 2}});
    const Relation rs = compose(r, s);
    CHECK(rs == Relation(u, {{0, 2}}));
    CHECK(compose(s, r).pair_count() == 0);
}

TEST_CASE("diagonal is a two-sided identity for compose") {
    Universe u(5);
    std::mt19937_64 rng(11);
    const Relation d = diagonal(u);
    for (int t = 0; t < 50; ++t) {
        const Relation r = random_relation(u, rng);
        CHECK(compose(d, r) == r);
        CHECK(compose(r, d) == r);
    }
}

TEST_CASE("compose is associative") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> size(1, 5);
    for (int t = 0; t < 200; ++t) {
        Universe u(size(rng));
        const Relation a = random_relation(u, rng);
        const Relation b = random_relation(u, rng);
        const Relation c = random_relation(u, rng);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}

TEST_CASE("compose is monotone in both arguments") {
    Universe u(4);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        const Relation r = random_relation(u, rng);
        const Relation s = random_relation(u, rng);
        const Relation rbig = r.united(random_relation(u, rng));
        const Relation sbig = s.united(random_relation(u, rng));
        CHECK(compose(r, s).subset_of(compose(rbig, s)));
        CHECK(compose(r, s).subset_of(compose(r, sbig)));
    }
}

TEST_CASE("image of a point") {
    Universe u(3);
    Relation r(u, {{0, 1}, {0, 2}, {1, 0}});
    CHECK(image(r, 0) == PointSet(u, {1, 2}));
    CHECK(image(r, 2).empty());
}

TEST_CASE("pullback along a map") {
    Universe dom(3), cod(2);
    MapPair f(dom, cod, {0, 0, 1});
    Relation r(cod, {{0, 1}});
    CHECK(pullback(f, r) == Relation(dom, {{0, 2}, {1, 2}}));
}

TEST_CASE("pullback along the swap map") {
    Universe u(2);
    MapPair swap(u, u, {1, 0});
    Relation r(u, {{0, 0}, {1, 1}, {0, 1}});
    CHECK(pullback(swap, r) == Relation(u, {{0, 0}, {1, 0}, {1, 1}}));
}

TEST_CASE("pullback preserves the diagonal and intersections") {
    Universe dom(4), cod(3);
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int t = 0; t < 50; ++t) {
        MapPair f(dom, cod, {pick(rng), pick(rng), pick(rng), pick(rng)});
        const Relation a = random_relation(cod, rng);
        const Relation b = random_relation(cod, rng);
        CHECK(diagonal(dom).subset_of(pullback(f, diagonal(cod))));
        CHECK(pullback(f, a.intersected(b)) ==
              pullback(f, a).intersected(pullback(f, b)));
    }
}

TEST_CASE("map construction and composition") {
    Universe a(2), b(3);
    CHECK_THROWS_AS(MapPair(a, b, {0}), InvalidArgument);
    CHECK_THROWS_AS(MapPair(a, b, {0, 3}), InvalidArgument);
    MapPair f(a, b, {2, 0});
    MapPair g(b, a, {1, 1, 0});
    const MapPair gf = MapPair::composed(g, f);
    CHECK(gf(0) == 0);
    CHECK(gf(1) == 1);
    CHECK(f.preimage(PointSet(b, {0, 1})) == PointSet(a, {1}));
    CHECK(MapPair::identity(b).preimage(PointSet(b, {2})) == PointSet(b, {2}));
}
