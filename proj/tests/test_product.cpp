#include <doctest.h>

#include <algorithm>

#include "gqu/product.hpp"

using namespace gqu;

TEST_CASE("mixed-radix coding, factor 0 most significant") {
    const ProductUniverse p = product_universe({Universe(2), Universe(3)});
    CHECK(p.universe.size == 6);
    CHECK(p.encode({1, 2}) == 5);
    CHECK(p.encode({0, 2}) == 2);
    CHECK(p.decode(4) == std::vector<int>{1, 1});
    for (long c = 0; c < 6; ++c) CHECK(p.encode(p.decode(c)) == c);
}

TEST_CASE("projections read the coded coordinates") {
    const ProductUniverse p = product_universe({Universe(2), Universe(3)});
    const MapPair pi0 = projection(p, 0);
    const MapPair pi1 = projection(p, 1);
    for (long c = 0; c < 6; ++c) {
        CHECK(pi0(static_cast<int>(c)) == p.decode(c)[0]);
        CHECK(pi1(static_cast<int>(c)) == p.decode(c)[1]);
    }
}

TEST_CASE("product base pulls each factor element back through its projection") {
    Universe u(2);
    const ProductUniverse p = product_universe({u, u});
    const UniformBase a =
        validate_base(u, {Relation(u, {{0, 0}, {1, 1}, {0, 1}})});
    const UniformBase b = validate_base(u, {diagonal(u)});
    const UniformBase pb = product_base(p, {a, b});
    REQUIRE(pb.elements.size() == 2);

    // codes 2*x0 + x1; (x,y) in the factor-0 pullback iff (x0,y0) in a
    std::size_t counts[2] = {pb.elements[0].pair_count(),
                             pb.elements[1].pair_count()};
    std::sort(counts, counts + 2);
    CHECK(counts[0] == 8);  // x1 == y1: 2 choices * 4 (x0,y0) pairs
    CHECK(counts[1] == 12); // (x0,y0) in {(0,0),(0,1),(1,1)}: 3 * 4

    for (const auto& e : pb.elements)
        CHECK(diagonal(p.universe).subset_of(e));

    // projections are uniformly continuous
    CHECK(is_gqu_continuous(projection(p, 0), pb, a));
    CHECK(is_gqu_continuous(projection(p, 1), pb, b));
}

TEST_CASE("product base keeps pullbacks separate instead of intersecting") {
    Universe u(2);
    const ProductUniverse p = product_universe({u, u, u});
    const UniformBase d = validate_base(u, {diagonal(u)});
    const UniformBase pb = product_base(p, {d, d, d});
    CHECK(pb.elements.size() == 3);
    // the product diagonal is in the generated uniformity only through
    // up-closure of single-coordinate pullbacks, never as a base element
    for (const auto& e : pb.elements) CHECK(e != diagonal(p.universe));
}

TEST_CASE("section and projection are inverse on the moving coordinate") {
    Universe a(3), b(2);
    const ProductUniverse p = product_universe({a, b});
    const EPSeq s(a, {2}, {0, 1});
    const EPSeq emb = section_sequence(p, s, 0, {0, 1});
    CHECK(emb.universe.size == 6);
    for (long i = 0; i < 8; ++i) {
        const auto tup = p.decode(ep_term(emb, i));
        CHECK(tup[0] == ep_term(s, i));
        CHECK(tup[1] == 1); // pinned
    }
    const EPSeq back = project_ep(p, emb, 0);
    for (long i = 0; i < 8; ++i) CHECK(ep_term(back, i) == ep_term(s, i));
}
