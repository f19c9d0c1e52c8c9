#include <doctest.h>

#include <random>

#include "gqu/epseq.hpp"

using namespace gqu;

TEST_CASE("construction guards") {
    Universe u(3);
    CHECK_THROWS_AS(EPSeq(u, {}, {}), InvalidArgument);
    CHECK_THROWS_AS(EPSeq(u, {0}, {3}), InvalidArgument);
    CHECK_THROWS_AS(EPSeq(u, {-1}, {0}), InvalidArgument);
}

TEST_CASE("term evaluation: preamble then cycle") {
    Universe u(4);
    EPSeq s(u, {3}, {1, 2});
    CHECK(ep_term(s, 0) == 3);
    CHECK(ep_term(s, 1) == 1);
    CHECK(ep_term(s, 2) == 2);
    CHECK(ep_term(s, 3) == 1);
    CHECK(ep_term(s, 100) == 2); // odd offsets into the cycle
}

TEST_CASE("normalization reduces the cycle to its minimal period") {
    Universe u(3);
    const EPSeq n = ep_normalize(EPSeq(u, {}, {1, 2, 1, 2}));
    CHECK(n.preamble.empty());
    CHECK(n.cycle == std::vector<int>{1, 2});
}

TEST_CASE("normalization absorbs the preamble tail into the cycle") {
    Universe u(3);
    const EPSeq n = ep_normalize(EPSeq(u, {1, 2}, {1, 2}));
    CHECK(n.preamble.empty());
    CHECK(n.cycle == std::vector<int>{1, 2});
}

TEST_CASE("normalization keeps a genuinely transient preamble") {
    Universe u(3);
    const EPSeq n = ep_normalize(EPSeq(u, {0, 1, 2}, {2, 1, 2, 1}));
    CHECK(n.preamble == std::vector<int>{0, 1, 2});
    CHECK(n.cycle == std::vector<int>{2, 1});
}

TEST_CASE("normalization preserves every term and is idempotent") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> usize(1, 4);
    std::uniform_int_distribution<int> plen(0, 4);
    std::uniform_int_distribution<int> clen(1, 4);
    for (int t = 0; t < 300; ++t) {
        Universe u(usize(rng));
        std::uniform_int_distribution<int> pt(0, u.size - 1);
        std::vector<int> pre(plen(rng)), cyc(clen(rng));
        for (int& p : pre) p = pt(rng);
        for (int& c : cyc) c = pt(rng);
        const EPSeq s(u, pre, cyc);
        const EPSeq n = ep_normalize(s);
        CHECK(n.preamble.size() <= s.preamble.size());
        CHECK(n.cycle.size() <= s.cycle.size());
        const long window =
            static_cast<long>(s.preamble.size() + 3 * s.cycle.size()) + 2;
        for (long i = 0; i < window; ++i) CHECK(ep_term(n, i) == ep_term(s, i));
        CHECK(ep_normalize(n) == n);
    }
}

TEST_CASE("value sets split by preamble and cycle") {
    Universe u(5);
    const auto [pre, cyc] = ep_values(EPSeq(u, {4, 0}, {1, 2, 1}));
    CHECK(pre == PointSet(u, {0, 4}));
    CHECK(cyc == PointSet(u, {1, 2}));
}
