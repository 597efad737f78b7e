#include <catch2/catch_amalgamated.hpp>

#include "genera/amalgam.hpp"
#include "genera/canonical.hpp"
#include "genera/predim.hpp"
#include "genera/random_gen.hpp"

using namespace genera;

TEST_CASE("free amalgam of two edges over a point is a path") {
    Structure b(2), c(2);
    b.add_edge(0, 1);
    c.add_edge(0, 1);
    Amalgam am = free_amalgam(GluedTriple{b, c, {{0, 0}}});
    CHECK(am.d.size() == 3);
    CHECK(am.d.edge_count() == 2);
    CHECK(am.d.has_edge(0, 1));
    CHECK(am.d.has_edge(0, 2)); // c's other endpoint appended as vertex 2
    CHECK(am.c_map == std::vector<int>{0, 2});
}

TEST_CASE("amalgamating a structure with itself over everything is the identity") {
    Structure b(3);
    b.add_edge(0, 1);
    b.add_edge(1, 2);
    std::vector<std::pair<int, int>> ident;
    for (int i = 0; i < 3; ++i) ident.emplace_back(i, i);
    Amalgam am = free_amalgam(GluedTriple{b, b, ident});
    CHECK(am.d == b);
}

TEST_CASE("free amalgam edge count and symmetry on random triples") {
    Rng rng(3);
    for (int trial = 0; trial < 80; ++trial) {
        int na = rand_int(rng, 0, 3);
        auto extend = [&](int extra) {
            Structure s(na + extra);
            for (int u = 0; u < s.size(); ++u)
                for (int v = u + 1; v < s.size(); ++v)
                    if ((u < na && v < na) ? false : rand_chance(rng, 0.5)) s.add_edge(u, v);
            return s;
        };
        // a shared random base wired identically into both sides
        Structure base(na);
        for (int u = 0; u < na; ++u)
            for (int v = u + 1; v < na; ++v)
                if (rand_chance(rng, 0.5)) base.add_edge(u, v);
        Structure b = extend(rand_int(rng, 0, 3));
        Structure c = extend(rand_int(rng, 0, 3));
        for (int u = 0; u < na; ++u)
            for (int v = u + 1; v < na; ++v)
                if (base.has_edge(u, v)) {
                    b.add_edge(u, v);
                    c.add_edge(u, v);
                }
        std::vector<std::pair<int, int>> ident;
        for (int i = 0; i < na; ++i) ident.emplace_back(i, i);
        Amalgam bc = free_amalgam(GluedTriple{b, c, ident});
        Amalgam cb = free_amalgam(GluedTriple{c, b, ident});
        CHECK(bc.d.edge_count() == b.edge_count() + c.edge_count() - base.edge_count());
        CHECK(canonical_form(bc.d) == canonical_form(cb.d));
    }
}

TEST_CASE("the identification must be an isomorphism of the shared copies") {
    Structure b(2), c(2);
    b.add_edge(0, 1);
    CHECK_THROWS_AS(free_amalgam(GluedTriple{b, c, {{0, 0}, {1, 1}}}), InputError);

    Structure bp(2), cp(2);
    bp.add_sclass({0, 1});
    CHECK_THROWS_AS(free_amalgam(GluedTriple{bp, cp, {{0, 0}}}), InputError); // one side partitioned
    cp.add_sclass({0, 1});
    CHECK_NOTHROW(free_amalgam(GluedTriple{bp, cp, {{0, 0}, {1, 1}}}));
    Structure cq(2);
    cq.set_partition({0, 1});
    CHECK_THROWS_AS(free_amalgam(GluedTriple{bp, cq, {{0, 0}, {1, 1}}}), InputError);
}

TEST_CASE("partition blocks merge along the identification and stay disjoint otherwise") {
    Structure b(2), c(2);
    b.add_sclass({0, 1}); // b's extra vertex shares the glued vertex's block
    c.set_partition({0, 1});
    Amalgam am = free_amalgam(GluedTriple{b, c, {{0, 0}}});
    REQUIRE(am.d.size() == 3);
    CHECK(am.d.same_class(0, 1));       // carried over from b
    CHECK_FALSE(am.d.same_class(0, 2)); // c's fresh vertex keeps its own block
    CHECK_FALSE(am.d.same_class(1, 2));
}

TEST_CASE("iterated amalgams: pendant edges over a point make a star") {
    Structure a(1);
    Structure pendant(2);
    pendant.add_edge(0, 1);
    std::vector<OplusMember> members(3, OplusMember{pendant, {0}});
    OplusResult res = oplus_family(a, members);
    CHECK(res.d.size() == 4);
    CHECK(res.d.edge_count() == 3);
    for (int leaf = 1; leaf <= 3; ++leaf) CHECK(res.d.has_edge(0, leaf));

    // a single member is the member itself
    OplusResult one = oplus_family(a, {OplusMember{pendant, {0}}});
    CHECK(canonical_form(one.d) == canonical_form(pendant));

    // additivity instance at weight 1: 0 = 0 + 0 + 0
    Rational r(1);
    Rational rel = delta(res.d, r) - delta(res.d, bit(0), r);
    CHECK(rel == Rational(0));

    CHECK_THROWS_AS(oplus_family(a, {OplusMember{pendant, {0, 1}}}), InputError);
}

TEST_CASE("relative predimension adds over amalgam families") {
    Rng rng(9);
    for (int trial = 0; trial < 120; ++trial) {
        int na = rand_int(rng, 0, 3);
        Structure base(na);
        for (int u = 0; u < na; ++u)
            for (int v = u + 1; v < na; ++v)
                if (rand_chance(rng, 0.5)) base.add_edge(u, v);
        int count = rand_int(rng, 1, 3);
        std::vector<OplusMember> members;
        Rational alpha(1 + static_cast<long long>(rng() % 3), 1 + static_cast<long long>(rng() % 3));
        Rational expected(0);
        std::vector<int> base_list(na);
        for (int i = 0; i < na; ++i) base_list[i] = i;
        for (int i = 0; i < count; ++i) {
            Structure m(na + rand_int(rng, 0, 3));
            for (int u = 0; u < na; ++u)
                for (int v = u + 1; v < na; ++v)
                    if (base.has_edge(u, v)) m.add_edge(u, v);
            for (int v = na; v < m.size(); ++v)
                for (int u = 0; u < v; ++u)
                    if (rand_chance(rng, 0.5)) m.add_edge(u, v);
            expected += delta(m, alpha) - delta(m, full_set(na), alpha);
            members.push_back(OplusMember{m, base_list});
        }
        OplusResult res = oplus_family(base, members);
        Rational got = delta(res.d, alpha) - delta(res.d, full_set(na), alpha);
        CHECK(got == expected);
    }
}

TEST_CASE("oplus_power repeats one extension over its base") {
    Structure ext(3);
    ext.add_edge(2, 0);
    ext.add_edge(2, 1);
    OplusResult res = oplus_power(ext, {0, 1}, 4);
    CHECK(res.d.size() == 2 + 4);
    CHECK(res.d.edge_count() == 8);
    for (int c = 0; c < 4; ++c) {
        int img = res.member_maps[c][2];
        CHECK(res.d.has_edge(0, img));
        CHECK(res.d.has_edge(1, img));
    }
    // intrinsic transcendence of the common-neighbor pair at r = 1/2:
    // every power stays hereditarily positive
    for (int n = 1; n <= 6; ++n)
        CHECK(in_class_alpha(oplus_power(ext, {0, 1}, n).d, Rational(1, 2), true));
}

TEST_CASE("the pendant pair is intrinsically transcendental in the acyclic class") {
    Structure pendant(2);
    pendant.add_edge(0, 1);
    for (int n = 1; n <= 10; ++n) {
        OplusResult res = oplus_power(pendant, {0}, n);
        CHECK(in_class_alpha(res.d, Rational(1), true)); // n-star is a forest
    }
}
