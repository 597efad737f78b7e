#include <catch2/catch_amalgamated.hpp>

#include "genera/oracles.hpp"
#include "genera/predim.hpp"
#include "genera/random_gen.hpp"

using namespace genera;

namespace {

Structure triangle() {
    Structure s(3);
    s.add_edge(0, 1);
    s.add_edge(1, 2);
    s.add_edge(0, 2);
    return s;
}

Structure cycle(int n) {
    Structure s(n);
    for (int i = 0; i + 1 < n; ++i) s.add_edge(i, i + 1);
    s.add_edge(0, n - 1);
    return s;
}

Structure random_graph(Rng& rng, int max_n, double p = 0.45) {
    int n = rand_int(rng, 0, max_n);
    Structure s(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rand_chance(rng, p)) s.add_edge(u, v);
    return s;
}

} // namespace

TEST_CASE("delta on the worked values") {
    CHECK(delta(Structure(0), Rational(7, 3)) == Rational(0));
    CHECK(delta(triangle(), Rational(1, 2)) == Rational(3, 2)); // 3 - 3/2
    CHECK(delta(cycle(4), Rational(1)) == Rational(0));         // 4 - 4
}

TEST_CASE("relative delta and the edge boundary") {
    Structure s(4);
    s.add_edge(0, 1);
    // B = A gives zero
    CHECK(delta_rel(s, from_vertices({0, 1}), from_vertices({0, 1}), Rational(1)) == Rational(0));
    // pendant at weight 1: 1 - 1
    CHECK(delta_rel(s, from_vertices({0, 1}), from_vertices({0}), Rational(1)) == Rational(0));

    // one vertex adjacent to all of a 3-set at weight 1/2: 1 - 3/2
    Structure t(4);
    t.add_edge(3, 0);
    t.add_edge(3, 1);
    t.add_edge(3, 2);
    CHECK(delta_rel(t, t.universe(), from_vertices({0, 1, 2}), Rational(1, 2)) == Rational(-1, 2));
    CHECK(edge_boundary(t, t.universe(), from_vertices({0, 1, 2})) == 3);

    CHECK_THROWS_AS(delta(s, bit(9), Rational(1)), InputError);
}

TEST_CASE("relative delta equals the boundary formula on random pairs") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Structure g = random_graph(rng, 8);
        VertexSet a = random_subset(rng, g.universe());
        VertexSet b = a | random_subset(rng, g.universe());
        Rational r(1 + static_cast<long long>(rng() % 3), 1 + static_cast<long long>(rng() % 4));
        VertexSet ext = b & ~a;
        Rational direct = Rational(popcount(ext)) - r * Rational(g.edges_within(ext)) -
                          r * Rational(g.edges_between(ext, a));
        CHECK(delta_rel(g, b, a, r) == direct);
    }
}

TEST_CASE("class membership on the worked values") {
    Structure v1(1);
    CHECK(in_class_alpha(v1, Rational(1), false));
    CHECK(in_class_alpha(v1, Rational(1), true));
    CHECK(in_class_alpha(v1, Rational(1, 2), true));

    // a 4-cycle has predimension 0 at weight 1: in the flat class, not the strict one
    CHECK(in_class_alpha(cycle(4), Rational(1), false));
    CHECK_FALSE(in_class_alpha(cycle(4), Rational(1), true));

    // the strict condition quantifies over nonempty subsets only
    CHECK(in_class_alpha(Structure(0), Rational(1), true));
}

TEST_CASE("strength on the worked values") {
    Structure pendant(2);
    pendant.add_edge(0, 1);
    VertexSet a = from_vertices({0});
    VertexSet ab = from_vertices({0, 1});

    CHECK(is_strong(pendant, ab, ab, ClassSpec::k_alpha_plus(Rational(1))).strong); // A <= A
    CHECK(is_strong(pendant, 0, ab, ClassSpec::k_alpha(Rational(1))).strong);       // empty base

    // one pendant edge: strong in the flat class, not the strict one
    CHECK(is_strong(pendant, a, ab, ClassSpec::k_alpha(Rational(1))).strong);
    StrongResult strict = is_strong(pendant, a, ab, ClassSpec::k_alpha_plus(Rational(1)));
    CHECK_FALSE(strict.strong);
    CHECK(strict.witness == ab); // the violating intermediate

    CHECK_THROWS_AS(is_strong(pendant, ab, a, ClassSpec::k_alpha(Rational(1))), InputError);
}

TEST_CASE("branch-and-bound strength agrees with full enumeration") {
    Rng rng(21);
    for (int trial = 0; trial < 400; ++trial) {
        Structure g = random_graph(rng, 10);
        VertexSet b = random_subset(rng, g.universe(), 0.8);
        VertexSet a = random_subset(rng, b, 0.5);
        Rational alpha(1 + static_cast<long long>(rng() % 3), 1 + static_cast<long long>(rng() % 3));
        for (bool strict : {false, true}) {
            ClassSpec spec = strict ? ClassSpec::k_alpha_plus(alpha) : ClassSpec::k_alpha(alpha);
            CHECK(is_strong(g, a, b, spec).strong == oracles::naive_is_strong(g, a, b, spec));
        }
    }
}

TEST_CASE("strength witness sets are genuine violations") {
    Rng rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        Structure g = random_graph(rng, 9);
        VertexSet b = random_subset(rng, g.universe(), 0.8);
        VertexSet a = random_subset(rng, b, 0.5);
        ClassSpec spec = ClassSpec::k_alpha_plus(Rational(1, 2));
        StrongResult res = is_strong(g, a, b, spec);
        if (!res.strong) {
            CHECK(subset_of(a, res.witness));
            CHECK(subset_of(res.witness, b));
            CHECK(res.witness != a);
            CHECK(delta_rel(g, res.witness, a, spec.alpha) <= Rational(0));
        }
    }
}

TEST_CASE("the subset-search cap raises a resource error") {
    int saved = max_subset_bits();
    max_subset_bits() = 4;
    Structure g(8);
    CHECK_THROWS_AS(is_strong(g, 0, g.universe(), ClassSpec::k_alpha(Rational(1))), ResourceError);
    max_subset_bits() = saved;
}

TEST_CASE("granularity values and range checks") {
    CHECK(granularity(Rational(1, 2)) == Rational(1, 2));
    CHECK(granularity(Rational(2, 3)) == Rational(1, 3));
    CHECK(granularity(Rational(1, 3)) == Rational(1, 3));
    CHECK_THROWS_AS(granularity(Rational(0)), InputError);
    CHECK_THROWS_AS(granularity(Rational(1)), InputError);
    CHECK_THROWS_AS(granularity(Rational(5, 3)), InputError);
}

TEST_CASE("granularity bound is exhaustively confirmed at small size") {
    for (Rational r : {Rational(1, 2), Rational(2, 3), Rational(1, 3)}) {
        GranularityReport rep = granularity_verify(r, 5);
        CHECK(rep.all_bounded);
        CHECK(rep.attained);
        CHECK(rep.pairs_checked > 0);
    }
}

TEST_CASE("order axioms hold on random nested subsets") {
    Rng rng(31);
    for (Rational alpha : {Rational(1), Rational(1, 2)}) {
        for (bool strict : {false, true}) {
            ClassSpec spec = strict ? ClassSpec::k_alpha_plus(alpha) : ClassSpec::k_alpha(alpha);
            for (int trial = 0; trial < 120; ++trial) {
                Structure g = random_in_class(spec, 7, rng);
                VertexSet c = random_subset(rng, g.universe(), 0.8);
                VertexSet b = random_subset(rng, c, 0.7);
                VertexSet a = random_subset(rng, b, 0.6);
                CHECK(is_strong(g, a, a, spec).strong);
                CHECK(is_strong(g, 0, c, spec).strong);
                bool ab = is_strong(g, a, b, spec).strong;
                bool bc = is_strong(g, b, c, spec).strong;
                bool ac = is_strong(g, a, c, spec).strong;
                if (ab && bc) CHECK(ac);
                if (ac) CHECK(ab); // restriction
                if (ab) {
                    VertexSet d = random_subset(rng, g.universe(), 0.5);
                    CHECK(is_strong(g, a & d, b & d, spec).strong);
                }
            }
        }
    }
}
