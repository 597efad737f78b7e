#include <catch2/catch_amalgamated.hpp>

#include "genera/fuzz.hpp"

using namespace genera;

TEST_CASE("identical configurations give bit-identical reports") {
    FuzzConfig cfg;
    cfg.suite = "delta-monotonicity";
    cfg.spec = ClassSpec::k_alpha_plus(Rational(1, 2));
    cfg.trials = 40;
    cfg.seed = 7;
    FuzzReport a = run_suite(cfg);
    FuzzReport b = run_suite(cfg);
    CHECK(a.str(false) == b.str(false));
    CHECK(a.str(true) == b.str(true));
    CHECK(a.trials_run == 40);
    CHECK(a.ok());
}

TEST_CASE("zero trials is an empty passing report") {
    FuzzConfig cfg;
    cfg.suite = "axioms";
    cfg.trials = 0;
    FuzzReport rep = run_suite(cfg);
    CHECK(rep.trials_run == 0);
    CHECK(rep.ok());
}

TEST_CASE("unknown suites are a usage error") {
    FuzzConfig cfg;
    cfg.suite = "no-such-suite";
    CHECK_THROWS_AS(run_suite(cfg), InputError);
}

TEST_CASE("the deliberately broken suite fails with a minimized witness and working replay") {
    FuzzConfig cfg;
    cfg.suite = "self-test-broken";
    cfg.trials = 20;
    cfg.seed = 3;
    cfg.max_vertices = 6;
    FuzzReport rep = run_suite(cfg);
    REQUIRE_FALSE(rep.failures.empty());
    const FuzzFailure& f = rep.failures.front();

    // the minimized counterexample still fails, and greedy deletion has
    // driven it to the boundary: exactly three edges
    REQUIRE(f.minimized.structures.size() == 1);
    CHECK(f.minimized.structures[0].structure.edge_count() == 3);

    // the replay command names the failing trial exactly
    CHECK(f.replay.find("--suite self-test-broken") != std::string::npos);
    CHECK(f.replay.find("--only-trial " + std::to_string(f.trial)) != std::string::npos);

    FuzzConfig replay = cfg;
    replay.only_trial = f.trial;
    FuzzReport again = run_suite(replay);
    REQUIRE(again.failures.size() == 1);
    CHECK(again.failures[0].message == f.message);
    CHECK(again.failures[0].minimized.text() == f.minimized.text());
}

TEST_CASE("the law suites pass quick runs") {
    struct Quick {
        const char* suite;
        const char* spec;
        long long trials;
    };
    const Quick quick[] = {
        {"delta-additivity", "kplus:1/2", 60},
        {"delta-boundary", "kplus:2/3", 60},
        {"axioms", "kalpha:1/2", 40},
        {"axioms", "star:1/2,3", 25},
        {"strong-oracle", "kplus:1/2", 60},
        {"minpair-oracle", "kalpha:1", 40},
        {"closure-oracle", "kplus:1", 15},
        {"closure-props", "kalpha:1/2", 15},
        {"zeroext-props", "kplus:1/2", 40},
        {"free-amalgam", "kplus:1/2", 30},
        {"full-amalgam", "kalpha:1/2", 30},
        {"nu-crosscheck", "star:1/2,3", 30},
        {"ecl-chain", "kplus:1", 20},
        {"star-ecl-dim", "star:1/2,3", 40},
        {"star-beta2", "star:1/2,3", 60},
        {"star-hassupp", "star:1/2,3", 60},
        {"supports-acyclic", "kplus:1", 20},
        {"cltp-laws", "kplus:1", 10},
        {"canonical", "kplus:1", 50},
        {"embeddings", "kplus:1", 40},
    };
    for (const Quick& q : quick) {
        FuzzConfig cfg;
        cfg.suite = q.suite;
        cfg.spec = ClassSpec::parse(q.spec);
        cfg.trials = q.trials;
        cfg.seed = 11;
        cfg.max_vertices = 7;
        FuzzReport rep = run_suite(cfg);
        INFO(rep.str(false));
        CHECK(rep.ok());
    }
}

TEST_CASE("star suites reject non-star specs up front") {
    FuzzConfig cfg;
    cfg.suite = "nu-crosscheck";
    cfg.spec = ClassSpec::k_alpha(Rational(1));
    cfg.trials = 1;
    CHECK_THROWS_AS(run_suite(cfg), InputError);
}
