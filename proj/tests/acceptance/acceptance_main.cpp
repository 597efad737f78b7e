// Acceptance suite: one criterion per function, each printing a single
// PASS/FAIL line.  Run with a criterion number (1..11) or no argument for
// the full battery.  All arithmetic is exact; every tolerance is zero.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <vector>

#include "genera/genera.hpp"

using namespace genera;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
    int number;
    const char* title;
    std::function<bool(std::string&)> run;
};

// ---- 1: closure oracle equivalence ----------------------------------------

bool criterion1(std::string& detail) {
    const ClassSpec specs[] = {
        ClassSpec::k_alpha(Rational(1)),
        ClassSpec::k_alpha_plus(Rational(1)),
        ClassSpec::k_alpha(Rational(1, 2)),
        ClassSpec::k_alpha_plus(Rational(1, 2)),
    };
    long long checked = 0, grew = 0;
    for (const ClassSpec& spec : specs) {
        for (int trial = 0; trial < 200; ++trial) {
            Rng rng(mix_seed(1001 + trial, static_cast<std::uint64_t>(spec.strict()) * 7 +
                                                static_cast<std::uint64_t>(spec.alpha.den())));
            Structure g = random_in_class(spec, 8, rng);
            for (int attempt = 0; attempt < 6 && g.size() < 5; ++attempt)
                g = random_in_class(spec, 8, rng); // bias toward substantial ambients
            for (int rep = 0; rep < 3; ++rep) {
                VertexSet a = random_subset(rng, g.universe(), 0.4);
                VertexSet fast = closure_in(g, a, spec);
                VertexSet slow = oracles::brute_force_closure(g, a, spec);
                ++checked;
                if (fast != a) ++grew;
                if (fast != slow) {
                    detail = "spec " + spec.str() + ": closure " + set_str(fast) +
                             " != brute force " + set_str(slow);
                    return false;
                }
            }
        }
    }
    detail = std::to_string(checked) + " closures matched across 4 class specs (" +
             std::to_string(grew) + " proper growths)";
    return true;
}

// ---- 2: predimension laws ---------------------------------------------------

bool criterion2(std::string& detail) {
    const char* suites[] = {"delta-additivity", "delta-monotonicity", "delta-boundary"};
    long long total = 0;
    for (const char* name : suites) {
        FuzzConfig cfg;
        cfg.suite = name;
        cfg.spec = ClassSpec::k_alpha_plus(Rational(1, 2));
        cfg.trials = 500;
        cfg.seed = 2002;
        cfg.max_vertices = 8;
        FuzzReport rep = run_suite(cfg);
        total += rep.trials_run;
        if (!rep.ok()) {
            detail = std::string(name) + " failed:\n" + rep.str(false);
            return false;
        }
    }
    detail = std::to_string(total) + " trials across additivity, monotonicity, boundary";
    return true;
}

// ---- 3: order axioms and full amalgamation ---------------------------------

bool criterion3(std::string& detail) {
    const char* spec_names[] = {"kalpha:1", "kplus:1", "kalpha:1/2", "kplus:1/2", "star:1/2,3"};
    long long total = 0;
    for (const char* sn : spec_names) {
        FuzzConfig cfg;
        cfg.suite = "axioms";
        cfg.spec = ClassSpec::parse(sn);
        cfg.trials = 500;
        cfg.seed = 3003;
        cfg.max_vertices = 7;
        FuzzReport rep = run_suite(cfg);
        total += rep.trials_run;
        if (!rep.ok()) {
            detail = std::string("axioms at ") + sn + " failed:\n" + rep.str(false);
            return false;
        }
    }
    FuzzConfig full;
    full.suite = "full-amalgam";
    full.spec = ClassSpec::k_alpha_plus(Rational(1, 2));
    full.trials = 500;
    full.seed = 3113;
    full.max_vertices = 7;
    FuzzReport rep = run_suite(full);
    total += rep.trials_run;
    if (!rep.ok()) {
        detail = "full amalgamation instances failed:\n" + rep.str(false);
        return false;
    }
    detail = std::to_string(total) + " axiom and amalgamation configurations";
    return true;
}

// ---- 4: granularity ---------------------------------------------------------

bool criterion4(std::string& detail) {
    long long pairs = 0;
    for (Rational r : {Rational(1, 3), Rational(1, 2), Rational(2, 3)}) {
        GranularityReport rep = granularity_verify(r, 6);
        pairs += rep.pairs_checked;
        if (!rep.all_bounded || !rep.attained) {
            detail = "granularity failed at r = " + r.str();
            return false;
        }
        if (granularity(r) != Rational(1, r.den())) {
            detail = "granularity value wrong at r = " + r.str();
            return false;
        }
    }
    detail = std::to_string(pairs) + " pairs enumerated for r in {1/3, 1/2, 2/3}";
    return true;
}

// ---- 5: anti-collapse amalgamation and the disjoint-extension bound ---------

bool criterion5(std::string& detail) {
    ClassSpec star = ClassSpec::anti_collapse(Rational(1, 2), 3);
    const int kExtCap = 4;

    for (int trial = 0; trial < 200; ++trial) {
        Rng rng(mix_seed(5005, trial));
        Structure a = random_in_class(star, 3, rng, kExtCap);
        Rng rb(rng()), rc(rng());
        Structure b = random_strong_extension(a, star, 7 - a.size(), rb, kExtCap);
        Structure c = random_strong_extension(a, star, 7 - a.size(), rc, kExtCap);
        std::vector<std::pair<int, int>> ident;
        for (int i = 0; i < a.size(); ++i) ident.emplace_back(i, i);
        Amalgam am = free_amalgam(GluedTriple{b, c, ident});
        VertexSet b_img = 0, c_img = 0;
        for (int v : am.b_map) b_img |= bit(v);
        for (int v : am.c_map) c_img |= bit(v);
        if (!is_admissible(am.d, star.params, kExtCap).admissible) {
            detail = "trial " + std::to_string(trial) + ": amalgam not admissible at cap";
            return false;
        }
        if (!is_strong(am.d, b_img, am.d.universe(), star).strong ||
            !is_strong(am.d, c_img, am.d.universe(), star).strong) {
            detail = "trial " + std::to_string(trial) + ": a side lost strength in the amalgam";
            return false;
        }
    }

    // full version: the C side only contains A
    for (int trial = 0; trial < 200; ++trial) {
        Rng rng(mix_seed(5505, trial));
        Structure a = random_in_class(star, 3, rng, kExtCap);
        Rng rb(rng()), rc(rng());
        Structure b = random_strong_extension(a, star, 7 - a.size(), rb, kExtCap);
        Structure c = random_class_extension(a, star, 7 - a.size(), rc, kExtCap);
        std::vector<std::pair<int, int>> ident;
        for (int i = 0; i < a.size(); ++i) ident.emplace_back(i, i);
        FullAmalgamOutcome out = check_full_amalgamation_instance(GluedTriple{b, c, ident}, star, kExtCap);
        if (!out.ok) {
            detail = "full-version trial " + std::to_string(trial) + ": " +
                     (out.d_in_class ? "plain side not strong in the amalgam" : "amalgam left the class");
            return false;
        }
    }

    // the disjoint-extension bound across 50 amalgams
    long long straddlers = 0;
    for (int trial = 0; trial < 50; ++trial) {
        Rng rng(mix_seed(5905, trial));
        Structure a = random_in_class(star, 3, rng, kExtCap);
        Rng rb(rng()), rc(rng());
        Structure b = random_strong_extension(a, star, 7 - a.size(), rb, kExtCap);
        Structure c = random_strong_extension(a, star, 7 - a.size(), rc, kExtCap);
        std::vector<std::pair<int, int>> ident;
        for (int i = 0; i < a.size(); ++i) ident.emplace_back(i, i);
        Bounded1Instance inst = build_bounded1_instance(GluedTriple{b, c, ident}, star.params);
        bool bad = false;
        std::string bad_detail;
        for_each_subset(inst.amalgam.d.universe(), [&](VertexSet u) {
            if (bad || popcount(u) < 2 || popcount(u) > 4) return;
            Bounded1Report rep = check_bounded1_instance(inst, u, star.params, kExtCap);
            if (!rep.applicable) return;
            ++straddlers;
            if (!rep.ok) {
                bad = true;
                bad_detail = "U=" + set_str(u) + " count=" + std::to_string(rep.count) +
                             " nu=" + std::to_string(rep.nu_bound);
            }
        });
        if (bad) {
            detail = "trial " + std::to_string(trial) + ": " + bad_detail;
            return false;
        }
    }
    detail = "200 strong triples, 200 full-version triples, 50 amalgams with " +
             std::to_string(straddlers) + " straddling bases";
    return true;
}

// ---- 6: the nine-common-neighbor rejection fixture --------------------------

bool criterion6(std::string& detail) {
    auto start = Clock::now();
    Structure s(11);
    for (int c = 2; c < 11; ++c) {
        s.add_edge(0, c);
        s.add_edge(1, c);
    }
    s.add_sclass({0});
    s.add_sclass({1});
    AdmissibilityReport rep = is_admissible(s, AntiCollapseParams(Rational(1, 2), 2));
    double elapsed = seconds_since(start);
    if (rep.admissible || rep.failed_clause != 3 || rep.count != 9 || rep.nu_bound != 8 ||
        rep.witness_x != from_vertices({0, 1})) {
        detail = "unexpected report: " + rep.str();
        return false;
    }
    if (elapsed >= 1.0) {
        detail = "took " + std::to_string(elapsed) + "s, budget is 1s";
        return false;
    }
    detail = rep.str() + " in " + std::to_string(elapsed) + "s";
    return true;
}

// ---- 7: generic stages in the acyclic class ---------------------------------

bool criterion7(std::string& detail) {
    ClassSpec spec = ClassSpec::k_alpha_plus(Rational(1));
    GenericBuildResult res = build_generic_stages(spec, 6, 2, 2);
    if (!res.complete || res.stages.size() != 7) {
        detail = "builder did not complete: " + res.note;
        return false;
    }
    for (std::size_t i = 0; i < res.stages.size(); ++i) {
        const Structure& m = res.stages[i].structure;
        if (!in_class_alpha(m, Rational(1), true)) {
            detail = "stage " + std::to_string(i) + " is not a forest";
            return false;
        }
        if (i > 0) {
            VertexSet prev = res.stages[i - 1].structure.universe();
            if (!is_strong(res.stages[i].structure, prev, m.universe(), spec).strong) {
                detail = "stage " + std::to_string(i - 1) + " is not strong in stage " + std::to_string(i);
                return false;
            }
        }
    }
    RichnessAudit audit = audit_richness(res.stages[res.stages.size() - 2].structure,
                                         res.stages.back().structure, spec, 2, 2);
    if (!audit.ok) {
        detail = "richness audit failed at base " + set_str(audit.missing_base);
        return false;
    }
    detail = "6 stages, final size " + std::to_string(res.stages.back().structure.size()) +
             " vertices, audit over " + std::to_string(audit.demands_checked) + " demands";
    return true;
}

// ---- 8: support systems -----------------------------------------------------

bool criterion8(std::string& detail) {
    ClassSpec spec = ClassSpec::k_alpha_plus(Rational(1));
    int built = 0;
    for (int trial = 0; built < 100; ++trial) {
        if (trial > 1000) {
            detail = "fixture generation stalled";
            return false;
        }
        Rng rng(mix_seed(8008, trial));
        AcyclicFixture fx = random_acyclic_fixture(rng, 4, 7);
        if (fx.m == 0) continue;
        ++built;
        SupportSystem sys = build_candidate_system(fx.s, fx.m, spec, SystemKind::Singletons);
        SystemReport rep = verify_system(fx.s, sys, spec, 1);
        if (!rep.coverage || !rep.bounded || !rep.unique || !rep.free_closures || !rep.edge_closed) {
            detail = "fixture " + std::to_string(trial) + " failed:\n" + rep.str();
            return false;
        }
    }

    // the many-supports analogue: one external vertex over two model points
    Structure s(3);
    s.add_edge(0, 2);
    s.add_edge(1, 2);
    SupportSystem sys;
    sys.m = from_vertices({0, 1});
    sys.members = {bit(0), bit(1)};
    SystemReport rep = verify_system(s, sys, spec, 1);
    if (rep.unique || rep.multi_covered != 2) {
        detail = "the many-supports fixture did not fail uniqueness as required";
        return false;
    }
    if (!contains(external_closure(s, sys.m, bit(0), spec), 2) ||
        !contains(external_closure(s, sys.m, bit(1), spec), 2)) {
        detail = "the uniqueness witness is not in both external closures";
        return false;
    }
    detail = "100 acyclic fixtures passed; the shared-vertex fixture fails uniqueness with witness 2";
    return true;
}

// ---- 9: closure types --------------------------------------------------------

bool criterion9(std::string& detail) {
    ClassSpec spec = ClassSpec::k_alpha_plus(Rational(1));
    long long comparisons = 0;
    for (int amb = 0; amb < 12; ++amb) {
        Rng rng(mix_seed(9009, amb));
        Structure g = random_in_class(spec, 7, rng);
        for (int attempt = 0; attempt < 6 && g.size() < 4; ++attempt)
            g = random_in_class(spec, 7, rng);
        std::vector<std::vector<int>> tuples;
        for (int v = 0; v < g.size(); ++v) tuples.push_back({v});
        for (int u = 0; u < g.size(); ++u)
            for (int v = 0; v < g.size(); ++v) tuples.push_back({u, v});
        for (int depth = 0; depth <= 2; ++depth) {
            // one tree per tuple; equality is encoding equality, so the
            // relation is an equivalence provided the encodings are stable
            std::vector<std::string> enc;
            for (const auto& t : tuples) enc.push_back(cltp(g, t, depth, spec).encoding);
            for (std::size_t i = 0; i < tuples.size(); ++i) {
                for (std::size_t j = 0; j < tuples.size(); ++j) {
                    if (tuples[i].size() != tuples[j].size()) continue;
                    ++comparisons;
                    CltpComparison cmp = cltp_equal(g, tuples[i], tuples[j], depth, spec);
                    if (cmp.equal != (enc[i] == enc[j])) {
                        detail = "comparison disagrees with encodings";
                        return false;
                    }
                    if (i == j && !cmp.equal) {
                        detail = "reflexivity failed";
                        return false;
                    }
                }
            }
            // transitivity over the encoding classes is immediate; verify
            // symmetry plus transitivity explicitly on a sample anyway
            for (std::size_t i = 0; i + 2 < tuples.size(); i += 3) {
                if (tuples[i].size() != tuples[i + 1].size() ||
                    tuples[i].size() != tuples[i + 2].size())
                    continue;
                bool ij = cltp_equal(g, tuples[i], tuples[i + 1], depth, spec).equal;
                bool ji = cltp_equal(g, tuples[i + 1], tuples[i], depth, spec).equal;
                bool jk = cltp_equal(g, tuples[i + 1], tuples[i + 2], depth, spec).equal;
                bool ik = cltp_equal(g, tuples[i], tuples[i + 2], depth, spec).equal;
                if (ij != ji || (ij && jk && !ik)) {
                    detail = "equivalence laws failed";
                    return false;
                }
            }
        }
        if (g.size() <= 7) {
            bool bad = false;
            oracles::for_each_automorphism(g, [&](const std::vector<int>& perm) {
                if (bad) return;
                for (int v = 0; v < g.size() && !bad; ++v) {
                    for (int depth = 0; depth <= 2 && !bad; ++depth) {
                        if (!cltp_equal(g, {v}, {perm[v]}, depth, spec).equal) bad = true;
                    }
                }
            });
            if (bad) {
                detail = "automorphism invariance failed";
                return false;
            }
        }
    }

    // the pendant pair splits at depth 0
    Structure s(3);
    s.add_edge(0, 1);
    CltpComparison cmp = cltp_equal(s, {0}, {2}, 2, spec);
    if (cmp.equal || cmp.distinguishing_depth != 0) {
        detail = "pendant pair not distinguished at depth 0";
        return false;
    }
    detail = std::to_string(comparisons) + " comparisons across 12 ambients at depths 0..2";
    return true;
}

// ---- 10: the independence-property configuration ----------------------------

bool criterion10(std::string& detail) {
    const Rational r(1, 2);
    ClassSpec reduct = ClassSpec::k_alpha_plus(r);
    ClassSpec star = ClassSpec::anti_collapse(r, 3);

    // search for a biminimal 0-extension (A, C) with |A| = 2 over small
    // labeled graphs
    Structure found_c(0);
    VertexSet found_a = 0;
    bool found = false;
    for (int n = 3; n <= 4 && !found; ++n) {
        int pairs = n * (n - 1) / 2;
        std::vector<std::pair<int, int>> edge_list;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) edge_list.emplace_back(u, v);
        for (std::uint64_t em = 0; em < (std::uint64_t{1} << pairs) && !found; ++em) {
            Structure c(n);
            for (int e = 0; e < pairs; ++e)
                if ((em >> e) & 1) c.add_edge(edge_list[e].first, edge_list[e].second);
            if (!in_class_alpha(c, r, true)) continue;
            for_each_subset(c.universe(), [&](VertexSet a) {
                if (found || popcount(a) != 2 || a == c.universe()) return;
                if (!is_zero_extension(c, a, c.universe(), r)) return;
                if (!is_biminimal_pair(c, a, c.universe(), reduct)) return;
                found = true;
                found_c = c;
                found_a = a;
            });
        }
    }
    if (!found) {
        detail = "no biminimal 0-extension found in the search window";
        return false;
    }

    // expand: a gets its own class, the rest of A is the homogeneous base
    std::vector<int> a_list = to_vertices(found_a);
    int a_vertex = a_list[0];
    std::vector<int> blocks(found_c.size());
    for (int v = 0; v < found_c.size(); ++v) blocks[v] = v == a_vertex ? 100 : 101 + v;
    for (std::size_t i = 1; i < a_list.size(); ++i) blocks[a_list[i]] = 200; // the homogeneous part
    Structure c_star = found_c;
    c_star.set_partition(blocks);

    // the bare base pattern: A alone, same classes
    Induced base_only = induced_substructure(c_star, found_a);

    // order the base by: a first, then the rest ascending
    std::vector<int> base_order = {a_vertex};
    for (std::size_t i = 1; i < a_list.size(); ++i) base_order.push_back(a_list[i]);

    for (int eta = 0; eta < 4; ++eta) {
        // build D_eta: over the shared vertex a, attach for each i either a
        // full copy of C (eta bit set) or just the base tuple
        Structure a_core(1);
        a_core.set_partition({0});
        std::vector<OplusMember> members;
        for (int i = 0; i < 2; ++i) {
            if ((eta >> i) & 1) {
                members.push_back(OplusMember{c_star, {a_vertex}});
            } else {
                std::vector<int> pos;
                for (std::size_t k = 0; k < base_only.original.size(); ++k)
                    if (base_only.original[k] == a_vertex) pos.push_back(static_cast<int>(k));
                members.push_back(OplusMember{base_only.structure, pos});
            }
        }
        OplusResult d = oplus_family(a_core, members);

        // class validity: reduct membership and admissibility at the cap
        if (!in_class_alpha(d.d, r, true)) {
            detail = "D_eta left the strict class at eta=" + std::to_string(eta);
            return false;
        }
        if (!is_admissible(d.d, star.params, 4).admissible) {
            detail = "D_eta not admissible at eta=" + std::to_string(eta);
            return false;
        }

        // the pattern: a copy of C over (a, b-tuple) exists exactly when the
        // bit is set
        for (int i = 0; i < 2; ++i) {
            std::vector<int> base_in_d;
            base_in_d.push_back(d.base_map[0]); // the shared a
            const auto& mm = d.member_maps[i];
            if ((eta >> i) & 1) {
                for (std::size_t k = 1; k < a_list.size(); ++k) base_in_d.push_back(mm[a_list[k]]);
            } else {
                for (std::size_t k = 0; k < base_only.original.size(); ++k)
                    if (base_only.original[k] != a_vertex)
                        base_in_d.push_back(mm[static_cast<int>(k)]);
            }
            std::vector<int> base_in_c = base_order;
            auto copies = copies_over_base(d.d, base_in_d, c_star, base_in_c);
            bool expect = (eta >> i) & 1;
            if (copies.empty() == expect) {
                detail = "phi-pattern failed at eta=" + std::to_string(eta) + " i=" + std::to_string(i);
                return false;
            }
        }
    }
    detail = "base " + set_str(found_a) + " with |C|=" + std::to_string(found_c.size()) +
             "; all four eta patterns verified";
    return true;
}

// ---- 11: the arithmetic-witness checker against an independent oracle -------

// Test-local amalgam arithmetic: n disjoint copies of x over the designated
// shared set, built by direct index bookkeeping (independent of the library
// constructors).
struct FlatPower {
    Structure d;
    std::vector<std::vector<int>> copy_map; // copy -> (x vertex -> d vertex)
};

FlatPower flat_power(const Structure& x, const std::vector<int>& shared, int n) {
    int s = static_cast<int>(shared.size());
    int fresh = x.size() - s;
    FlatPower out;
    out.d = Structure(s + fresh * n);
    std::vector<int> role(x.size(), -1);
    for (int i = 0; i < s; ++i) role[shared[i]] = i;
    for (int c = 0; c < n; ++c) {
        std::vector<int> map(x.size());
        int next = s + fresh * c;
        for (int v = 0; v < x.size(); ++v) map[v] = role[v] >= 0 ? role[v] : next++;
        out.copy_map.push_back(map);
    }
    for (int c = 0; c < n; ++c)
        for (int u = 0; u < x.size(); ++u)
            for (int v = u + 1; v < x.size(); ++v)
                if (x.has_edge(u, v) && !out.d.has_edge(out.copy_map[c][u], out.copy_map[c][v]))
                    out.d.add_edge(out.copy_map[c][u], out.copy_map[c][v]);
    return out;
}

// The oracle re-derives all three clauses from the definitions with the
// enumeration routines only.
bool oracle_arith_witness(const Structure& x, const std::vector<int>& v_verts,
                          const std::vector<int>& p_verts, const std::vector<int>& q_verts,
                          const std::vector<int>& q_for_p, int n_max, const ClassSpec& spec) {
    // clause 1
    VertexSet w_mask = from_vertices(v_verts);
    for (int v : p_verts) w_mask |= bit(v);
    for (int v : q_verts) w_mask |= bit(v);
    for (std::size_t i = 0; i < p_verts.size(); ++i) {
        for (int vv : v_verts) {
            if (x.has_edge(p_verts[i], vv) != x.has_edge(q_for_p[i], vv)) return false;
        }
        for (std::size_t j = 0; j < p_verts.size(); ++j) {
            if (x.has_edge(p_verts[i], p_verts[j]) != x.has_edge(q_for_p[i], q_for_p[j])) return false;
            if (x.has_edge(p_verts[i], q_for_p[j])) return false; // cross edge
        }
    }
    // clause 2: biminimal by definitional scans; the base-shrink candidates
    // carry the same added part
    if (!oracles::naive_is_minimal_pair(x, w_mask, x.universe(), spec)) return false;
    bool shrinks = false;
    VertexSet added = x.universe() & ~w_mask;
    for_each_subset(w_mask, [&](VertexSet a0) {
        if (shrinks || a0 == w_mask) return;
        if (oracles::naive_is_minimal_pair(x, a0, a0 | added, spec)) shrinks = true;
    });
    if (shrinks) return false;
    for (int n = 1; n <= n_max; ++n) {
        FlatPower pw = flat_power(x, to_vertices(w_mask), n);
        if (!oracles::naive_in_class(pw.d, spec)) return false;
    }
    // clause 3
    for (int n = 1; n <= n_max; ++n) {
        FlatPower pw = flat_power(x, v_verts, n);
        VertexSet lhs = 0;
        for (int c = 0; c < n; ++c)
            for_each_vertex(w_mask, [&](int xv) { lhs |= bit(pw.copy_map[c][xv]); });
        if (!oracles::naive_is_strong(pw.d, lhs, pw.d.universe(), ClassSpec::k_alpha(spec.alpha)))
            return false;
    }
    return true;
}

bool criterion11(std::string& detail) {
    ClassSpec spec = ClassSpec::k_alpha_plus(Rational(1, 2));
    long long configs = 0, positives = 0;
    for (int n = 2; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        std::vector<std::pair<int, int>> edge_list;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) edge_list.emplace_back(u, v);
        for (std::uint64_t em = 0; em < (std::uint64_t{1} << pairs); ++em) {
            Structure x(n);
            for (int e = 0; e < pairs; ++e)
                if ((em >> e) & 1) x.add_edge(edge_list[e].first, edge_list[e].second);
            if (!in_class_alpha(x, Rational(1, 2), true)) continue;
            // designations: each vertex is V, P, Q, or other
            long long total = 1;
            for (int i = 0; i < n; ++i) total *= 4;
            for (long long code = 0; code < total; ++code) {
                long long c = code;
                std::vector<int> v_verts, p_verts, q_verts;
                for (int i = 0; i < n; ++i) {
                    int col = static_cast<int>(c % 4);
                    c /= 4;
                    if (col == 1) v_verts.push_back(i);
                    if (col == 2) p_verts.push_back(i);
                    if (col == 3) q_verts.push_back(i);
                }
                if (p_verts.size() != q_verts.size()) continue;
                if (v_verts.empty() && p_verts.empty()) continue; // U must be nonempty
                if (p_verts.size() > 2) continue;

                // all alignments of the second copy
                std::vector<std::vector<int>> alignments;
                if (p_verts.empty()) {
                    alignments.push_back({});
                } else if (p_verts.size() == 1) {
                    alignments.push_back({q_verts[0]});
                } else {
                    alignments.push_back({q_verts[0], q_verts[1]});
                    alignments.push_back({q_verts[1], q_verts[0]});
                }
                for (const auto& q_for_p : alignments) {
                    ++configs;
                    // checker inputs: B carries U = V u P re-indexed
                    std::vector<int> u_x; // U's vertices inside x, ascending
                    for (int v : v_verts) u_x.push_back(v);
                    for (int v : p_verts) u_x.push_back(v);
                    std::sort(u_x.begin(), u_x.end());
                    Induced b = induced_substructure(x, from_vertices(u_x));
                    ArithWitnessConfig cfg;
                    cfg.spec = spec;
                    cfg.b = b.structure;
                    cfg.a_in_b = 0;
                    cfg.u_in_b = b.structure.universe();
                    for (std::size_t i = 0; i < u_x.size(); ++i)
                        if (std::find(v_verts.begin(), v_verts.end(), u_x[i]) != v_verts.end())
                            cfg.v_in_u |= bit(static_cast<int>(i));
                    cfg.n_max = 2;
                    for (int uxv : u_x) {
                        cfg.u_image.push_back(uxv);
                        auto it = std::find(p_verts.begin(), p_verts.end(), uxv);
                        if (it == p_verts.end())
                            cfg.uprime_image.push_back(uxv); // V part
                        else
                            cfg.uprime_image.push_back(q_for_p[it - p_verts.begin()]);
                    }
                    cfg.x = x;
                    bool checker = check_arithmetic_witness(cfg).ok;
                    bool oracle = oracle_arith_witness(x, v_verts, p_verts, q_verts, q_for_p, 2, spec);
                    if (checker != oracle) {
                        detail = "disagreement on a " + std::to_string(n) + "-vertex configuration";
                        return false;
                    }
                    if (checker) ++positives;
                }
            }
        }
    }
    detail = std::to_string(configs) + " configurations compared, " + std::to_string(positives) +
             " witnesses found";
    return positives > 0;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> criteria = {
        {1, "closure oracle equivalence", criterion1},
        {2, "predimension laws", criterion2},
        {3, "order axioms and full amalgamation", criterion3},
        {4, "granularity", criterion4},
        {5, "anti-collapse amalgamation and bounded extensions", criterion5},
        {6, "nine-common-neighbor rejection", criterion6},
        {7, "generic stages", criterion7},
        {8, "support systems", criterion8},
        {9, "closure types", criterion9},
        {10, "independence-property configuration", criterion10},
        {11, "arithmetic-witness oracle equivalence", criterion11},
    };

    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    bool all_ok = true;
    for (const Criterion& c : criteria) {
        if (only != 0 && c.number != only) continue;
        auto start = Clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = seconds_since(start);
        std::printf("criterion %2d %s — %s (%s; %.1fs)\n", c.number, ok ? "PASS" : "FAIL", c.title,
                    detail.c_str(), secs);
        std::fflush(stdout);
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
