#pragma once

// Suite registry for the property harness.  Each suite pairs a seeded
// instance generator with a checker for one family of laws; the acceptance
// suite drives these with pinned configurations.

#include "genera/fuzz.hpp"

namespace genera::fuzz_detail {

inline std::optional<std::string> fail(const std::string& msg) { return msg; }

// ---- delta laws -----------------------------------------------------------

inline Suite suite_delta_additivity() {
    Suite s;
    s.description = "relative predimension adds over amalgam families";
    s.generate = [](Rng& rng, const FuzzConfig& cfg) {
        Instance inst;
        Structure base = random_graph(rng, 3, 0.5);
        inst.structures.push_back({"base", base});
        int members = rand_int(rng, 1, 3);
        for (int i = 0; i < members; ++i) {
            int extra = rand_int(rng, 0, 3);
            Structure m(base.size() + extra);
            for (int u = 0; u < base.size(); ++u)
                for (int v = u + 1; v < base.size(); ++v)
                    if (base.has_edge(u, v)) m.add_edge(u, v);
            for (int v = base.size(); v < m.size(); ++v)
                for (int u = 0; u < v; ++u)
                    if (rand_chance(rng, 0.5)) m.add_edge(u, v);
            inst.structures.push_back({"member" + std::to_string(i), m});
        }
        inst.params.push_back(cfg.spec.alpha.num());
        inst.params.push_back(cfg.spec.alpha.den());
        return inst;
    };
    s.check = [](const Instance& inst, const FuzzConfig&) -> std::optional<std::string> {
        if (inst.structures.size() < 2 || inst.params.size() < 2) return pass();
        Rational alpha(inst.params[0], inst.params[1] == 0 ? 1 : inst.params[1]);
        const Structure& base = the(inst, 0);
        std::vector<int> base_list(base.size());
        for (int i = 0; i < base.size(); ++i) base_list[i] = i;
        std::vector<OplusMember> members;
        Rational sum(0);
        for (std::size_t i = 1; i < inst.structures.size(); ++i) {
            const Structure& m = the(inst, i);
            if (m.size() < base.size()) return pass();
            members.push_back(OplusMember{m, base_list});
            sum += delta(m, alpha) - delta(m, full_set(base.size()), alpha);
        }
        OplusResult res;
        try {
            res = oplus_family(base, members);
        } catch (const InputError&) {
            return pass(); // shrink broke the base alignment
        }
        Rational lhs = delta(res.d, alpha) - delta(res.d, full_set(base.size()), alpha);
        if (lhs != sum)
            return fail("delta(amalgam/base) = " + lhs.str() + " but member sum = " + sum.str());
        return pass();
    };
    return s;
}

// Conditioning on more can only lower the relative predimension, provided
// the extra conditioning does not swallow vertices of B \ A (with the union
// convention the law fails otherwise: conditioning a star's center away from
// B = {leaf, center} over A = the leaves raises the value from -1/2 to 0).
inline Suite suite_delta_monotonicity() {
    Suite s;
    s.description = "delta(B/AC) <= delta(B/A) when C avoids B \\ A";
    s.generate = [](Rng& rng, const FuzzConfig& cfg) {
        Instance inst;
        Structure g = random_graph(rng, cfg.max_vertices, 0.45);
        VertexSet u = g.universe();
        VertexSet a = random_subset(rng, u);
        VertexSet b = random_subset(rng, u);
        VertexSet c = random_subset(rng, u) & ~(b & ~a);
        inst.structures.push_back({"ambient", g});
        inst.sets = {{0, a}, {0, b}, {0, c}};
        inst.params = {cfg.spec.alpha.num(), cfg.spec.alpha.den()};
        return inst;
    };
    s.check = [](const Instance& inst, const FuzzConfig&) -> std::optional<std::string> {
        if (inst.structures.size() != 1 || inst.sets.size() != 3 || inst.params.size() < 2) return pass();
        Rational alpha(inst.params[0], inst.params[1] == 0 ? 1 : inst.params[1]);
        const Structure& g = the(inst, 0);
        VertexSet a = inst.sets[0].second, b = inst.sets[1].second;
        VertexSet c = inst.sets[2].second & ~(inst.sets[1].second & ~inst.sets[0].second);
        Rational narrow = delta_rel(g, b, a | c, alpha);
        Rational wide = delta_rel(g, b, a, alpha);
        if (!(narrow <= wide))
            return fail("delta(B/AC) = " + narrow.str() + " > delta(B/A) = " + wide.str());
        return pass();
    };
    return s;
}

inline Suite suite_delta_boundary() {
    Suite s;
    s.description = "delta(B/A) = |B\\A| - r e(B\\A) - r e(B,A)";
    s.generate = [](Rng& rng, const FuzzConfig& cfg) {
        Instance inst;
        Structure g = random_graph(rng, cfg.max_vertices, 0.45);
        VertexSet a = random_subset(rng, g.universe());
        VertexSet b = a | random_subset(rng, g.universe());
        inst.structures.push_back({"ambient", g});
        inst.sets = {{0, a}, {0, b}};
        inst.params = {cfg.spec.alpha.num(), cfg.spec.alpha.den()};
        return inst;
    };
    s.check = [](const Instance& inst, const FuzzConfig&) -> std::optional<std::string> {
        if (inst.structures.size() != 1 || inst.sets.size() != 2 || inst.params.size() < 2) return pass();
        Rational alpha(inst.params[0], inst.params[1] == 0 ? 1 : inst.params[1]);
        const Structure& g = the(inst, 0);
        VertexSet a = inst.sets[0].second, b = inst.sets[1].second | inst.sets[0].second;
        Rational lhs = delta_rel(g, b, a, alpha);
        VertexSet ext = b & ~a;
        Rational rhs = Rational(popcount(ext)) - alpha * Rational(g.edges_within(ext)) -
                       alpha * Rational(edge_boundary(g, b, a));
        if (lhs != rhs) return fail("boundary identity broke: " + lhs.str() + " vs " + rhs.str());
        return pass();
    };
    return s;
}

// ---- order axioms ----------------------------------------------------------

inline Suite suite_axioms() {
    Suite s;
    s.description = "reflexivity, empty base, transitivity, restriction, intersection";
    s.generate = [](Rng& rng, const FuzzConfig& cfg) {
        Instance inst;
        Structure g = random_in_class(cfg.spec, cfg.max_vertices, rng);
        VertexSet u = g.universe();
        VertexSet c = random_subset(rng, u, 0.75);
        VertexSet b = random_subset(rng, c, 0.75);
        VertexSet a = random_subset(rng, b, 0.6);
        inst.structures.push_back({"ambient", g});
        inst.sets = {{0, a}, {0, b}, {0, c}, {0, random_subset(rng, u)}};
        return inst;
    };
    s.check = [](const Instance& inst, const FuzzConfig& cfg) -> std::optional<std::string> {
        if (inst.structures.size() != 1 || inst.sets.size() != 4) return pass();
        const Structure& g = the(inst, 0);
        VertexSet a = inst.sets[0].second, b = inst.sets[1].second | inst.sets[0].second;
        VertexSet c = inst.sets[2].second | b;
        VertexSet d = inst.sets[3].second;
        const ClassSpec& spec = cfg.spec;
        if (!is_strong(g, a, a, spec).strong) return fail("reflexivity broke on " + set_str(a));
        if (!is_strong(g, 0, c, spec).strong) return fail("empty base is not strong in " + set_str(c));
        bool ab = is_strong(g, a, b, spec).strong;
        bool bc = is_strong(g, b, c, spec).strong;
        bool ac = is_strong(g, a, c, spec).strong;
        if (ab && bc && !ac) return fail("transitivity broke");
        if (ac && !ab) return fail("restriction broke");
        if (ab) {
            if (!is_strong(g, a & d, b & d, spec).strong)
                return fail("intersection broke with C = " + set_str(d));
        }
        return pass();
    };
    return s;
}

inline Suite suite_strong_oracle() {
    Suite s;
    s.description = "branch-and-bound strength agrees with full enumeration";
    s.generate = [](Rng& rng, const FuzzConfig& cfg) {
        Instance inst;
        Structure g = random_graph(rng, std::min(cfg.max_vertices, 10), 0.45, cfg.spec.is_star());
        VertexSet b = random_subset(rng, g.universe(), 0.8);
        VertexSet a = random_subset(rng, b, 0.5);
        inst.structures.push_back({"ambient", g});
        inst.sets = {{0, a}, {0, b}};
        return inst;
    };
    s.check = [](const Instance& inst, const FuzzConfig& cfg) -> std::optional<std::string> {
        if (inst.structures.size() != 1 || inst.sets.size() != 2) return pass();
        const Structure& g = the(inst, 0);
        VertexSet a = inst.sets[0].second, b = inst.sets[1].second | inst.sets[0].second;
        bool fast = is_strong(g, a, b, cfg.spec).strong;
        bool slow = oracles::naive_is_strong(g, a, b, cfg.spec);
        if (fast != slow)
            return fail("is_strong disagrees with enumeration on A=" + set_str(a) + " B=" + set_str(b));
        bool mfast = in_class_alpha(g, cfg.spec.alpha, cfg.spec.strict());
        bool mslow = oracles::naive_in_class(g, cfg.spec);
        if (mfast != mslow) return fail("membership disagrees with enumeration");
        return pass();
    };
    return s;
}

inline Suite suite_minpair_oracle() {
    Suite s;
    s.description = "minimal-pair shortcut agrees with the definition";
    s.generate = [](Rng& rng, const FuzzConfig& cfg) {
        Instance inst;
        Structure g = random_graph(rng, std::min(cfg.max_vertices, 9), 0.45, cfg.spec.is_star());
        VertexSet b = random_subset(rng, g.universe(), 0.8);
        VertexSet a = random_subset(rng, b, 0.5);
        inst.structures.push_back({"ambient", g});
        inst.sets = {{0, a}, {0, b}};
        return inst;
    };
    s.check = [](const Instance& inst, const FuzzConfig& cfg) -> std::optional<std::string> {
        if (inst.structures.size() != 1 || inst.sets.size() != 2) return pass();
        const Structure& g = the(inst, 0);
        VertexSet a = inst.sets[0].second, b = inst.sets[1].second | inst.sets[0].second;
        bool fast = is_minimal_pair(g, a, b, cfg.spec);
        bool slow = oracles::naive_is_minimal_pair(g, a, b, cfg.spec);
        if (fast != slow)
            return fail("is_minimal_pair disagrees on A=" + set_str(a) + " B=" + set_str(b));
        return pass();
    };
    return s;
}

// ---- closure ---------------------------------------------------------------

inline Suite suite_closure_oracle() {
    Suite s;
    s.description = "closure equals the brute-force least closed superset";
    s.generate = [](Rng& rng, const FuzzConfig& cfg) {
        Instance inst;
        Structure g = random_in_class(cfg.spec, std::min(cfg.max_vertices, 8), rng);
        inst.structures.push_back({"ambient", g});
        inst.sets = {{0, random_subset(rng, g.universe(), 0.4)}};
        return inst;
    };
    s.check = [](const Instance& inst, const FuzzConfig& cfg) -> std::optional<std::string> {
        if (inst.structures.size() != 1 || inst.sets.size() != 1) return pass();
        const Structure& g = the(inst, 0);
        if (!class_membership(g, cfg.spec)) return pass(); // shrank outside the class
        VertexSet a = inst.sets[0].second;
        VertexSet fast = closure_in(g, a, cfg.spec);
        VertexSet slow = oracles::brute_force_closure(g, a, cfg.spec);
        if (fast != slow)
            return fail("closure_in gave " + set_str(fast) + ", brute force gave " + set_str(slow));
        return pass();
    };
    return s;
}

inline Suite suite_closure_props() {
    Suite s;
    s.description = "closure is extensive, monotone, idempotent, and closed";
    s.generate = [](Rng& rng, const FuzzConfig& cfg) {
        Instance inst;
        Structure g = random_in_class(cfg.spec, std::min(cfg.max_vertices, 8), rng);
        VertexSet b = random_subset(rng, g.universe(), 0.5);
        VertexSet a = random_subset(rng, b, 0.6);
        inst.structures.push_back({"ambient", g});
        inst.sets = {{0, a}, {0, b}};
        return inst;
    };
    s.check = [](const Instance& inst, const FuzzConfig& cfg) -> std::optional<std::string> {
        if (inst.structures.size() != 1 || inst.sets.size() != 2) return pass();
        const Structure& g = the(inst, 0);
        if (!class_membership(g, cfg.spec)) return pass();
        VertexSet a = inst.sets[0].second, b = inst.sets[1].second | inst.sets[0].second;
        VertexSet ca = closure_in(g, a, cfg.spec);
        VertexSet cb = closure_in(g, b, cfg.spec);
        if (!subset_of(a, ca)) return fail("closure is not extensive");
        if (!subset_of(ca, cb)) return fail("closure is not monotone");
        if (closure_in(g, ca, cfg.spec) != ca) return fail("closure is not idempotent");
        if (!is_closed(g, ca, cfg.spec)) return fail("closure output is not closed");
        if (!oracles::naive_is_closed(g, ca, cfg.spec))
            return fail("closure output fails the definitional closedness scan");
        return pass();
    };
    return s;
}

inline Suite suite_zeroext_props() {
    Suite s;
    s.description = "0-extensions have zero relative predimension and no negative middles";
    s.generate = [](Rng& rng, const FuzzConfig& cfg) {
        Instance inst;
        Structure g = random_in_class(cfg.spec.reduct(), std::min(cfg.max_vertices, 7), rng);
        VertexSet z = random_subset(rng, g.universe(), 0.8);
        VertexSet x = random_subset(rng, z, 0.55);
        inst.structures.push_back({"ambient", g});
        inst.sets = {{0, x}, {0, z}};
        return inst;
    };
    s.check = [](const Instance& inst, const FuzzConfig& cfg) -> std::optional<std::string> {
        if (inst.structures.size() != 1 || inst.sets.size() != 2) return pass();
        const Structure& g = the(inst, 0);
        VertexSet x = inst.sets[0].second, z = inst.sets[1].second | inst.sets[0].second;
        Rational r = cfg.spec.alpha;
        auto chain = zero_extension_chain(g, x, z, r);
        if (!chain) return pass();
        if (chain->front() != x || chain->back() != z) return fail("witness chain endpoints wrong");
        for (std::size_t i = 0; i + 1 < chain->size(); ++i) {
            if (delta_rel(g, (*chain)[i + 1], (*chain)[i], r) != Rational(0))
                return fail("witness chain has a nonzero step");
            if (!oracles::naive_is_minimal_pair(g, (*chain)[i], (*chain)[i + 1],
                                                ClassSpec::k_alpha_plus(r)))
                return fail("witness chain step is not a minimal pair by the definition");
        }
        bool bad_middle = false;
        for_each_subset(z & ~x, [&](VertexSet mid) {
            if (delta_rel(g, x | mid, x, r) < Rational(0)) bad_middle = true;
        });
        if (bad_middle) return fail("0-extension admits a negative intermediate");
        return pass();
    };
    return s;
}

// ---- amalgamation ----------------------------------------------------------

inline Suite suite_free_amalgam() {
    Suite s;
    s.description = "free amalgams are symmetric, edge-exact, and class-closed";
    s.generate = [](Rng& rng, const FuzzConfig& cfg) {
        Instance inst;
        Structure a = random_in_class(cfg.spec, 3, rng);
        Rng rb(rng()), rc(rng());
        Structure b = random_strong_extension(a, cfg.spec, cfg.max_vertices - a.size(), rb);
        Structure c = random_strong_extension(a, cfg.spec, cfg.max_vertices - a.size(), rc);
        inst.structures.push_back({"a", a});
        inst.structures.push_back({"b", b});
        inst.structures.push_back({"c", c});
        return inst;
    };
    s.check = [](const Instance& inst, const FuzzConfig& cfg) -> std::optional<std::string> {
        if (inst.structures.size() != 3) return pass();
        const Structure& a = the(inst, 0);
        const Structure& b = the(inst, 1);
        const Structure& c = the(inst, 2);
        if (b.size() < a.size() || c.size() < a.size()) return pass();
        std::vector<std::pair<int, int>> ident;
        for (int i = 0; i < a.size(); ++i) ident.emplace_back(i, i);
        Amalgam bc, cb;
        try {
            bc = free_amalgam(GluedTriple{b, c, ident});
            cb = free_amalgam(GluedTriple{c, b, ident});
        } catch (const InputError&) {
            return pass(); // shrink broke the shared part
        }
        if (canonical_form(bc.d) != canonical_form(cb.d))
            return fail("free amalgam is not symmetric up to isomorphism");
        int ea = b.edges_within(full_set(a.size()));
        if (bc.d.edge_count() != b.edge_count() + c.edge_count() - ea)
            return fail("edge count of the amalgam is off");
        VertexSet a_mask = full_set(a.size());
        bool b_strong = is_strong(b, a_mask, b.universe(), cfg.spec).strong;
        bool c_strong = is_strong(c, a_mask, c.universe(), cfg.spec).strong;
        if (b_strong && c_strong && class_membership(b, cfg.spec) && class_membership(c, cfg.spec)) {
            if (!class_membership(bc.d, cfg.spec)) return fail("amalgam left the class");
            VertexSet b_img = 0, c_img = 0;
            for (int v : bc.b_map) b_img |= bit(v);
            for (int v : bc.c_map) c_img |= bit(v);
            if (!is_strong(bc.d, b_img, bc.d.universe(), cfg.spec).strong)
                return fail("B is not strong in the amalgam");
            if (!is_strong(bc.d, c_img, bc.d.universe(), cfg.spec).strong)
                return fail("C is not strong in the amalgam");
        }
        return pass();
    };
    return s;
}

inline Suite suite_full_amalgam() {
    Suite s;
    s.description = "strong side plus plain side amalgamate with the plain side strong";
    s.generate = [](Rng& rng, const FuzzConfig& cfg) {
        Instance inst;
        Structure a = random_in_class(cfg.spec, 3, rng);
        Rng rb(rng()), rc(rng());
        Structure b = random_strong_extension(a, cfg.spec, cfg.max_vertices - a.size(), rb);
        Structure c = random_class_extension(a, cfg.spec, cfg.max_vertices - a.size(), rc);
        inst.structures.push_back({"a", a});
        inst.structures.push_back({"b", b});
        inst.structures.push_back({"c", c});
        return inst;
    };
    s.check = [](const Instance& inst, const FuzzConfig& cfg) -> std::optional<std::string> {
        if (inst.structures.size() != 3) return pass();
        const Structure& a = the(inst, 0);
        const Structure& b = the(inst, 1);
        const Structure& c = the(inst, 2);
        if (b.size() < a.size() || c.size() < a.size()) return pass();
        VertexSet a_mask = full_set(a.size());
        if (!is_strong(b, a_mask, b.universe(), cfg.spec).strong) return pass();
        if (!class_membership(b, cfg.spec) || !class_membership(c, cfg.spec)) return pass();
        std::vector<std::pair<int, int>> ident;
        for (int i = 0; i < a.size(); ++i) ident.emplace_back(i, i);
        FullAmalgamOutcome out;
        try {
            out = check_full_amalgamation_instance(GluedTriple{b, c, ident}, cfg.spec, cfg.ext_cap);
        } catch (const InputError&) {
            return pass();
        }
        if (!out.d_in_class) return fail("full amalgamation: amalgam left the class");
        if (!out.c_in_d.strong)
            return fail("full amalgamation: C not strong in D, witness " + set_str(out.c_in_d.witness));
        return pass();
    };
    return s;
}

inline Suite suite_bounded_zero_extensions() {
    Suite s;
    s.description = "disjoint proper 0-extension families in amalgams respect nu";
    s.generate = [](Rng& rng, const FuzzConfig& cfg) {
        if (!cfg.spec.is_star()) throw InputError("suite bounded1 needs a star spec");
        Instance inst;
        Structure a = random_in_class(cfg.spec, 3, rng);
        Rng rb(rng()), rc(rng());
        Structure b = random_strong_extension(a, cfg.spec, cfg.max_vertices - a.size(), rb);
        Structure c = random_strong_extension(a, cfg.spec, cfg.max_vertices - a.size(), rc);
        inst.structures.push_back({"a", a});
        inst.structures.push_back({"b", b});
        inst.structures.push_back({"c", c});
        return inst;
    };
    s.check = [](const Instance& inst, const FuzzConfig& cfg) -> std::optional<std::string> {
        if (inst.structures.size() != 3 || !cfg.spec.is_star()) return pass();
        const Structure& a = the(inst, 0);
        const Structure& b = the(inst, 1);
        const Structure& c = the(inst, 2);
        if (b.size() < a.size() || c.size() < a.size()) return pass();
        std::vector<std::pair<int, int>> ident;
        for (int i = 0; i < a.size(); ++i) ident.emplace_back(i, i);
        Bounded1Instance d;
        try {
            d = build_bounded1_instance(GluedTriple{b, c, ident}, cfg.spec.params);
        } catch (const InputError&) {
            return pass(); // A was not star-strong on one side
        }
        const Structure& amb = d.amalgam.d;
        bool bad = false;
        std::string msg;
        for_each_subset(amb.universe(), [&](VertexSet u) {
            if (bad || popcount(u) < 2 || popcount(u) > cfg.u_cap) return;
            auto rep = check_bounded1_instance(d, u, cfg.spec.params, cfg.ext_cap);
            if (rep.applicable && !rep.ok) {
                bad = true;
                msg = "U=" + set_str(u) + " count=" + std::to_string(rep.count) +
                      " nu=" + std::to_string(rep.nu_bound);
            }
        });
        if (bad) return fail("bounded1 broke: " + msg);
        return pass();
    };
    return s;
}

// ---- anti-collapse ---------------------------------------------------------

inline Suite suite_nu_crosscheck() {
    Suite s;
    s.description = "partition enumeration and maxcut closed form agree on nu";
    s.generate = [](Rng& rng, const FuzzConfig& cfg) {
        if (!cfg.spec.is_star()) throw InputError("suite nu-crosscheck needs a star spec");
        Instance inst;
        Structure g = random_in_class(cfg.spec.reduct(), std::min(cfg.max_vertices, 8), rng);
        inst.structures.push_back({"x", g});
        return inst;
    };
    s.check = [](const Instance& inst, const FuzzConfig& cfg) -> std::optional<std::string> {
        if (inst.structures.size() != 1 || !cfg.spec.is_star()) return pass();
        long long a = nu(the(inst, 0), cfg.spec.params);
        long long b = nu_maxcut_form(the(inst, 0), cfg.spec.params);
        if (a != b)
            return fail("nu = " + std::to_string(a) + " by partitions, " + std::to_string(b) +
                        " by maxcut");
        return pass();
    };
    return s;
}

// ---- external closure and supports ----------------------------------------

inline Suite suite_ecl_chain() {
    Suite s;
    s.description = "external closure members admit chains meeting M exactly in X";
    s.generate = [](Rng& rng, const FuzzConfig& cfg) {
        Instance inst;
        AcyclicFixture fx = random_acyclic_fixture(rng, 4, std::max(0, cfg.max_vertices - 4));
        inst.structures.push_back({"ambient", fx.s});
        inst.sets = {{0, fx.m}};
        return inst;
    };
    s.check = [](const Instance& inst, const FuzzConfig&) -> std::optional<std::string> {
        if (inst.structures.size() != 1 || inst.sets.size() != 1) return pass();
        const Structure& g = the(inst, 0);
        ClassSpec spec = ClassSpec::k_alpha_plus(Rational(1));
        if (!class_membership(g, spec)) return pass();
        VertexSet m = inst.sets[0].second;
        bool bad = false;
        std::string msg;
        for_each_vertex(m, [&](int root) {
            if (bad) return;
            VertexSet x = bit(root);
            VertexSet ecl = external_closure(g, m, x, spec);
            for_each_vertex(ecl & ~m, [&](int a) {
                if (bad) return;
                auto chain = extract_external_chain(g, m, x, a, spec);
                if (!chain) {
                    bad = true;
                    msg = "no witness chain for vertex " + std::to_string(a);
                    return;
                }
                for (std::size_t i = 0; i < chain->size(); ++i) {
                    if (((*chain)[i] & m) != x) {
                        bad = true;
                        msg = "chain level meets M outside X";
                        return;
                    }
                    if (i + 1 < chain->size() &&
                        !oracles::naive_is_minimal_pair(g, (*chain)[i], (*chain)[i + 1], spec)) {
                        bad = true;
                        msg = "chain step is not a minimal pair by the definition";
                        return;
                    }
                }
            });
        });
        if (bad) return fail(msg);
        return pass();
    };
    return s;
}

/// Star instances: an admissible core M with free 0-chains attached over
/// homogeneous subsets.  Each external vertex belongs to exactly one class's
/// chain and attaches only inside it; linking chains of different classes
/// would create the cross-support dependencies the model setting rules out
/// through algebraic closure.  Only unit-numerator weights admit
/// single-vertex 0-steps.
inline Instance star_external_instance(Rng& rng, const FuzzConfig& cfg) {
    if (!cfg.spec.is_star()) throw InputError("star external suites need a star spec");
    const Rational& r = cfg.spec.params.r;
    if (r.num() != 1) throw InputError("star external suites need r with numerator 1");
    int attach_degree = static_cast<int>(r.den());

    Structure core = random_in_class(cfg.spec, 4, rng);
    int m_count = core.size();
    VertexSet m_mask = full_set(m_count);
    Structure g = core;
    std::vector<int> chain_of; // per external vertex: the anchor class representative
    int external = rand_int(rng, 0, std::max(0, cfg.max_vertices - m_count));
    for (int i = 0; i < external && m_count >= 1; ++i) {
        Structure cand = gen_detail::grow_by_vertex(g, true);
        int v = cand.size() - 1;
        int anchor = rand_int(rng, 0, m_count - 1);
        int anchor_rep = core.block_of(anchor);
        std::vector<int> pool;
        for_each_vertex(core.sclass_of(anchor) & m_mask, [&](int u) { pool.push_back(u); });
        for (int u = m_count; u < v; ++u)
            if (chain_of[u - m_count] == anchor_rep) pool.push_back(u);
        if (static_cast<int>(pool.size()) < attach_degree) continue;
        for (int pick = 0; pick < attach_degree; ++pick) {
            int idx = rand_int(rng, 0, static_cast<int>(pool.size()) - 1);
            int u = pool[idx];
            pool.erase(pool.begin() + idx);
            cand.add_edge(u, v);
        }
        if (in_class_alpha(cand, r, true)) {
            g = std::move(cand);
            chain_of.push_back(anchor_rep);
        }
    }
    Instance inst;
    inst.structures.push_back({"ambient", g});
    inst.sets = {{0, m_mask}};
    return inst;
}

inline Suite suite_star_ecl_dim() {
    Suite s;
    s.description = "external chains over a zero-closed M run at predimension zero";
    s.generate = star_external_instance;
    s.check = [](const Instance& inst, const FuzzConfig& cfg) -> std::optional<std::string> {
        if (inst.structures.size() != 1 || inst.sets.size() != 1 || !cfg.spec.is_star()) return pass();
        const Structure& g = the(inst, 0);
        VertexSet m = inst.sets[0].second;
        const ClassSpec& spec = cfg.spec;
        if (!class_membership(g, spec) || !is_zero_closed(g, m, spec)) return pass();
        bool bad = false;
        std::string msg;
        for (VertexSet x : g.classes_within(m)) {
            if (bad) break;
            VertexSet ecl = external_closure(g, m, x, spec);
            for_each_vertex(ecl & ~m, [&](int a) {
                if (bad) return;
                auto chain = extract_external_chain(g, m, x, a, spec);
                if (!chain) {
                    bad = true;
                    msg = "no chain witness for " + std::to_string(a);
                    return;
                }
                if (delta_rel(g, chain->back(), x, spec.alpha) != Rational(0)) {
                    bad = true;
                    msg = "chain has nonzero predimension over its base";
                    return;
                }
                if (delta_rel(g, chain->back() | m, m, spec.alpha) != Rational(0)) {
                    bad = true;
                    msg = "chain has nonzero predimension over M";
                }
            });
        }
        if (bad) return fail(msg);
        return pass();
    };
    return s;
}

inline Suite suite_star_beta2() {
    Suite s;
    s.description = "external closure is the union over homogeneous subsets";
    s.generate = star_external_instance;
    s.check = [](const Instance& inst, const FuzzConfig& cfg) -> std::optional<std::string> {
        if (inst.structures.size() != 1 || inst.sets.size() != 1 || !cfg.spec.is_star()) return pass();
        const Structure& g = the(inst, 0);
        VertexSet m = inst.sets[0].second;
        const ClassSpec& spec = cfg.spec;
        if (!class_membership(g, spec) || !is_zero_closed(g, m, spec)) return pass();
        bool bad = false;
        std::string msg;
        for_each_subset(m, [&](VertexSet x) {
            if (bad || popcount(x) > 4) return;
            VertexSet whole = external_closure(g, m, x, spec);
            VertexSet fromhom = x;
            for_each_subset(x, [&](VertexSet sub) {
                if (sub != 0 && g.is_homogeneous(sub))
                    fromhom |= external_closure(g, m, sub, spec);
            });
            if (whole != fromhom) {
                bad = true;
                msg = "ecl(" + set_str(x) + ") = " + set_str(whole) + " but homogeneous union = " +
                      set_str(fromhom);
            }
        });
        if (bad) return fail(msg);
        return pass();
    };
    return s;
}

inline Suite suite_star_hassupp() {
    Suite s;
    s.description = "every external closure vertex has an S-homogeneous support";
    s.generate = star_external_instance;
    s.check = [](const Instance& inst, const FuzzConfig& cfg) -> std::optional<std::string> {
        if (inst.structures.size() != 1 || inst.sets.size() != 1 || !cfg.spec.is_star()) return pass();
        const Structure& g = the(inst, 0);
        VertexSet m = inst.sets[0].second;
        const ClassSpec& spec = cfg.spec;
        if (!class_membership(g, spec) || !is_zero_closed(g, m, spec)) return pass();
        VertexSet cl = closure_in(g, m, spec);
        bool bad = false;
        int bad_v = -1;
        for_each_vertex(cl & ~m, [&](int a) {
            if (bad) return;
            bool covered = false;
            for_each_subset(m, [&](VertexSet x) {
                if (covered || x == 0 || !g.is_homogeneous(x)) return;
                if (contains(external_closure(g, m, x, spec), a)) covered = true;
            });
            if (!covered) {
                bad = true;
                bad_v = a;
            }
        });
        if (bad) return fail("vertex " + std::to_string(bad_v) + " has no homogeneous support");
        return pass();
    };
    return s;
}

inline Suite suite_supports_acyclic() {
    Suite s;
    s.description = "singleton systems on acyclic fixtures pass all four checks";
    s.generate = [](Rng& rng, const FuzzConfig& cfg) {
        Instance inst;
        AcyclicFixture fx = random_acyclic_fixture(rng, 4, std::max(0, cfg.max_vertices - 4));
        inst.structures.push_back({"ambient", fx.s});
        inst.sets = {{0, fx.m}};
        return inst;
    };
    s.check = [](const Instance& inst, const FuzzConfig&) -> std::optional<std::string> {
        if (inst.structures.size() != 1 || inst.sets.size() != 1) return pass();
        const Structure& g = the(inst, 0);
        VertexSet m = inst.sets[0].second;
        ClassSpec spec = ClassSpec::k_alpha_plus(Rational(1));
        if (!class_membership(g, spec) || m == 0) return pass();
        if (!is_zero_closed(g, m, spec)) return pass();
        SupportSystem sys;
        try {
            sys = build_candidate_system(g, m, spec, SystemKind::Singletons);
        } catch (const InputError&) {
            return pass();
        }
        SystemReport rep = verify_system(g, sys, spec, 1);
        if (!rep.all()) return fail("system check failed:\n" + rep.str());
        return pass();
    };
    return s;
}

// ---- closure types ---------------------------------------------------------

inline Suite suite_cltp_laws() {
    Suite s;
    s.description = "closure-type equality laws and automorphism invariance";
    s.generate = [](Rng& rng, const FuzzConfig& cfg) {
        Instance inst;
        Structure g = random_in_class(cfg.spec, std::min(cfg.max_vertices, 6), rng);
        inst.structures.push_back({"ambient", g});
        VertexSet u = g.universe();
        for (int i = 0; i < 3; ++i) {
            VertexSet t = random_subset(rng, u, 0.35);
            while (popcount(t) > 2) t &= t - 1;
            inst.sets.push_back({0, t});
        }
        return inst;
    };
    s.check = [](const Instance& inst, const FuzzConfig& cfg) -> std::optional<std::string> {
        if (inst.structures.size() != 1 || inst.sets.size() != 3) return pass();
        const Structure& g = the(inst, 0);
        const int depth = 2;
        std::vector<std::vector<int>> tuples;
        for (auto [idx, mask] : inst.sets) tuples.push_back(to_vertices(mask));
        while (tuples[1].size() > tuples[0].size()) tuples[1].pop_back();
        while (tuples[0].size() > tuples[1].size()) tuples[0].pop_back();
        while (tuples[2].size() > tuples[0].size()) tuples[2].pop_back();
        if (tuples[2].size() < tuples[0].size()) tuples[2] = tuples[0];

        auto eq = [&](const std::vector<int>& x, const std::vector<int>& y, int k) {
            return cltp_equal(g, x, y, k, cfg.spec).equal;
        };
        if (!eq(tuples[0], tuples[0], depth)) return fail("cltp equality is not reflexive");
        if (eq(tuples[0], tuples[1], depth) != eq(tuples[1], tuples[0], depth))
            return fail("cltp equality is not symmetric");
        if (eq(tuples[0], tuples[1], depth) && eq(tuples[1], tuples[2], depth) &&
            !eq(tuples[0], tuples[2], depth))
            return fail("cltp equality is not transitive");
        if (eq(tuples[0], tuples[1], depth)) {
            for (int k = 0; k < depth; ++k)
                if (!eq(tuples[0], tuples[1], k)) return fail("cltp equality is not depth-monotone");
        }
        if (g.size() <= 6) {
            bool bad = false;
            oracles::for_each_automorphism(g, [&](const std::vector<int>& perm) {
                if (bad) return;
                std::vector<int> mapped;
                for (int v : tuples[0]) mapped.push_back(perm[v]);
                if (!eq(tuples[0], mapped, depth)) bad = true;
            });
            if (bad) return fail("cltp is not automorphism-invariant");
        }
        return pass();
    };
    return s;
}

// ---- canonical forms and embeddings ----------------------------------------

inline Suite suite_canonical() {
    Suite s;
    s.description = "canonical forms are permutation-invariant and isomorphism-exact";
    s.generate = [](Rng& rng, const FuzzConfig& cfg) {
        Instance inst;
        bool part = rand_chance(rng, 0.5);
        Structure g = random_graph(rng, std::min(cfg.max_vertices, 6), 0.45, part);
        Structure h = random_graph(rng, g.size(), 0.45, part);
        inst.structures.push_back({"g", g});
        inst.structures.push_back({"h", h});
        inst.params.push_back(static_cast<long long>(rng() % 720));
        return inst;
    };
    s.check = [](const Instance& inst, const FuzzConfig&) -> std::optional<std::string> {
        if (inst.structures.size() != 2 || inst.params.empty()) return pass();
        const Structure& g = the(inst, 0);
        const Structure& h = the(inst, 1);
        std::vector<int> perm(g.size());
        for (int i = 0; i < g.size(); ++i) perm[i] = i;
        std::uint64_t k = static_cast<std::uint64_t>(inst.params[0]);
        for (int i = g.size() - 1; i > 0; --i) {
            std::swap(perm[i], perm[k % (i + 1)]);
            k = k / (i + 1) + 13;
        }
        if (canonical_form(g) != canonical_form(permuted(g, perm)))
            return fail("canonical form changed under a relabeling");
        if (are_isomorphic(g, h) != oracles::naive_isomorphic(g, h))
            return fail("canonical isomorphism disagrees with permutation search");
        return pass();
    };
    return s;
}

inline Suite suite_embeddings() {
    Suite s;
    s.description = "copies over a base are valid, base-fixing, and complete";
    s.generate = [](Rng& rng, const FuzzConfig& cfg) {
        Instance inst;
        Structure g = random_graph(rng, std::min(cfg.max_vertices, 7), 0.45);
        VertexSet base = random_subset(rng, g.universe(), 0.3);
        while (popcount(base) > 2) base &= base - 1;
        inst.structures.push_back({"ambient", g});
        inst.sets = {{0, base}};
        inst.params = {rand_int(rng, 0, 2)};
        return inst;
    };
    s.check = [](const Instance& inst, const FuzzConfig&) -> std::optional<std::string> {
        if (inst.structures.size() != 1 || inst.sets.size() != 1 || inst.params.empty()) return pass();
        const Structure& g = the(inst, 0);
        VertexSet base = inst.sets[0].second;
        int extra = static_cast<int>(inst.params[0]);
        // pattern: the base plus `extra` fresh vertices wired to everything
        // in the base (a concrete, easily-countable shape)
        std::vector<int> base_list = to_vertices(base);
        int nb = static_cast<int>(base_list.size());
        Structure pat(nb + extra);
        for (int i = 0; i < nb; ++i)
            for (int j = i + 1; j < nb; ++j)
                if (g.has_edge(base_list[i], base_list[j])) pat.add_edge(i, j);
        for (int e = 0; e < extra; ++e)
            for (int i = 0; i < nb; ++i) pat.add_edge(nb + e, i);
        std::vector<int> base_in_pat(nb);
        for (int i = 0; i < nb; ++i) base_in_pat[i] = i;
        auto copies = copies_over_base(g, base_list, pat, base_in_pat);
        for (const auto& e : copies) {
            if (!embedding_valid(pat, g, e)) return fail("an enumerated copy is not an embedding");
            for (int i = 0; i < nb; ++i)
                if (e.map[i] != base_list[i]) return fail("an enumerated copy moves the base");
        }
        // completeness against direct injection enumeration
        long long expect = 0;
        std::vector<int> cand;
        for (int v = 0; v < g.size(); ++v)
            if (!contains(base, v)) cand.push_back(v);
        std::vector<int> pickperm(cand.size());
        std::vector<bool> used(cand.size(), false);
        std::vector<int> chosen;
        auto rec = [&](auto&& self) -> void {
            if (static_cast<int>(chosen.size()) == extra) {
                Embedding e;
                e.map = base_list;
                for (int v : chosen) e.map.push_back(v);
                if (embedding_valid(pat, g, e)) ++expect;
                return;
            }
            for (std::size_t i = 0; i < cand.size(); ++i) {
                if (used[i]) continue;
                used[i] = true;
                chosen.push_back(cand[i]);
                self(self);
                chosen.pop_back();
                used[i] = false;
            }
        };
        rec(rec);
        if (static_cast<long long>(copies.size()) != expect)
            return fail("copy count " + std::to_string(copies.size()) + " vs direct count " +
                        std::to_string(expect));
        return pass();
    };
    return s;
}

// ---- harness self-test ------------------------------------------------------

inline Suite suite_self_test_broken() {
    Suite s;
    s.description = "deliberately false property; exercises shrinking and replay";
    s.generate = [](Rng& rng, const FuzzConfig& cfg) {
        Instance inst;
        inst.structures.push_back({"g", random_graph(rng, std::max(4, cfg.max_vertices), 0.7)});
        return inst;
    };
    s.check = [](const Instance& inst, const FuzzConfig&) -> std::optional<std::string> {
        if (inst.structures.size() != 1) return pass();
        if (the(inst, 0).edge_count() > 2)
            return fail("structure has more than two edges (the property is intentionally false)");
        return pass();
    };
    return s;
}

inline const std::map<std::string, Suite>& registry() {
    static const std::map<std::string, Suite> reg = [] {
        std::map<std::string, Suite> r;
        r["delta-additivity"] = suite_delta_additivity();
        r["delta-monotonicity"] = suite_delta_monotonicity();
        r["delta-boundary"] = suite_delta_boundary();
        r["axioms"] = suite_axioms();
        r["strong-oracle"] = suite_strong_oracle();
        r["minpair-oracle"] = suite_minpair_oracle();
        r["closure-oracle"] = suite_closure_oracle();
        r["closure-props"] = suite_closure_props();
        r["zeroext-props"] = suite_zeroext_props();
        r["free-amalgam"] = suite_free_amalgam();
        r["full-amalgam"] = suite_full_amalgam();
        r["bounded1"] = suite_bounded_zero_extensions();
        r["nu-crosscheck"] = suite_nu_crosscheck();
        r["ecl-chain"] = suite_ecl_chain();
        r["star-ecl-dim"] = suite_star_ecl_dim();
        r["star-beta2"] = suite_star_beta2();
        r["star-hassupp"] = suite_star_hassupp();
        r["supports-acyclic"] = suite_supports_acyclic();
        r["cltp-laws"] = suite_cltp_laws();
        r["canonical"] = suite_canonical();
        r["embeddings"] = suite_embeddings();
        r["self-test-broken"] = suite_self_test_broken();
        return r;
    }();
    return reg;
}

} // namespace genera::fuzz_detail
