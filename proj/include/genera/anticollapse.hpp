#pragma once

#include <set>
#include <string>
#include <vector>

#include "genera/amalgam.hpp"
#include "genera/canonical.hpp"
#include "genera/closure.hpp"
#include "genera/embeddings.hpp"

namespace genera {

namespace acoll_detail {

/// Exact maximum family of pairwise disjoint vertex sets, by branch and
/// bound over the candidates with a used-vertex mask.  Candidates should be
/// deduplicated first.
inline int max_disjoint_family(const std::vector<VertexSet>& candidates,
                               std::vector<int>* witness = nullptr) {
    int m = static_cast<int>(candidates.size());
    int best = 0;
    std::vector<int> cur, best_set;
    auto rec = [&](auto&& self, int i, VertexSet used) -> void {
        if (static_cast<int>(cur.size()) + (m - i) <= best) return; // can't beat best
        if (i == m) {
            if (static_cast<int>(cur.size()) > best) {
                best = static_cast<int>(cur.size());
                best_set = cur;
            }
            return;
        }
        if (!(candidates[i] & used)) {
            cur.push_back(i);
            self(self, i + 1, used | candidates[i]);
            cur.pop_back();
        }
        self(self, i + 1, used);
    };
    rec(rec, 0, 0);
    if (witness) *witness = best_set;
    return best;
}

} // namespace acoll_detail

/// Least integer satisfying the pair-weight bound 2(delta(X)+delta(Y))/gamma.
inline long long mu_value(const Rational& dx, const Rational& dy, const AntiCollapseParams& params) {
    return ((Rational(2) * (dx + dy)) / params.gamma).ceil();
}

inline long long mu(const Structure& x, const Structure& y, const AntiCollapseParams& params) {
    return mu_value(delta(x, params.r), delta(y, params.r), params);
}

/// Maximum of mu over all two-part splits of X's vertex set, parts induced
/// (cross edges dropped) and possibly empty.
inline long long nu(const Structure& x, const AntiCollapseParams& params) {
    long long best = 0;
    VertexSet all = x.universe();
    for_each_subset(all, [&](VertexSet part) {
        Rational d0 = delta(x, part, params.r);
        Rational d1 = delta(x, all & ~part, params.r);
        long long m = mu_value(d0, d1, params);
        if (m > best) best = m;
    });
    return best;
}

/// The same quantity through the closed form 2(|X| - r e(X) + r maxcut)/gamma,
/// with the maximum cut found by subset enumeration.  Cross-check for nu.
inline long long nu_maxcut_form(const Structure& x, const AntiCollapseParams& params) {
    int best_cut = 0;
    VertexSet all = x.universe();
    for_each_subset(all, [&](VertexSet part) {
        int cut = x.edges_between(part, all & ~part);
        if (cut > best_cut) best_cut = cut;
    });
    Rational weight = Rational(x.size()) - params.r * Rational(x.edge_count()) +
                      params.r * Rational(best_cut);
    return ((Rational(2) * weight) / params.gamma).ceil();
}

/// A maximum family of copies of a pattern over a base, pairwise meeting
/// only inside the base.
struct DisjointCopyFamily {
    long long count = 0;
    std::vector<Embedding> members;
};

/// Exact maximum number of pairwise base-disjoint copies of y over the base,
/// with a witnessing family.  A copy is a substructure, so embeddings with
/// the same image collapse to one candidate before the disjointness search.
inline DisjointCopyFamily max_disjoint_copies(const Structure& ambient,
                                              const std::vector<int>& x_in_ambient,
                                              const Structure& y,
                                              const std::vector<int>& x_in_y) {
    auto copies = copies_over_base(ambient, x_in_ambient, y, x_in_y);
    VertexSet base_mask = from_vertices(x_in_ambient);
    std::vector<VertexSet> outside;
    std::vector<const Embedding*> rep;
    for (const auto& e : copies) {
        VertexSet img = e.image() & ~base_mask;
        if (std::find(outside.begin(), outside.end(), img) == outside.end()) {
            outside.push_back(img);
            rep.push_back(&e);
        }
    }
    DisjointCopyFamily fam;
    std::vector<int> pick;
    fam.count = acoll_detail::max_disjoint_family(outside, &pick);
    for (int i : pick) fam.members.push_back(*rep[i]);
    return fam;
}

struct AdmissibilityReport {
    bool admissible = true;
    int failed_clause = 0; // 1, 2, or 3 when !admissible
    VertexSet witness_x = 0;
    VertexSet witness_y = 0;
    long long count = 0;
    long long nu_bound = 0;
    int ext_cap = 0;

    std::string str() const {
        if (admissible) return "admissible ext_cap=" + std::to_string(ext_cap);
        std::string line = "clause" + std::to_string(failed_clause) + " FAIL";
        if (failed_clause == 2) line += " class=" + set_str(witness_x);
        if (failed_clause == 3)
            line += " X=" + set_str(witness_x) + " Y=" + set_str(witness_y) +
                    " count=" + std::to_string(count) + " nu=" + std::to_string(nu_bound);
        line += " ext_cap=" + std::to_string(ext_cap);
        return line;
    }
};

/// Admissibility of a two-sorted structure:
///   (1) the graph reduct is hereditarily positive at weight r;
///   (2) every equivalence class has fewer than N vertices;
///   (3) over every non-homogeneous X, every proper 0-extension pattern
///       realized inside A (up to ext_cap added vertices) has at most nu(X)
///       pairwise base-disjoint copies.
/// Clause (3) is checked at the stated cap; reports carry the cap.
inline AdmissibilityReport is_admissible(const Structure& a, const AntiCollapseParams& params,
                                         int ext_cap = 5) {
    AdmissibilityReport rep;
    rep.ext_cap = ext_cap;
    require_search_bits(a.size(), "is_admissible over X=" + set_str(a.universe()));

    if (!in_class_alpha(a, params.r, /*strict=*/true)) {
        rep.admissible = false;
        rep.failed_clause = 1;
        return rep;
    }

    for (VertexSet cls : a.classes_within(a.universe())) {
        if (popcount(cls) >= params.n_bound) {
            rep.admissible = false;
            rep.failed_clause = 2;
            rep.witness_x = cls;
            return rep;
        }
    }

    VertexSet all = a.universe();
    bool ok = true;
    for_each_subset(all, [&](VertexSet x_mask) {
        if (!ok || popcount(x_mask) < 2 || a.is_homogeneous(x_mask)) return;
        long long bound = -1; // computed lazily
        std::set<std::string> seen_patterns;
        std::vector<int> x_list = to_vertices(x_mask);
        VertexSet room = all & ~x_mask;
        for (int k = 1; k <= std::min(ext_cap, popcount(room)) && ok; ++k) {
            closure_detail::for_each_k_subset(room, k, [&](VertexSet ext) {
                VertexSet y_mask = x_mask | ext;
                if (delta_rel(a, y_mask, x_mask, params.r) != Rational(0)) return false;
                if (!is_proper_zero_extension(a, x_mask, y_mask, params.r)) return false;
                Induced pat = induced_substructure(a, y_mask);
                std::vector<int> x_in_pat;
                for (std::size_t i = 0; i < pat.original.size(); ++i)
                    if (contains(x_mask, pat.original[i])) x_in_pat.push_back(static_cast<int>(i));
                std::string key = canonical_form_pinned(pat.structure, x_in_pat);
                if (!seen_patterns.insert(key).second) return false; // same pattern over X
                if (bound < 0) bound = nu(induced_substructure(a, x_mask).structure, params);
                auto fam = max_disjoint_copies(a, x_list, pat.structure, x_in_pat);
                if (fam.count > bound) {
                    rep.admissible = false;
                    rep.failed_clause = 3;
                    rep.witness_x = x_mask;
                    rep.witness_y = y_mask;
                    rep.count = fam.count;
                    rep.nu_bound = bound;
                    ok = false;
                    return true;
                }
                return false;
            });
        }
    });
    return rep;
}

/// Membership in the active class: hereditary predimension for the graph
/// classes, admissibility for the two-sorted class.
inline bool class_membership(const Structure& s, const ClassSpec& spec, int ext_cap = 5) {
    if (spec.is_star()) return is_admissible(s, spec.params, ext_cap).admissible;
    return in_class_alpha(s, spec.alpha, spec.strict());
}

struct Bounded1Report {
    bool applicable = false;
    bool ok = true;
    long long count = 0;
    long long nu_bound = 0;
    std::vector<VertexSet> witness_family; // the added parts of a maximum family

    std::string str() const {
        if (!applicable) return "not applicable (U does not straddle both sides)";
        std::string line = ok ? "bounded1 PASS" : "bounded1 FAIL";
        line += " count=" + std::to_string(count) + " nu=" + std::to_string(nu_bound);
        return line;
    }
};

/// Exact maximum family of pairwise base-disjoint proper 0-extensions of U
/// inside d, capped at ext_cap added vertices per extension.
inline Bounded1Report count_disjoint_zero_extensions(const Structure& d, VertexSet u_mask,
                                                     const AntiCollapseParams& params, int ext_cap) {
    Bounded1Report rep;
    rep.applicable = true;
    rep.nu_bound = nu(induced_substructure(d, u_mask).structure, params);

    std::vector<VertexSet> added;
    VertexSet room = d.universe() & ~u_mask;
    for (int k = 1; k <= std::min(ext_cap, popcount(room)); ++k) {
        closure_detail::for_each_k_subset(room, k, [&](VertexSet ext) {
            VertexSet z = u_mask | ext;
            if (delta_rel(d, z, u_mask, params.r) != Rational(0)) return false;
            if (is_proper_zero_extension(d, u_mask, z, params.r)) added.push_back(ext);
            return false;
        });
    }
    std::vector<int> pick;
    rep.count = acoll_detail::max_disjoint_family(added, &pick);
    for (int i : pick) rep.witness_family.push_back(added[i]);
    rep.ok = rep.count <= rep.nu_bound;
    return rep;
}

/// Builds D = B (+)_A C and verifies the disjoint-extension bound for one U
/// inside D.  U must straddle both new sides for the bound to apply; other
/// U are reported as not applicable.
struct Bounded1Instance {
    Amalgam amalgam;
    VertexSet a_mask = 0, b_mask = 0, c_mask = 0;
};

inline Bounded1Instance build_bounded1_instance(const GluedTriple& t, const AntiCollapseParams& params) {
    Amalgam am = free_amalgam(t);
    Bounded1Instance inst;
    inst.a_mask = 0;
    for (auto [bv, cv] : t.ident) inst.a_mask |= bit(am.b_map[bv]);
    inst.b_mask = 0;
    for (int v : am.b_map) inst.b_mask |= bit(v);
    inst.c_mask = 0;
    for (int v : am.c_map) inst.c_mask |= bit(v);
    ClassSpec spec = ClassSpec::anti_collapse(params.r, params.n_bound);
    if (auto res = is_strong(am.d, inst.a_mask, inst.b_mask, spec); !res.strong)
        throw InputError("bounded1: shared part is not star-strong in B, witness " + set_str(res.witness));
    if (auto res = is_strong(am.d, inst.a_mask, inst.c_mask, spec); !res.strong)
        throw InputError("bounded1: shared part is not star-strong in C, witness " + set_str(res.witness));
    inst.amalgam = std::move(am);
    return inst;
}

inline Bounded1Report check_bounded1_instance(const Bounded1Instance& inst, VertexSet u_mask,
                                              const AntiCollapseParams& params, int ext_cap = 4) {
    const Structure& d = inst.amalgam.d;
    d.check_subset(u_mask);
    bool straddles = (u_mask & (inst.b_mask & ~inst.a_mask)) && (u_mask & (inst.c_mask & ~inst.a_mask));
    if (!straddles) return Bounded1Report{}; // not applicable
    return count_disjoint_zero_extensions(d, u_mask, params, ext_cap);
}

} // namespace genera
