#pragma once

#include <string>
#include <vector>

#include "genera/anticollapse.hpp"

namespace genera {

/// A family of subsets of a designated model-like set M whose external
/// closures are meant to cover the closure of M.
struct SupportSystem {
    VertexSet m = 0;
    std::vector<VertexSet> members;
};

/// The finite stand-in for M being a model: every minimal pair based inside
/// M that escapes M has relative predimension exactly zero (algebraic
/// extensions stay inside, only the transcendental ones may leave).  Checked
/// over pairs with at most max_ext added vertices.
inline bool is_zero_closed(const Structure& s, VertexSet m_mask, const ClassSpec& spec, int max_ext = 6) {
    s.check_subset(m_mask);
    for (const MinimalPair& mp : enumerate_minimal_pairs(s, m_mask, spec, max_ext)) {
        if (subset_of(mp.ext, m_mask)) continue;
        if (delta_rel(s, mp.ext, mp.base, spec.alpha) != Rational(0)) return false;
    }
    return true;
}

enum class SystemKind { Singletons, SHomogeneous };

/// Candidate systems: one singleton per vertex of M, or every nonempty
/// S-homogeneous subset of M.  M must be zero-closed.
inline SupportSystem build_candidate_system(const Structure& s, VertexSet m_mask, const ClassSpec& spec,
                                            SystemKind kind, int max_ext = 6) {
    s.check_subset(m_mask);
    if (!is_zero_closed(s, m_mask, spec, max_ext))
        throw InputError("support system: M " + set_str(m_mask) +
                         " is not closed under algebraic extensions in the ambient");
    SupportSystem sys;
    sys.m = m_mask;
    if (kind == SystemKind::Singletons) {
        for_each_vertex(m_mask, [&](int v) { sys.members.push_back(bit(v)); });
    } else {
        for_each_subset(m_mask, [&](VertexSet sub) {
            if (sub != 0 && s.is_homogeneous(sub)) sys.members.push_back(sub);
        });
    }
    return sys;
}

struct SystemReport {
    bool coverage = true;
    int uncovered = -1;

    bool bounded = true;
    VertexSet oversized = 0;

    bool unique = true;
    int multi_covered = -1;
    VertexSet first_support = 0, second_support = 0;

    bool free_closures = true;
    VertexSet free_witness_s = 0, free_witness_t = 0;

    bool edge_closed = true;
    int edge_witness_a = -1, edge_witness_m = -1;

    VertexSet closure_of_m = 0;
    std::vector<VertexSet> ecls;

    bool all() const { return coverage && bounded && unique && free_closures && edge_closed; }

    std::string str() const {
        std::string line;
        auto row = [&](const std::string& name, bool ok, const std::string& extra) {
            line += name + (ok ? " PASS" : " FAIL");
            if (!ok && !extra.empty()) line += " " + extra;
            line += "\n";
        };
        row("coverage", coverage, uncovered >= 0 ? "a=" + std::to_string(uncovered) : "");
        row("bounded", bounded, set_str(oversized));
        row("unique", unique,
            multi_covered >= 0 ? "a=" + std::to_string(multi_covered) + " supports " +
                                     set_str(first_support) + " and " + set_str(second_support)
                               : "");
        row("free-closures", free_closures,
            "S=" + set_str(free_witness_s) + " T=" + set_str(free_witness_t));
        row("edge-closed", edge_closed,
            edge_witness_a >= 0 ? "a=" + std::to_string(edge_witness_a) + " m=" + std::to_string(edge_witness_m)
                                : "");
        return line;
    }
};

/// Verifies the four system properties against a bound:
///   coverage     every external vertex of cl(M) lies in some member's
///                external closure (reported first; the rest presume it);
///   bounded      every member has at most `bound` vertices;
///   unique       every external vertex is covered by exactly one member;
///   free-closures  pairwise, the union of two members' external closures
///                is their edge-free join: the closures meet only inside
///                S u T and carry no relations between their external
///                parts;
///   edge-closed  unique supports absorb every ambient relation (edges, and
///                the equivalence relation when present) from an external
///                vertex into M.
inline SystemReport verify_system(const Structure& s, const SupportSystem& sys, const ClassSpec& spec,
                                  int bound, int max_ext = 6) {
    SystemReport rep;
    VertexSet m_mask = sys.m;
    rep.closure_of_m = closure_in(s, m_mask, spec);
    VertexSet external = rep.closure_of_m & ~m_mask;

    rep.ecls.reserve(sys.members.size());
    for (VertexSet member : sys.members)
        rep.ecls.push_back(external_closure(s, m_mask, member, spec, max_ext));

    for_each_vertex(external, [&](int a) {
        int hits = 0;
        VertexSet first = 0, second = 0;
        for (std::size_t i = 0; i < sys.members.size(); ++i) {
            if (contains(rep.ecls[i], a)) {
                ++hits;
                if (hits == 1) first = sys.members[i];
                if (hits == 2) second = sys.members[i];
            }
        }
        if (hits == 0 && rep.coverage) {
            rep.coverage = false;
            rep.uncovered = a;
        }
        if (hits > 1 && rep.unique) {
            rep.unique = false;
            rep.multi_covered = a;
            rep.first_support = first;
            rep.second_support = second;
        }
    });

    for (VertexSet member : sys.members) {
        if (popcount(member) > bound) {
            rep.bounded = false;
            rep.oversized = member;
            break;
        }
    }

    for (std::size_t i = 0; i < sys.members.size() && rep.free_closures; ++i) {
        for (std::size_t j = i + 1; j < sys.members.size() && rep.free_closures; ++j) {
            VertexSet st = sys.members[i] | sys.members[j];
            VertexSet ei = rep.ecls[i], ej = rep.ecls[j];
            bool ok = subset_of(ei & ej, st);
            VertexSet ext_i = ei & ~st, ext_j = ej & ~st;
            ok = ok && s.edges_between(ext_i & ~ext_j, ext_j & ~ext_i) == 0;
            if (ok && s.has_partition()) {
                for_each_vertex(ext_i & ~ext_j, [&](int u) {
                    for_each_vertex(ext_j & ~ext_i, [&](int v) {
                        if (s.same_class(u, v)) ok = false;
                    });
                });
            }
            if (!ok) {
                rep.free_closures = false;
                rep.free_witness_s = sys.members[i];
                rep.free_witness_t = sys.members[j];
            }
        }
    }

    if (!rep.unique) {
        rep.edge_closed = false;
    } else {
        for_each_vertex(external, [&](int a) {
            if (!rep.edge_closed) return;
            VertexSet supp = 0;
            for (std::size_t i = 0; i < sys.members.size(); ++i)
                if (contains(rep.ecls[i], a)) supp = sys.members[i];
            for_each_vertex(m_mask, [&](int mv) {
                if (!rep.edge_closed || contains(supp, mv)) return;
                bool related = s.has_edge(a, mv) || (s.has_partition() && s.same_class(a, mv));
                if (related) {
                    rep.edge_closed = false;
                    rep.edge_witness_a = a;
                    rep.edge_witness_m = mv;
                }
            });
        });
    }
    return rep;
}

/// The unique member whose external closure contains a.  Requires a covered
/// external vertex of a system with unique supports.
inline VertexSet supp_of(const Structure& s, const SupportSystem& sys, int a, const ClassSpec& spec,
                         int max_ext = 6) {
    s.check_vertex(a);
    if (contains(sys.m, a)) throw InputError("supp_of: vertex " + std::to_string(a) + " lies in M");
    VertexSet found = 0;
    int hits = 0;
    for (VertexSet member : sys.members) {
        if (contains(external_closure(s, sys.m, member, spec, max_ext), a)) {
            ++hits;
            found = member;
        }
    }
    if (hits == 0) throw InputError("supp_of: vertex " + std::to_string(a) + " is not covered");
    if (hits > 1) throw InputError("supp_of: vertex " + std::to_string(a) + " has multiple supports");
    return found;
}

} // namespace genera
