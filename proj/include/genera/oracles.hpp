#pragma once

// Brute-force reference implementations, used only by the property harness
// and the test suites.  Everything here follows the definitions literally
// with no pruning, as an independent route to the answers the optimized
// code computes.  No other library header includes this one.

#include <vector>

#include "genera/closure.hpp"

namespace genera::oracles {

/// Strong extension by full enumeration of all intermediates.
inline bool naive_is_strong(const Structure& s, VertexSet a_mask, VertexSet b_mask, const ClassSpec& spec) {
    if (!subset_of(a_mask, b_mask)) throw InputError("naive_is_strong: base not within extension");
    if (spec.is_star()) {
        for (VertexSet cls : s.classes_within(b_mask))
            if ((cls & a_mask) && (cls & ~a_mask)) return false;
    }
    bool ok = true;
    VertexSet room = b_mask & ~a_mask;
    for_each_subset(room, [&](VertexSet mid) {
        VertexSet b0 = a_mask | mid;
        Rational rel = delta(s, b0, spec.alpha) - delta(s, a_mask, spec.alpha);
        if (spec.strict()) {
            if (b0 != a_mask && !(rel > Rational(0))) ok = false;
        } else {
            if (rel < Rational(0)) ok = false;
        }
    });
    return ok;
}

inline bool naive_in_class(const Structure& s, const ClassSpec& spec) {
    ClassSpec reduct = spec.reduct();
    bool ok = true;
    for_each_subset(s.universe(), [&](VertexSet sub) {
        Rational d = delta(s, sub, reduct.alpha);
        if (reduct.strict()) {
            if (sub != 0 && !(d > Rational(0))) ok = false;
        } else {
            if (d < Rational(0)) ok = false;
        }
    });
    return ok;
}

/// Minimal pair by the definition: not strong, every proper intermediate
/// strong.
inline bool naive_is_minimal_pair(const Structure& s, VertexSet a_mask, VertexSet b_mask,
                                  const ClassSpec& spec) {
    if (a_mask == b_mask || !subset_of(a_mask, b_mask)) return false;
    if (naive_is_strong(s, a_mask, b_mask, spec)) return false;
    bool ok = true;
    for_each_subset(b_mask & ~a_mask, [&](VertexSet mid) {
        VertexSet b0 = a_mask | mid;
        if (b0 == b_mask) return;
        if (!naive_is_strong(s, a_mask, b0, spec)) ok = false;
    });
    return ok;
}

/// Scaled predimensions q*delta of every subset, filled incrementally.
inline std::vector<long long> scaled_delta_table(const Structure& s, const Rational& alpha) {
    int n = s.size();
    long long p = alpha.num(), q = alpha.den();
    std::vector<long long> t(std::size_t{1} << n);
    t[0] = 0;
    for (VertexSet m = 1; m < (VertexSet{1} << n); ++m) {
        int lo = lowest_vertex(m);
        VertexSet rest = m & (m - 1);
        t[m] = t[rest] + q - p * popcount(s.neighbors(lo) & rest);
    }
    return t;
}

namespace table_detail {

inline bool table_strong(const Structure& s, const std::vector<long long>& t, VertexSet a_mask,
                         VertexSet b_mask, const ClassSpec& spec) {
    if (spec.is_star()) {
        for (VertexSet cls : s.classes_within(b_mask))
            if ((cls & a_mask) && (cls & ~a_mask)) return false;
    }
    long long da = t[a_mask];
    bool ok = true;
    for_each_subset(b_mask & ~a_mask, [&](VertexSet mid) {
        if (!ok) return;
        long long rel = t[a_mask | mid] - da;
        if (spec.strict() ? (mid != 0 && rel <= 0) : (rel < 0)) ok = false;
    });
    return ok;
}

} // namespace table_detail

/// Closedness by the definition: no minimal pair based inside M reaches
/// outside M.  Scans every base and every escaping extension; any escaping
/// non-strong superset shrinks (greedily, justified by the restriction law)
/// to a minimal pair, which is then required to stay inside M.
inline bool naive_is_closed(const Structure& s, VertexSet m_mask, const ClassSpec& spec,
                            const std::vector<long long>& table) {
    bool closed = true;
    for_each_subset(m_mask, [&](VertexSet base) {
        if (!closed || base == 0) return;
        for_each_subset(s.universe() & ~base, [&](VertexSet mid) {
            if (!closed) return;
            VertexSet b0 = base | mid;
            if (subset_of(b0, m_mask)) return;
            if (!table_detail::table_strong(s, table, base, b0, spec)) {
                VertexSet cur = b0;
                bool shrunk = true;
                while (shrunk) {
                    shrunk = false;
                    for_each_vertex(cur & ~base, [&](int v) {
                        if (shrunk) return;
                        if (!table_detail::table_strong(s, table, base, cur & ~bit(v), spec)) {
                            cur &= ~bit(v);
                            shrunk = true;
                        }
                    });
                }
                if (!subset_of(cur, m_mask)) closed = false;
            }
        });
    });
    return closed;
}

inline bool naive_is_closed(const Structure& s, VertexSet m_mask, const ClassSpec& spec) {
    return naive_is_closed(s, m_mask, spec, scaled_delta_table(s, spec.alpha));
}

/// Least closed superset by scanning supersets in size order.  The closure
/// axioms make closed sets intersection-closed, so the size-least closed
/// superset is the closure.
inline VertexSet brute_force_closure(const Structure& s, VertexSet a_mask, const ClassSpec& spec) {
    int n = s.size();
    auto table = scaled_delta_table(s, spec.alpha);
    for (int k = popcount(a_mask); k <= n; ++k) {
        VertexSet found = ~VertexSet{0};
        bool hit = closure_detail::for_each_k_subset(s.universe() & ~a_mask, k - popcount(a_mask),
                                                     [&](VertexSet extra) {
                                                         VertexSet m = a_mask | extra;
                                                         if (naive_is_closed(s, m, spec, table)) {
                                                             found = m;
                                                             return true;
                                                         }
                                                         return false;
                                                     });
        if (hit) return found;
    }
    return s.universe();
}

/// All permutations fixing nothing in particular; callback gets each
/// automorphism of s.  Exponential, for small test ambients only.
template <typename F>
inline void for_each_automorphism(const Structure& s, F&& f) {
    int n = s.size();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            for (int v = u + 1; v < n && ok; ++v) {
                if (s.has_edge(u, v) != s.has_edge(perm[u], perm[v])) ok = false;
                if (ok && s.has_partition() && s.same_class(u, v) != s.same_class(perm[u], perm[v]))
                    ok = false;
            }
        }
        if (ok) f(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

/// Isomorphism by permutation search.
inline bool naive_isomorphic(const Structure& a, const Structure& b) {
    if (a.size() != b.size() || a.has_partition() != b.has_partition()) return false;
    int n = a.size();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            for (int v = u + 1; v < n && ok; ++v) {
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
                if (ok && a.has_partition() && a.same_class(u, v) != b.same_class(perm[u], perm[v]))
                    ok = false;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace genera::oracles
