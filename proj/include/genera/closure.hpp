#pragma once

#include <map>
#include <optional>
#include <vector>

#include "genera/predim.hpp"

namespace genera {

/// A non-strong extension all of whose proper sub-extensions are strong.
struct MinimalPair {
    VertexSet base;
    VertexSet ext; // strictly contains base
};

/// Nested vertex sets, each step a minimal pair under the active class.
using MinimalChain = std::vector<VertexSet>;

namespace closure_detail {

/// Enumerates subsets of `mask` with exactly k elements, ascending numeric
/// order, via Gosper's hack in compressed index space.
template <typename F>
inline bool for_each_k_subset(VertexSet mask, int k, F&& f) {
    std::vector<int> idx = to_vertices(mask);
    int m = static_cast<int>(idx.size());
    if (k > m) return false;
    if (k == 0) return f(VertexSet{0});
    std::uint64_t comb = (std::uint64_t{1} << k) - 1;
    while (comb < (std::uint64_t{1} << m)) {
        VertexSet s = 0;
        std::uint64_t c = comb;
        while (c) {
            s |= bit(idx[std::countr_zero(c)]);
            c &= c - 1;
        }
        if (f(s)) return true;
        // Gosper: next combination with k bits
        std::uint64_t lo = comb & (~comb + 1);
        std::uint64_t up = comb + lo;
        comb = up | (((comb ^ up) >> 2) / lo);
    }
    return false;
}

} // namespace closure_detail

/// (A, B) is a minimal pair when A is not strong in B but is strong in every
/// proper intermediate.  By the restriction law it suffices to check the
/// one-vertex-deleted intermediates.
inline bool is_minimal_pair(const Structure& s, VertexSet a_mask, VertexSet b_mask, const ClassSpec& spec) {
    if (!subset_of(a_mask, b_mask)) throw InputError("is_minimal_pair: base must be a subset of the extension");
    if (a_mask == b_mask) return false;
    if (is_strong(s, a_mask, b_mask, spec).strong) return false;
    bool minimal = true;
    for_each_vertex(b_mask & ~a_mask, [&](int v) {
        if (minimal && !is_strong(s, a_mask, b_mask & ~bit(v), spec).strong) minimal = false;
    });
    return minimal;
}

/// A minimal pair whose base cannot be shrunk: no proper subset of the base
/// carries the same extension as a minimal pair.
inline bool is_biminimal_pair(const Structure& s, VertexSet a_mask, VertexSet b_mask, const ClassSpec& spec) {
    if (!is_minimal_pair(s, a_mask, b_mask, spec)) return false;
    VertexSet ext = b_mask & ~a_mask;
    bool bi = true;
    for_each_subset(a_mask, [&](VertexSet a0) {
        if (!bi || a0 == a_mask) return;
        if (is_minimal_pair(s, a0, a0 | ext, spec)) bi = false;
    });
    return bi;
}

/// All minimal pairs (A0, B) with A0 a subset of a_mask, B within the
/// ambient reaching outside a_mask, and |B \ A0| <= max_ext.  Pairs wholly
/// inside a_mask are null moves and are not reported.  Order: bases
/// ascending, extensions ascending within each base.
inline std::vector<MinimalPair> enumerate_minimal_pairs(const Structure& s, VertexSet a_mask,
                                                        const ClassSpec& spec, int max_ext) {
    s.check_subset(a_mask);
    std::vector<MinimalPair> out;
    for_each_subset(a_mask, [&](VertexSet a0) {
        if (a0 == 0) return; // the empty set is strong in everything
        VertexSet room = s.universe() & ~a0;
        for (int k = 1; k <= std::min(max_ext, popcount(room)); ++k) {
            closure_detail::for_each_k_subset(room, k, [&](VertexSet ext) {
                if (!subset_of(ext, a_mask) && is_minimal_pair(s, a0, a0 | ext, spec))
                    out.push_back({a0, a0 | ext});
                return false;
            });
        }
    });
    return out;
}

/// Least nonempty S (by size, then numerically) with X not strong in X u S.
/// Size-minimality makes (X, X u S) a minimal pair based at exactly X.
inline std::optional<VertexSet> minimal_escape(const Structure& s, VertexSet x_mask, const ClassSpec& spec) {
    VertexSet room = s.universe() & ~x_mask;
    require_search_bits(popcount(room), "closure escape search");
    for (int k = 1; k <= popcount(room); ++k) {
        VertexSet found = 0;
        bool hit = closure_detail::for_each_k_subset(room, k, [&](VertexSet ext) {
            if (!is_strong(s, x_mask, x_mask | ext, spec).strong) {
                found = ext;
                return true;
            }
            return false;
        });
        if (hit) return found;
    }
    return std::nullopt;
}

/// Least closed superset of A in the ambient: grows by minimal escapes until
/// strong in the ambient.  Every closed superset of A contains each escape,
/// so the fixed point is the intrinsic closure.
inline VertexSet closure_in(const Structure& s, VertexSet a_mask, const ClassSpec& spec) {
    s.check_subset(a_mask);
    VertexSet x = a_mask;
    while (auto esc = minimal_escape(s, x, spec)) x |= *esc;
    return x;
}

/// M is closed in the ambient exactly when no minimal pair based inside M
/// reaches outside it; equivalently (by the closure axioms) when M is strong
/// in the full ambient.
inline bool is_closed(const Structure& s, VertexSet m_mask, const ClassSpec& spec) {
    s.check_subset(m_mask);
    return is_strong(s, m_mask, s.universe(), spec).strong;
}

/// External closure of X relative to M: grown from minimal pairs whose
/// extensions meet M only inside X.  Round 0 draws bases from X; each later
/// round draws bases from the previous union, following the definition
/// literally.  The rounds are monotone, so the loop runs to a fixed point.
inline VertexSet external_closure(const Structure& s, VertexSet m_mask, VertexSet x_mask,
                                  const ClassSpec& spec, int max_ext = 6) {
    s.check_subset(m_mask);
    if (!subset_of(x_mask, m_mask))
        throw InputError("external_closure: X must be a subset of M");

    auto collect = [&](VertexSet bases_from) {
        VertexSet total = 0;
        for (const MinimalPair& mp : enumerate_minimal_pairs(s, bases_from, spec, max_ext)) {
            if (subset_of(mp.ext & m_mask, x_mask)) total |= mp.ext;
        }
        return total;
    };

    VertexSet j = collect(x_mask);
    while (true) {
        VertexSet next = j | collect(j);
        if (next == j) break;
        j = next;
    }
    return x_mask | j;
}

/// Searches for a minimal chain X = X_0 c X_1 c ... with every level meeting
/// M exactly in X and the target vertex in the last level.  Witnesses the
/// decomposition of the external closure.
inline std::optional<MinimalChain> extract_external_chain(const Structure& s, VertexSet m_mask,
                                                          VertexSet x_mask, int target,
                                                          const ClassSpec& spec, int max_ext = 6) {
    s.check_vertex(target);
    VertexSet region = external_closure(s, m_mask, x_mask, spec, max_ext);
    if (!contains(region, target)) return std::nullopt;

    std::map<VertexSet, bool> failed;
    MinimalChain chain;
    chain.push_back(x_mask);

    auto rec = [&](auto&& self, VertexSet cur) -> bool {
        if (contains(cur, target)) return true;
        if (auto it = failed.find(cur); it != failed.end()) return false;
        VertexSet room = region & ~cur & ~m_mask; // stay external, inside the computed region
        for (int k = 1; k <= std::min(max_ext, popcount(room)); ++k) {
            bool ok = closure_detail::for_each_k_subset(room, k, [&](VertexSet ext) {
                VertexSet next = cur | ext;
                if (!is_minimal_pair(s, cur, next, spec)) return false;
                chain.push_back(next);
                if (self(self, next)) return true;
                chain.pop_back();
                return false;
            });
            if (ok) return true;
        }
        failed[cur] = true;
        return false;
    };
    if (rec(rec, x_mask)) return chain;
    return std::nullopt;
}

/// (X, Z) is a 0-extension at weight r when some minimal chain from X to Z
/// has every step of relative predimension exactly zero.  Chains are taken
/// in the strict graph class at weight r.  Returns a witness chain.
inline std::optional<MinimalChain> zero_extension_chain(const Structure& s, VertexSet x_mask,
                                                        VertexSet z_mask, const Rational& r) {
    if (!subset_of(x_mask, z_mask)) throw InputError("zero extension: X must be a subset of Z");
    ClassSpec spec = ClassSpec::k_alpha_plus(r);
    if (delta_rel(s, z_mask, x_mask, r) != Rational(0)) return std::nullopt;

    std::map<VertexSet, bool> failed;
    MinimalChain chain;
    chain.push_back(x_mask);

    auto rec = [&](auto&& self, VertexSet cur) -> bool {
        if (cur == z_mask) return true;
        if (failed.count(cur)) return false;
        VertexSet room = z_mask & ~cur;
        for (int k = 1; k <= popcount(room); ++k) {
            bool ok = closure_detail::for_each_k_subset(room, k, [&](VertexSet ext) {
                VertexSet next = cur | ext;
                if (delta_rel(s, next, cur, r) != Rational(0)) return false;
                if (!is_minimal_pair(s, cur, next, spec)) return false;
                chain.push_back(next);
                if (self(self, next)) return true;
                chain.pop_back();
                return false;
            });
            if (ok) return true;
        }
        failed[cur] = true;
        return false;
    };
    if (rec(rec, x_mask)) return chain;
    return std::nullopt;
}

inline bool is_zero_extension(const Structure& s, VertexSet x_mask, VertexSet z_mask, const Rational& r) {
    return zero_extension_chain(s, x_mask, z_mask, r).has_value();
}

/// Proper 0-extension: a 0-extension that is base-minimal (no proper subset
/// of X carries Z \ X as a 0-extension) and does not decompose as a free
/// join over X (the added part is connected).
inline bool is_proper_zero_extension(const Structure& s, VertexSet x_mask, VertexSet z_mask, const Rational& r) {
    if (x_mask == z_mask) throw InputError("proper 0-extension requires Z to strictly contain X");
    if (!subset_of(x_mask, z_mask)) throw InputError("proper 0-extension: X must be a subset of Z");
    VertexSet added = z_mask & ~x_mask;

    // decomposition test: the added part must be connected as an induced graph
    {
        VertexSet comp = bit(lowest_vertex(added));
        while (true) {
            VertexSet grown = comp;
            for_each_vertex(comp, [&](int v) { grown |= s.neighbors(v) & added; });
            if (grown == comp) break;
            comp = grown;
        }
        if (comp != added) return false;
    }

    if (!is_zero_extension(s, x_mask, z_mask, r)) return false;

    bool base_minimal = true;
    for_each_subset(x_mask, [&](VertexSet x0) {
        if (!base_minimal || x0 == x_mask) return;
        if (is_zero_extension(s, x0, x0 | added, r)) base_minimal = false;
    });
    return base_minimal;
}

} // namespace genera
