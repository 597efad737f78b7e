#pragma once

#include <cassert>
#include <vector>

#include "genera/class_spec.hpp"
#include "genera/rational.hpp"
#include "genera/structure.hpp"

namespace genera {

/// Predimension |A| - alpha * e(A) of the induced substructure on a_mask.
/// The partition never contributes: only graph edges are weighted.
inline Rational delta(const Structure& s, VertexSet a_mask, const Rational& alpha) {
    s.check_subset(a_mask);
    return Rational(popcount(a_mask)) - alpha * Rational(s.edges_within(a_mask));
}

inline Rational delta(const Structure& s, const Rational& alpha) {
    return delta(s, s.universe(), alpha);
}

/// Edges from b \ a into a.
inline int edge_boundary(const Structure& s, VertexSet b_mask, VertexSet a_mask) {
    return s.edges_between(b_mask & ~a_mask, a_mask);
}

/// Relative predimension delta(B/A) = delta(A u B) - delta(A).  A need not
/// contain or avoid B; the union convention applies.
inline Rational delta_rel(const Structure& s, VertexSet b_mask, VertexSet a_mask, const Rational& alpha) {
    s.check_subset(b_mask);
    s.check_subset(a_mask);
    Rational rel = delta(s, a_mask | b_mask, alpha) - delta(s, a_mask, alpha);
#ifndef NDEBUG
    {
        VertexSet ext = b_mask & ~a_mask;
        Rational direct = Rational(popcount(ext)) - alpha * Rational(s.edges_within(ext)) -
                          alpha * Rational(s.edges_between(ext, a_mask));
        assert(rel == direct);
    }
#endif
    return rel;
}

struct StrongResult {
    bool strong = true;
    VertexSet witness = 0; // a violating intermediate set when !strong
    explicit operator bool() const { return strong; }
};

namespace predim_detail {

/// Searches for an intermediate A <= B0 <= B violating the predimension
/// condition, by branch and bound over the vertices of B \ A in ascending
/// order (exclude branch first).  Violation means scaled relative
/// predimension < 0 (non-strict class) or <= 0 with B0 != A (strict class).
/// The optimistic bound charges every undecided vertex its best possible
/// contribution q - p * deg_B(v).
class ViolationSearch {
public:
    ViolationSearch(const Structure& s, VertexSet a, VertexSet b, const Rational& alpha, bool strict)
        : s_(s), a_(a), strict_(strict), p_(alpha.num()), q_(alpha.den()) {
        ext_ = to_vertices(b & ~a);
        best_case_.resize(ext_.size());
        for (std::size_t i = 0; i < ext_.size(); ++i) {
            long long contrib = q_ - p_ * popcount(s.neighbors(ext_[i]) & b);
            best_case_[i] = contrib < 0 ? contrib : 0;
        }
        // suffix sums of the optimistic contributions
        suffix_.assign(ext_.size() + 1, 0);
        for (int i = static_cast<int>(ext_.size()) - 1; i >= 0; --i)
            suffix_[i] = suffix_[i + 1] + best_case_[i];
    }

    // Returns true and sets witness when a violator exists.
    bool run(VertexSet& witness) {
        witness_ = 0;
        bool found = dfs(0, a_, 0);
        witness = witness_;
        return found;
    }

private:
    bool violating(long long scaled_rel, VertexSet cur) const {
        if (strict_) return cur != a_ && scaled_rel <= 0;
        return scaled_rel < 0;
    }

    bool prunable(long long scaled_rel, std::size_t i) const {
        long long optimistic = scaled_rel + suffix_[i];
        return strict_ ? optimistic > 0 : optimistic >= 0;
    }

    bool dfs(std::size_t i, VertexSet cur, long long scaled_rel) {
        if (violating(scaled_rel, cur)) {
            witness_ = cur;
            return true;
        }
        if (i == ext_.size() || prunable(scaled_rel, i)) return false;
        if (dfs(i + 1, cur, scaled_rel)) return true; // exclude ext_[i]
        int v = ext_[i];
        long long gain = q_ - p_ * popcount(s_.neighbors(v) & cur);
        return dfs(i + 1, cur | bit(v), scaled_rel + gain);
    }

    const Structure& s_;
    VertexSet a_;
    bool strict_;
    long long p_, q_;
    std::vector<int> ext_;
    std::vector<long long> best_case_;
    std::vector<long long> suffix_;
    VertexSet witness_ = 0;
};

} // namespace predim_detail

/// The graph-language strong-extension predicate: A is strong in B when no
/// intermediate A <= B0 <= B drops predimension (non-strict class), or every
/// proper intermediate strictly raises it (strict class).
inline StrongResult is_strong_alpha(const Structure& s, VertexSet a_mask, VertexSet b_mask,
                                    const Rational& alpha, bool strict) {
    s.check_subset(b_mask);
    if (!subset_of(a_mask, b_mask))
        throw InputError("is_strong: base " + set_str(a_mask) + " is not a subset of " + set_str(b_mask));
    require_search_bits(popcount(b_mask & ~a_mask), "is_strong");
    predim_detail::ViolationSearch search(s, a_mask, b_mask, alpha, strict);
    VertexSet witness = 0;
    if (search.run(witness)) return {false, witness};
    return {true, 0};
}

/// Strong extension under the active class.  For the two-sorted class this
/// is the starred relation: subset, no equivalence class of B straddles the
/// boundary of A, and the graph reduct is strong at weight r.
inline StrongResult is_strong(const Structure& s, VertexSet a_mask, VertexSet b_mask,
                              const ClassSpec& spec) {
    if (!subset_of(a_mask, b_mask))
        throw InputError("is_strong: base " + set_str(a_mask) + " is not a subset of " + set_str(b_mask));
    if (spec.is_star()) {
        for (VertexSet cls : s.classes_within(b_mask)) {
            if ((cls & a_mask) && (cls & ~a_mask)) return {false, cls};
        }
    }
    return is_strong_alpha(s, a_mask, b_mask, spec.alpha, spec.strict());
}

/// Hereditary predimension membership of the graph reduct: every subset
/// non-negative (non-strict) or every nonempty subset positive (strict).
inline bool in_class_alpha(const Structure& s, const Rational& alpha, bool strict) {
    return is_strong_alpha(s, 0, s.universe(), alpha, strict).strong;
}

/// Granularity of a rational weight r = p/q in lowest terms: the least
/// positive magnitude a negative relative predimension can take, namely 1/q.
inline Rational granularity(const Rational& r) {
    if (!(Rational(0) < r && r < Rational(1)))
        throw InputError("granularity requires 0 < r < 1, got " + r.str());
    return Rational(1, r.den());
}

struct GranularityReport {
    Rational gamma;
    bool all_bounded = true;  // every negative delta(B/A) <= -gamma
    bool attained = false;    // -gamma is achieved by some pair
    long long pairs_checked = 0;
};

/// Exhaustively checks the granularity bound over all graphs B on at most
/// max_vertices labeled vertices and all subsets A of B.
inline GranularityReport granularity_verify(const Rational& r, int max_vertices) {
    GranularityReport rep;
    rep.gamma = granularity(r);
    require_search_bits(max_vertices * (max_vertices - 1) / 2, "granularity_verify");
    long long p = r.num(), q = r.den();
    for (int m = 1; m <= max_vertices; ++m) {
        int pairs = m * (m - 1) / 2;
        std::vector<std::pair<int, int>> edge_list;
        for (int u = 0; u < m; ++u)
            for (int v = u + 1; v < m; ++v) edge_list.emplace_back(u, v);
        for (std::uint64_t em = 0; em < (std::uint64_t{1} << pairs); ++em) {
            std::vector<VertexSet> adj(m, 0);
            for (int e = 0; e < pairs; ++e) {
                if ((em >> e) & 1) {
                    adj[edge_list[e].first] |= bit(edge_list[e].second);
                    adj[edge_list[e].second] |= bit(edge_list[e].first);
                }
            }
            // scaled delta over all subsets, built incrementally
            std::vector<long long> scaled(std::size_t{1} << m);
            scaled[0] = 0;
            for (VertexSet mask = 1; mask < (VertexSet{1} << m); ++mask) {
                int lo = lowest_vertex(mask);
                VertexSet rest = mask & (mask - 1);
                scaled[mask] = scaled[rest] + q - p * popcount(adj[lo] & rest);
            }
            VertexSet b_mask = full_set(m);
            long long db = scaled[b_mask];
            // scaled values are q * delta, so delta <= -gamma = -1/q
            // becomes scaled <= -1 and attainment becomes scaled == -1
            for_each_subset(b_mask, [&](VertexSet a_mask) {
                long long rel = db - scaled[a_mask];
                ++rep.pairs_checked;
                if (rel < 0) {
                    if (rel > -1) rep.all_bounded = false;
                    if (rel == -1) rep.attained = true;
                }
            });
        }
    }
    return rep;
}

} // namespace genera
