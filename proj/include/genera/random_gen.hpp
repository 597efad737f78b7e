#pragma once

#include <random>

#include "genera/anticollapse.hpp"

namespace genera {

/// Splitmix-style mix of a base seed and a trial index; every randomized
/// routine takes an explicit engine, there is no global generator.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) { // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool rand_chance(Rng& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

inline VertexSet random_subset(Rng& rng, VertexSet universe, double p = 0.5) {
    VertexSet out = 0;
    for_each_vertex(universe, [&](int v) {
        if (rand_chance(rng, p)) out |= bit(v);
    });
    return out;
}

namespace gen_detail {

/// Reassembles s with one extra isolated vertex (fresh singleton block when
/// a partition is present).
inline Structure grow_by_vertex(const Structure& s, bool fresh_block) {
    Structure out(s.size() + 1);
    for (int u = 0; u < s.size(); ++u)
        for (int v = u + 1; v < s.size(); ++v)
            if (s.has_edge(u, v)) out.add_edge(u, v);
    if (s.has_partition() || fresh_block) {
        std::vector<int> blocks(out.size());
        int fresh = 0;
        for (int v = 0; v < s.size(); ++v) {
            blocks[v] = s.has_partition() ? s.block_of(v) : v;
            fresh = std::max(fresh, blocks[v] + 1);
        }
        blocks[s.size()] = fresh;
        out.set_partition(blocks);
    }
    return out;
}

} // namespace gen_detail

/// A random member of the class, grown vertex by vertex with class-violating
/// edges rejected.  For the starred class, new vertices join an existing
/// under-capacity block or a fresh one, and additions that break
/// admissibility at the cap are rolled back.  Deterministic per engine state.
inline Structure random_in_class(const ClassSpec& spec, int max_vertices, Rng& rng,
                                 int adm_ext_cap = 4) {
    int target = max_vertices <= 0 ? 0 : rand_int(rng, 0, max_vertices);
    Structure s(0);
    if (spec.is_star()) s.set_partition({});

    const int kRetries = 8;
    for (int step = 0; step < target; ++step) {
        bool placed = false;
        for (int attempt = 0; attempt < kRetries && !placed; ++attempt) {
            Structure cand = gen_detail::grow_by_vertex(s, spec.is_star());
            int v = cand.size() - 1;
            if (spec.is_star() && v > 0 && rand_chance(rng, 0.35)) {
                // try to join an existing block that stays under the bound
                int other = rand_int(rng, 0, v - 1);
                VertexSet cls = cand.sclass_of(other);
                if (popcount(cls) + 1 < spec.params.n_bound) {
                    auto blocks = cand.normalized_blocks();
                    blocks[v] = blocks[other];
                    cand.set_partition(blocks);
                }
            }
            double p = 1.6 / (v + 1);
            for (int u = 0; u < v; ++u) {
                if (!rand_chance(rng, p)) continue;
                cand.add_edge(u, v);
                bool keep = spec.is_star() ? in_class_alpha(cand, spec.alpha, true)
                                           : in_class_alpha(cand, spec.alpha, spec.strict());
                if (!keep) cand.remove_edge(u, v);
            }
            if (!spec.is_star() || is_admissible(cand, spec.params, adm_ext_cap).admissible) {
                s = std::move(cand);
                placed = true;
            }
        }
        if (!placed) {
            // isolated fresh vertex is always safe
            s = gen_detail::grow_by_vertex(s, spec.is_star());
        }
    }
    if (!class_membership(s, spec, adm_ext_cap))
        throw ResourceError("random_in_class: generation stalled outside the class");
    return s;
}

inline Structure random_in_class(const ClassSpec& spec, int max_vertices, std::uint64_t seed,
                                 int adm_ext_cap = 4) {
    Rng rng(seed);
    return random_in_class(spec, max_vertices, rng, adm_ext_cap);
}

/// Extends base (kept as a vertex-id prefix) by up to max_extra vertices,
/// staying in the class but with no strength requirement over the base.
inline Structure random_class_extension(const Structure& base, const ClassSpec& spec, int max_extra,
                                        Rng& rng, int adm_ext_cap = 4) {
    Structure s = base;
    int extra = rand_int(rng, 0, max_extra);
    for (int step = 0; step < extra; ++step) {
        Structure cand = gen_detail::grow_by_vertex(s, spec.is_star());
        int v = cand.size() - 1;
        double p = 1.6 / (v + 1);
        for (int u = 0; u < v; ++u) {
            if (!rand_chance(rng, p)) continue;
            cand.add_edge(u, v);
            if (!in_class_alpha(cand, spec.alpha, spec.kind != ClassSpec::Kind::KAlpha))
                cand.remove_edge(u, v);
        }
        if (class_membership(cand, spec, adm_ext_cap)) s = std::move(cand);
        else s = gen_detail::grow_by_vertex(s, spec.is_star());
    }
    return s;
}

/// Extends base (kept as a vertex-id prefix) by up to max_extra vertices so
/// that the base stays strong in the result and the result stays in the
/// class.  New vertices take fresh blocks under the starred class.  Falls
/// back to isolated vertices, which are always strong extensions.
inline Structure random_strong_extension(const Structure& base, const ClassSpec& spec, int max_extra,
                                         Rng& rng, int adm_ext_cap = 4) {
    Structure s = base;
    VertexSet base_mask = base.universe();
    int extra = rand_int(rng, 0, max_extra);
    for (int step = 0; step < extra; ++step) {
        Structure cand = gen_detail::grow_by_vertex(s, spec.is_star());
        int v = cand.size() - 1;
        double p = 1.2 / (v + 1);
        for (int u = 0; u < v; ++u) {
            if (!rand_chance(rng, p)) continue;
            cand.add_edge(u, v);
            bool keep = in_class_alpha(cand, spec.alpha, spec.kind != ClassSpec::Kind::KAlpha) &&
                        is_strong(cand, base_mask, cand.universe(), spec).strong;
            if (keep && spec.is_star()) keep = is_admissible(cand, spec.params, adm_ext_cap).admissible;
            if (!keep) cand.remove_edge(u, v);
        }
        bool ok = is_strong(cand, base_mask, cand.universe(), spec).strong &&
                  class_membership(cand, spec, adm_ext_cap);
        if (ok) s = std::move(cand);
        else s = gen_detail::grow_by_vertex(s, spec.is_star());
    }
    return s;
}

/// An acyclic fixture: a forest on a designated set M with pendant trees
/// hanging off single roots, every tree vertex external.  Such an M is
/// zero-closed by construction.
struct AcyclicFixture {
    Structure s;
    VertexSet m = 0;
};

inline AcyclicFixture random_acyclic_fixture(Rng& rng, int max_m, int max_external) {
    int m_count = rand_int(rng, 1, std::max(1, max_m));
    int ext_count = rand_int(rng, 0, std::max(0, max_external));
    Structure s(m_count + ext_count);
    // forest on the M-part: each vertex links to an earlier one with chance 1/2
    for (int v = 1; v < m_count; ++v)
        if (rand_chance(rng, 0.5)) s.add_edge(rand_int(rng, 0, v - 1), v);
    // pendant trees: each external vertex hangs off a root in M or an
    // earlier external vertex of the same root's tree
    std::vector<int> tree_root(ext_count, -1); // root in M of each external vertex
    for (int i = 0; i < ext_count; ++i) {
        int v = m_count + i;
        if (i == 0 || rand_chance(rng, 0.55)) {
            int root = rand_int(rng, 0, m_count - 1);
            s.add_edge(root, v);
            tree_root[i] = root;
        } else {
            int j = rand_int(rng, 0, i - 1);
            s.add_edge(m_count + j, v);
            tree_root[i] = tree_root[j];
        }
    }
    return AcyclicFixture{std::move(s), full_set(m_count)};
}

} // namespace genera
