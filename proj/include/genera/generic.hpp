#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "genera/anticollapse.hpp"

namespace genera {

/// Verifies one full-amalgamation instance: given A strong in B (checked)
/// and A contained in C, the free amalgam D must lie in the class with C
/// strong in D.  The shared part is designated by ident pairs.
struct FullAmalgamOutcome {
    bool ok = false;
    bool d_in_class = false;
    StrongResult c_in_d;
    Amalgam amalgam;
};

inline FullAmalgamOutcome check_full_amalgamation_instance(const GluedTriple& t, const ClassSpec& spec,
                                                           int adm_ext_cap = 5) {
    VertexSet a_in_b = 0;
    for (auto [bv, cv] : t.ident) a_in_b |= bit(bv);
    if (auto pre = is_strong(t.b, a_in_b, t.b.universe(), spec); !pre.strong)
        throw InputError("full amalgamation: shared part is not strong in B, witness " +
                         set_str(pre.witness));

    FullAmalgamOutcome out;
    out.amalgam = free_amalgam(t);
    VertexSet c_image = 0;
    for (int v : out.amalgam.c_map) c_image |= bit(v);
    out.d_in_class = class_membership(out.amalgam.d, spec, adm_ext_cap);
    out.c_in_d = is_strong(out.amalgam.d, c_image, out.amalgam.d.universe(), spec);
    out.ok = out.d_in_class && out.c_in_d.strong;
    return out;
}

/// An abstract strong extension pattern over a base: vertices 0..base-1 are
/// the base copy, the rest is new.  canon pins the base pointwise.
struct AbstractExtension {
    Structure pattern;
    int base_size = 0;
    std::string canon;
};

namespace generic_detail {

/// Set partitions of k items as restricted growth strings.
inline std::vector<std::vector<int>> set_partitions(int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k, 0);
    auto rec = [&](auto&& self, int i, int max_used) -> void {
        if (i == k) {
            out.push_back(cur);
            return;
        }
        for (int b = 0; b <= max_used + 1; ++b) {
            cur[i] = b;
            self(self, i + 1, std::max(max_used, b));
        }
    };
    if (k == 0)
        out.push_back({});
    else
        rec(rec, 0, -1);
    return out;
}

} // namespace generic_detail

/// All class extensions of the base with 1..max_ext new vertices, strong
/// over the base, up to isomorphism over the base pointwise.  New vertices
/// never join base blocks (such extensions are never strong in the starred
/// class).  Sorted by canonical form, which orders by size first.
inline std::vector<AbstractExtension> enumerate_extensions(const Structure& base, const ClassSpec& spec,
                                                           int max_ext, int adm_ext_cap = 5) {
    std::vector<AbstractExtension> out;
    std::vector<std::string> seen;
    int nb = base.size();
    std::vector<int> base_order(nb);
    for (int i = 0; i < nb; ++i) base_order[i] = i;

    for (int k = 1; k <= max_ext; ++k) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < k; ++i)
            for (int b = 0; b < nb; ++b) pairs.emplace_back(nb + i, b);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) pairs.emplace_back(nb + i, nb + j);
        require_search_bits(static_cast<int>(pairs.size()), "extension enumeration");

        std::vector<std::vector<int>> partitions;
        if (spec.is_star())
            partitions = generic_detail::set_partitions(k);
        else
            partitions.push_back({}); // single pass, no partition handling

        for (std::uint64_t em = 0; em < (std::uint64_t{1} << pairs.size()); ++em) {
            for (const auto& newblocks : partitions) {
                Structure p(nb + k);
                for (int u = 0; u < nb; ++u)
                    for (int v = u + 1; v < nb; ++v)
                        if (base.has_edge(u, v)) p.add_edge(u, v);
                for (std::size_t e = 0; e < pairs.size(); ++e)
                    if ((em >> e) & 1) p.add_edge(pairs[e].first, pairs[e].second);
                if (spec.is_star()) {
                    std::vector<int> blocks(nb + k);
                    int fresh = 0;
                    for (int v = 0; v < nb; ++v) {
                        blocks[v] = base.block_of(v);
                        fresh = std::max(fresh, blocks[v] + 1);
                    }
                    for (int i = 0; i < k; ++i) blocks[nb + i] = fresh + newblocks[i];
                    p.set_partition(blocks);
                }
                if (!class_membership(p, spec, adm_ext_cap)) continue;
                if (!is_strong(p, full_set(nb), p.universe(), spec).strong) continue;
                std::string canon = canonical_form_pinned(p, base_order);
                if (std::find(seen.begin(), seen.end(), canon) != seen.end()) continue;
                seen.push_back(canon);
                out.push_back(AbstractExtension{std::move(p), nb, std::move(canon)});
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const AbstractExtension& a, const AbstractExtension& b) { return a.canon < b.canon; });
    return out;
}

/// Looks for an embedding of the pattern over the concrete base whose image
/// is strong in the ambient.
inline bool has_strong_copy(const Structure& ambient, VertexSet base_mask,
                            const AbstractExtension& ext, const ClassSpec& spec) {
    std::vector<int> base_list = to_vertices(base_mask);
    std::vector<int> base_in_pattern(ext.base_size);
    for (int i = 0; i < ext.base_size; ++i) base_in_pattern[i] = i;
    for (const Embedding& e : copies_over_base(ambient, base_list, ext.pattern, base_in_pattern)) {
        if (is_strong(ambient, e.image(), ambient.universe(), spec).strong) return true;
    }
    return false;
}

struct AttachRecord {
    int stage = 0;
    VertexSet base = 0;
    std::string ext_canon;
    std::vector<int> attached; // image of the new vertices
};

struct GenericStage {
    Structure structure;
    int stage_index = 0;
    std::vector<AttachRecord> provenance; // attachments that produced this stage
};

struct GenericBuildResult {
    std::vector<GenericStage> stages;
    bool complete = true;
    std::string note;
};

/// Finite stages of the generic: starting from the empty structure, each
/// stage satisfies every demand (closed base up to max_base, strong class
/// extension up to max_ext) of the previous stage that has no strong copy
/// yet.  Demands run in deterministic (base, extension-canon) order; a seed
/// shuffles them for fuzzing.
inline GenericBuildResult build_generic_stages(const ClassSpec& spec, int stages, int max_base,
                                               int max_ext, std::optional<std::uint64_t> seed = {},
                                               int max_vertices = 48, int adm_ext_cap = 5) {
    GenericBuildResult result;
    // strength checks inside a stage search over its complement, so the
    // stage size is bounded by the subset-search cap as well
    max_vertices = std::min(max_vertices, max_subset_bits());
    Structure m(0);
    if (spec.is_star()) m.set_partition({});
    result.stages.push_back(GenericStage{m, 0, {}});

    for (int stage = 1; stage <= stages; ++stage) {
        const Structure prev = m;
        struct Demand {
            VertexSet base;
            AbstractExtension ext;
        };
        std::vector<Demand> demands;
        for_each_subset(prev.universe(), [&](VertexSet a_mask) {
            if (popcount(a_mask) > max_base) return;
            if (!is_closed(prev, a_mask, spec)) return;
            Induced ind = induced_substructure(prev, a_mask);
            for (AbstractExtension& ext : enumerate_extensions(ind.structure, spec, max_ext, adm_ext_cap))
                demands.push_back(Demand{a_mask, std::move(ext)});
        });
        if (seed) {
            std::mt19937_64 rng(*seed + stage);
            std::shuffle(demands.begin(), demands.end(), rng);
        }

        std::vector<AttachRecord> records;
        for (const Demand& d : demands) {
            if (has_strong_copy(m, d.base, d.ext, spec)) continue;
            int added = d.ext.pattern.size() - d.ext.base_size;
            if (m.size() + added > max_vertices) {
                result.complete = false;
                result.note = "vertex cap " + std::to_string(max_vertices) + " reached at stage " +
                              std::to_string(stage);
                result.stages.push_back(GenericStage{m, stage, std::move(records)});
                return result;
            }
            std::vector<std::pair<int, int>> ident;
            std::vector<int> base_list = to_vertices(d.base);
            for (int i = 0; i < d.ext.base_size; ++i) ident.emplace_back(base_list[i], i);
            Amalgam am = free_amalgam(GluedTriple{m, d.ext.pattern, std::move(ident)});
            AttachRecord rec;
            rec.stage = stage;
            rec.base = d.base;
            rec.ext_canon = d.ext.canon;
            for (int v = d.ext.base_size; v < d.ext.pattern.size(); ++v)
                rec.attached.push_back(am.c_map[v]);
            records.push_back(std::move(rec));
            m = std::move(am.d);
        }
        result.stages.push_back(GenericStage{m, stage, std::move(records)});
    }
    return result;
}

struct RichnessAudit {
    bool ok = true;
    VertexSet missing_base = 0;
    std::string missing_ext;
    long long demands_checked = 0;
};

/// Independently re-checks the builder's promise: every demand over the
/// previous stage has a strong copy in the final stage.
inline RichnessAudit audit_richness(const Structure& prev, const Structure& final_stage,
                                    const ClassSpec& spec, int max_base, int max_ext,
                                    int adm_ext_cap = 5) {
    RichnessAudit audit;
    for_each_subset(prev.universe(), [&](VertexSet a_mask) {
        if (!audit.ok || popcount(a_mask) > max_base) return;
        if (!is_closed(prev, a_mask, spec)) return;
        Induced ind = induced_substructure(prev, a_mask);
        for (const AbstractExtension& ext : enumerate_extensions(ind.structure, spec, max_ext, adm_ext_cap)) {
            ++audit.demands_checked;
            if (!has_strong_copy(final_stage, a_mask, ext, spec)) {
                audit.ok = false;
                audit.missing_base = a_mask;
                audit.missing_ext = ext.canon;
                return;
            }
        }
    });
    return audit;
}

/// Inputs of the arithmetic-witness hypothesis check.  The designated
/// double copy sits inside x: u_image and uprime_image list, per vertex of
/// U in ascending order, its two images; they agree exactly on V.
struct ArithWitnessConfig {
    ClassSpec spec;
    Structure b;
    VertexSet a_in_b = 0;
    VertexSet u_in_b = 0;
    VertexSet v_in_u = 0;
    Structure x;
    std::vector<int> u_image;
    std::vector<int> uprime_image;
    int n_max = 0;
};

struct ArithWitnessOutcome {
    bool ok = true;
    int failed_clause = 0; // 1, 2, 3
    std::string detail;
};

/// Checks the three finite-scale hypotheses:
///   (1) the designated double copy of U over V sits inside X as a free
///       amalgam (both images induce copies of U, no cross edges off V);
///   (2) (U (+)_V U', X) is a biminimal pair and the n-fold amalgam of X
///       over it stays in the class for every n <= n_max;
///   (3) the n-fold family of double copies embeds without predimension
///       loss in the n-fold amalgam of X over V, for every n <= n_max.
/// Clause (3) uses the non-strict predimension condition: the strict one is
/// unsatisfiable alongside (2), whose minimal pair pins the relative
/// predimension of X over the double copy at zero.
inline ArithWitnessOutcome check_arithmetic_witness(const ArithWitnessConfig& cfg) {
    const Structure& b = cfg.b;
    const Structure& x = cfg.x;
    b.check_subset(cfg.a_in_b);
    b.check_subset(cfg.u_in_b);
    if (cfg.u_in_b & cfg.a_in_b) throw InputError("arith witness: U must avoid A");
    if (!subset_of(cfg.v_in_u, cfg.u_in_b)) throw InputError("arith witness: V must be a subset of U");
    if (cfg.n_max < 0) throw InputError("arith witness: n_max must be non-negative");
    std::vector<int> u_list = to_vertices(cfg.u_in_b);
    if (cfg.u_image.size() != u_list.size() || cfg.uprime_image.size() != u_list.size())
        throw InputError("arith witness: image lists must match |U|");
    for (int v : cfg.u_image) x.check_vertex(v);
    for (int v : cfg.uprime_image) x.check_vertex(v);
    if (!class_membership(x, cfg.spec)) throw InputError("arith witness: X is not in the class");
    if (!class_membership(induced_substructure(b, cfg.v_in_u).structure, cfg.spec))
        throw InputError("arith witness: V is not in the class");

    ArithWitnessOutcome out;
    auto fail = [&](int clause, const std::string& why) {
        out.ok = false;
        out.failed_clause = clause;
        out.detail = why;
        return out;
    };

    // clause 1: the two images agree exactly on V, are disjoint elsewhere,
    // both induce copies of U, and have no cross edges outside V.
    VertexSet v_positions = 0; // indices into u_list that lie in V
    for (std::size_t i = 0; i < u_list.size(); ++i)
        if (contains(cfg.v_in_u, u_list[i])) v_positions |= bit(static_cast<int>(i));
    VertexSet w_mask = 0;
    for (std::size_t i = 0; i < u_list.size(); ++i) {
        bool in_v = contains(v_positions, static_cast<int>(i));
        if (in_v != (cfg.u_image[i] == cfg.uprime_image[i]))
            return fail(1, "images must coincide exactly on V");
        w_mask |= bit(cfg.u_image[i]);
        w_mask |= bit(cfg.uprime_image[i]);
    }
    int expected = static_cast<int>(2 * u_list.size()) - popcount(cfg.v_in_u);
    if (popcount(w_mask) != expected) return fail(1, "images overlap outside V");
    auto image_is_copy = [&](const std::vector<int>& img) {
        for (std::size_t i = 0; i < u_list.size(); ++i)
            for (std::size_t j = i + 1; j < u_list.size(); ++j)
                if (b.has_edge(u_list[i], u_list[j]) != x.has_edge(img[i], img[j])) return false;
        return true;
    };
    if (!image_is_copy(cfg.u_image) || !image_is_copy(cfg.uprime_image))
        return fail(1, "an image does not induce a copy of U");
    for (std::size_t i = 0; i < u_list.size(); ++i) {
        for (std::size_t j = 0; j < u_list.size(); ++j) {
            if (contains(v_positions, static_cast<int>(i)) || contains(v_positions, static_cast<int>(j)))
                continue;
            if (x.has_edge(cfg.u_image[i], cfg.uprime_image[j]))
                return fail(1, "cross edge between the two copies outside V");
        }
    }

    // clause 2: biminimal pair plus class membership of the n-fold amalgam
    // of X over the double copy.
    if (!is_biminimal_pair(x, w_mask, x.universe(), cfg.spec))
        return fail(2, "double copy is not the base of a biminimal pair in X");
    std::vector<int> w_list = to_vertices(w_mask);
    for (int n = 1; n <= cfg.n_max; ++n) {
        OplusResult power = oplus_power(x, w_list, n);
        if (!class_membership(power.d, cfg.spec))
            return fail(2, "n-fold amalgam over the double copy leaves the class at n=" + std::to_string(n));
    }

    // clause 3: the family of double copies embeds without predimension loss.
    VertexSet v_in_x = 0;
    for (std::size_t i = 0; i < u_list.size(); ++i)
        if (contains(v_positions, static_cast<int>(i))) v_in_x |= bit(cfg.u_image[i]);
    std::vector<int> v_list = to_vertices(v_in_x);
    for (int n = 1; n <= cfg.n_max; ++n) {
        OplusResult power = oplus_power(x, v_list, n);
        VertexSet lhs = 0;
        for (int i = 0; i < static_cast<int>(v_list.size()); ++i) lhs |= bit(power.base_map[i]);
        for (int c = 0; c < n; ++c) {
            for_each_vertex(w_mask, [&](int xv) { lhs |= bit(power.member_maps[c][xv]); });
        }
        if (!is_strong_alpha(power.d, lhs, power.d.universe(), cfg.spec.alpha, /*strict=*/false).strong)
            return fail(3, "double-copy family drops predimension at n=" + std::to_string(n));
    }
    return out;
}

} // namespace genera
