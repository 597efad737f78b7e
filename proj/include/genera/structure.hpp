#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "genera/errors.hpp"

namespace genera {

/// Vertex sets are bitmasks over dense vertex indices 0..n-1.
/// Structures are capped at 64 vertices, far beyond desk scale.
using VertexSet = std::uint64_t;

inline int popcount(VertexSet s) { return std::popcount(s); }
inline VertexSet bit(int v) { return VertexSet{1} << v; }
inline bool contains(VertexSet s, int v) { return (s >> v) & 1; }
inline bool subset_of(VertexSet a, VertexSet b) { return (a & ~b) == 0; }
inline VertexSet full_set(int n) { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }
inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

/// Iterates set bits in ascending order.
template <typename F>
inline void for_each_vertex(VertexSet s, F&& f) {
    while (s) {
        int v = std::countr_zero(s);
        f(v);
        s &= s - 1;
    }
}

inline std::vector<int> to_vertices(VertexSet s) {
    std::vector<int> out;
    for_each_vertex(s, [&](int v) { out.push_back(v); });
    return out;
}

inline VertexSet from_vertices(const std::vector<int>& vs) {
    VertexSet s = 0;
    for (int v : vs) s |= bit(v);
    return s;
}

/// Enumerates all subsets of mask in ascending numeric order (the project's
/// deterministic subset order), including the empty set and mask itself.
template <typename F>
inline void for_each_subset(VertexSet mask, F&& f) {
    VertexSet sub = 0;
    while (true) {
        f(sub);
        if (sub == mask) break;
        sub = (sub - mask) & mask; // next subset
    }
}

inline std::string set_str(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for_each_vertex(s, [&](int v) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(v);
    });
    return out + "}";
}

/// A finite graph on vertices 0..n-1, optionally expanded by an equivalence
/// partition (the S-relation of the two-sorted language).  Edges are
/// irreflexive and symmetric; the partition, when present, assigns every
/// vertex a block id.
class Structure {
public:
    Structure() = default;
    explicit Structure(int n) : n_(n), adj_(n, 0) {
        if (n < 0 || n > 64) throw InputError("structure size out of range: " + std::to_string(n));
    }

    int size() const { return n_; }
    VertexSet universe() const { return full_set(n_); }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        adj_[u] |= bit(v);
        adj_[v] |= bit(u);
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[u] &= ~bit(v);
        adj_[v] &= ~bit(u);
    }

    bool has_edge(int u, int v) const { return contains(adj_[u], v); }
    VertexSet neighbors(int v) const { return adj_[v]; }

    int edge_count() const { return edges_within(universe()); }

    /// Edges with both endpoints in mask.
    int edges_within(VertexSet mask) const {
        int twice = 0;
        for_each_vertex(mask, [&](int v) { twice += popcount(adj_[v] & mask); });
        return twice / 2;
    }

    /// Edges with one endpoint in a and the other in b (a, b disjoint).
    int edges_between(VertexSet a, VertexSet b) const {
        int count = 0;
        for_each_vertex(a, [&](int v) { count += popcount(adj_[v] & b); });
        return count;
    }

    bool has_partition() const { return blocks_.has_value(); }

    /// Block id of a vertex; vertices are singletons when no partition is set.
    int block_of(int v) const { return blocks_ ? (*blocks_)[v] : v; }

    /// Assigns all listed vertices to one fresh block.  Vertices not covered
    /// by any call stay in singleton blocks.
    void add_sclass(const std::vector<int>& vs) {
        ensure_partition();
        int fresh = n_; // singleton ids are 0..n-1, class ids from n upward
        for (int b : *blocks_) fresh = std::max(fresh, b + 1);
        for (int v : vs) {
            check_vertex(v);
            (*blocks_)[v] = fresh;
        }
    }

    void set_partition(const std::vector<int>& block_ids) {
        if (static_cast<int>(block_ids.size()) != n_)
            throw InputError("partition must cover every vertex");
        blocks_ = block_ids;
    }

    void drop_partition() { blocks_.reset(); }

    /// All vertices S-equivalent to v (including v).
    VertexSet sclass_of(int v) const {
        if (!blocks_) return bit(v);
        VertexSet out = 0;
        int b = (*blocks_)[v];
        for (int u = 0; u < n_; ++u)
            if ((*blocks_)[u] == b) out |= bit(u);
        return out;
    }

    bool same_class(int u, int v) const { return block_of(u) == block_of(v); }

    /// A set is S-homogeneous when all its vertices share one block.
    /// The empty set and singletons are homogeneous.
    bool is_homogeneous(VertexSet s) const {
        if (popcount(s) <= 1) return true;
        if (!blocks_) return false;
        int first = block_of(lowest_vertex(s));
        bool ok = true;
        for_each_vertex(s, [&](int v) { ok = ok && block_of(v) == first; });
        return ok;
    }

    /// Distinct blocks restricted to mask, each as a vertex set.
    std::vector<VertexSet> classes_within(VertexSet mask) const {
        std::vector<VertexSet> out;
        VertexSet seen = 0;
        for_each_vertex(mask, [&](int v) {
            if (contains(seen, v)) return;
            VertexSet c = sclass_of(v) & mask;
            seen |= c;
            out.push_back(c);
        });
        return out;
    }

    /// Graph reduct: same vertices and edges, partition dropped.
    Structure reduct() const {
        Structure g(*this);
        g.drop_partition();
        return g;
    }

    friend bool operator==(const Structure& a, const Structure& b) {
        if (a.n_ != b.n_ || a.adj_ != b.adj_) return false;
        return a.normalized_blocks() == b.normalized_blocks();
    }

    /// Block ids renumbered by first occurrence; empty when no partition.
    std::vector<int> normalized_blocks() const {
        std::vector<int> out;
        if (!blocks_) return out;
        out.assign(n_, -1);
        std::vector<int> seen;
        for (int v = 0; v < n_; ++v) {
            int b = (*blocks_)[v];
            int id = -1;
            for (std::size_t i = 0; i < seen.size(); ++i)
                if (seen[i] == b) { id = static_cast<int>(i); break; }
            if (id < 0) {
                id = static_cast<int>(seen.size());
                seen.push_back(b);
            }
            out[v] = id;
        }
        return out;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw InputError("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(n_) + ")");
    }

    void check_subset(VertexSet s) const {
        if (!subset_of(s, universe()))
            throw InputError("vertex set " + set_str(s) + " not within structure of size " + std::to_string(n_));
    }

private:
    void ensure_partition() {
        if (!blocks_) {
            blocks_.emplace(n_);
            for (int v = 0; v < n_; ++v) (*blocks_)[v] = v;
        }
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::optional<std::vector<int>> blocks_;
};

/// Result of restricting to a subset: the re-indexed structure plus the
/// original vertex id of each new index.
struct Induced {
    Structure structure;
    std::vector<int> original; // original[new_index] = old vertex id
};

/// Induced substructure on V, vertices re-indexed densely in ascending order.
inline Induced induced_substructure(const Structure& s, VertexSet v_mask) {
    s.check_subset(v_mask);
    std::vector<int> orig = to_vertices(v_mask);
    int m = static_cast<int>(orig.size());
    Structure out(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (s.has_edge(orig[i], orig[j])) out.add_edge(i, j);
    if (s.has_partition()) {
        std::vector<int> blocks(m);
        for (int i = 0; i < m; ++i) blocks[i] = s.block_of(orig[i]);
        out.set_partition(blocks);
    }
    return Induced{std::move(out), std::move(orig)};
}

/// Structure with one vertex removed, later vertices shifted down.
inline Structure remove_vertex(const Structure& s, int v) {
    s.check_vertex(v);
    return induced_substructure(s, s.universe() & ~bit(v)).structure;
}

/// Remaps a vertex set across a remove_vertex call.
inline VertexSet mask_without_vertex(VertexSet mask, int v) {
    VertexSet low = mask & (bit(v) - 1);
    VertexSet high = mask & ~(bit(v) - 1) & ~bit(v);
    return low | (high >> 1);
}

/// Permutes vertex labels: vertex v of s becomes perm[v] of the result.
inline Structure permuted(const Structure& s, const std::vector<int>& perm) {
    Structure out(s.size());
    for (int u = 0; u < s.size(); ++u)
        for (int v = u + 1; v < s.size(); ++v)
            if (s.has_edge(u, v)) out.add_edge(perm[u], perm[v]);
    if (s.has_partition()) {
        std::vector<int> blocks(s.size());
        for (int v = 0; v < s.size(); ++v) blocks[perm[v]] = s.block_of(v);
        out.set_partition(blocks);
    }
    return out;
}

} // namespace genera
