#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "genera/structure.hpp"

namespace genera {

/// Two structures with an identification of induced copies of the shared
/// part: ident pairs (b-vertex, c-vertex).
struct GluedTriple {
    Structure b;
    Structure c;
    std::vector<std::pair<int, int>> ident;
};

/// A free amalgam with the embeddings of both sides.  B keeps its vertex
/// ids; the unidentified vertices of C are appended in ascending order.
struct Amalgam {
    Structure d;
    std::vector<int> b_map; // b vertex -> d vertex (identity)
    std::vector<int> c_map; // c vertex -> d vertex
};

namespace amalgam_detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace amalgam_detail

/// Universe B u C over the identified shared part; edges are exactly those
/// of B and those of C.  Partition blocks merge along the identification and
/// otherwise stay disjoint.  The identification must be an isomorphism of
/// the induced copies (edges and blocks).
inline Amalgam free_amalgam(const GluedTriple& t) {
    const Structure& b = t.b;
    const Structure& c = t.c;
    if (b.has_partition() != c.has_partition())
        throw InputError("free_amalgam: exactly one side carries a partition");

    VertexSet used_b = 0, used_c = 0;
    for (auto [bv, cv] : t.ident) {
        b.check_vertex(bv);
        c.check_vertex(cv);
        if (contains(used_b, bv) || contains(used_c, cv))
            throw InputError("free_amalgam: identification repeats a vertex");
        used_b |= bit(bv);
        used_c |= bit(cv);
    }
    for (std::size_t i = 0; i < t.ident.size(); ++i) {
        for (std::size_t j = i + 1; j < t.ident.size(); ++j) {
            auto [b1, c1] = t.ident[i];
            auto [b2, c2] = t.ident[j];
            if (b.has_edge(b1, b2) != c.has_edge(c1, c2))
                throw InputError("free_amalgam: identification is not an edge isomorphism");
            if (b.has_partition() && b.same_class(b1, b2) != c.same_class(c1, c2))
                throw InputError("free_amalgam: identification is not a class isomorphism");
        }
    }

    std::vector<int> c_map(c.size(), -1);
    for (auto [bv, cv] : t.ident) c_map[cv] = bv;
    int next = b.size();
    for (int v = 0; v < c.size(); ++v)
        if (c_map[v] < 0) c_map[v] = next++;

    Structure d(next);
    for (int u = 0; u < b.size(); ++u)
        for (int v = u + 1; v < b.size(); ++v)
            if (b.has_edge(u, v)) d.add_edge(u, v);
    for (int u = 0; u < c.size(); ++u)
        for (int v = u + 1; v < c.size(); ++v)
            if (c.has_edge(u, v) && !d.has_edge(c_map[u], c_map[v])) d.add_edge(c_map[u], c_map[v]);

    if (b.has_partition()) {
        amalgam_detail::UnionFind uf(next);
        for (int u = 0; u < b.size(); ++u)
            for (int v = u + 1; v < b.size(); ++v)
                if (b.same_class(u, v)) uf.unite(u, v);
        for (int u = 0; u < c.size(); ++u)
            for (int v = u + 1; v < c.size(); ++v)
                if (c.same_class(u, v)) uf.unite(c_map[u], c_map[v]);
        std::vector<int> blocks(next);
        for (int v = 0; v < next; ++v) blocks[v] = uf.find(v);
        d.set_partition(blocks);
    }

    std::vector<int> b_map(b.size());
    std::iota(b_map.begin(), b_map.end(), 0);
    return Amalgam{std::move(d), std::move(b_map), std::move(c_map)};
}

/// A member of an iterated amalgam: a structure with the ordered positions
/// of its distinguished copy of the shared base.
struct OplusMember {
    Structure structure;
    std::vector<int> base; // base[i] = member vertex playing base vertex i
};

struct OplusResult {
    Structure d;
    std::vector<int> base_map;               // base vertex i -> d vertex
    std::vector<std::vector<int>> member_maps; // member vertex -> d vertex
};

/// Left-folded iterated free amalgam of the members over the shared base.
/// The base keeps vertex ids 0..|base|-1 in d; members' fresh vertices are
/// appended in member order.
inline OplusResult oplus_family(const Structure& base, const std::vector<OplusMember>& members) {
    OplusResult res;
    res.d = base;
    res.base_map.resize(base.size());
    std::iota(res.base_map.begin(), res.base_map.end(), 0);

    for (const OplusMember& m : members) {
        if (static_cast<int>(m.base.size()) != base.size())
            throw InputError("oplus_family: member base list does not match the shared base");
        std::vector<std::pair<int, int>> ident;
        for (int i = 0; i < base.size(); ++i) ident.emplace_back(res.base_map[i], m.base[i]);
        // validate the member's designated copy against the base itself
        for (int i = 0; i < base.size(); ++i) {
            for (int j = i + 1; j < base.size(); ++j) {
                if (base.has_edge(i, j) != m.structure.has_edge(m.base[i], m.base[j]))
                    throw InputError("oplus_family: member base is not an edge-isomorphic copy");
                if (base.has_partition() && m.structure.has_partition() &&
                    base.same_class(i, j) != m.structure.same_class(m.base[i], m.base[j]))
                    throw InputError("oplus_family: member base is not a class-isomorphic copy");
            }
        }
        Amalgam glued = free_amalgam(GluedTriple{res.d, m.structure, std::move(ident)});
        // d keeps its ids, so existing maps stay valid
        res.d = std::move(glued.d);
        res.member_maps.push_back(std::move(glued.c_map));
    }
    return res;
}

/// n disjoint copies of ext over its designated base, as one structure.
/// Vertex i of the shared base is base_in_ext[i].
inline OplusResult oplus_power(const Structure& ext, const std::vector<int>& base_in_ext, int n) {
    Structure base_s(static_cast<int>(base_in_ext.size()));
    for (std::size_t i = 0; i < base_in_ext.size(); ++i)
        for (std::size_t j = i + 1; j < base_in_ext.size(); ++j)
            if (ext.has_edge(base_in_ext[i], base_in_ext[j]))
                base_s.add_edge(static_cast<int>(i), static_cast<int>(j));
    if (ext.has_partition()) {
        std::vector<int> blocks(base_in_ext.size());
        for (std::size_t i = 0; i < base_in_ext.size(); ++i) blocks[i] = ext.block_of(base_in_ext[i]);
        base_s.set_partition(blocks);
    }
    std::vector<OplusMember> members(n, OplusMember{ext, base_in_ext});
    return oplus_family(base_s, members);
}

} // namespace genera
