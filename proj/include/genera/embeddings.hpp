#pragma once

#include <vector>

#include "genera/structure.hpp"

namespace genera {

/// An injective structure map.  Preserves and reflects edges, and preserves
/// and reflects the equivalence partition when both sides carry one.
struct Embedding {
    std::vector<int> map; // map[domain vertex] = codomain vertex

    VertexSet image() const {
        VertexSet s = 0;
        for (int v : map) s |= bit(v);
        return s;
    }
};

/// Re-verifies an embedding against the definition.  Test harnesses call
/// this on every enumerated copy.
inline bool embedding_valid(const Structure& domain, const Structure& codomain, const Embedding& e) {
    if (static_cast<int>(e.map.size()) != domain.size()) return false;
    VertexSet used = 0;
    for (int v : e.map) {
        if (v < 0 || v >= codomain.size() || contains(used, v)) return false;
        used |= bit(v);
    }
    bool check_partition = domain.has_partition() && codomain.has_partition();
    for (int u = 0; u < domain.size(); ++u) {
        for (int v = u + 1; v < domain.size(); ++v) {
            if (domain.has_edge(u, v) != codomain.has_edge(e.map[u], e.map[v])) return false;
            if (check_partition && domain.same_class(u, v) != codomain.same_class(e.map[u], e.map[v]))
                return false;
        }
    }
    return true;
}

/// All embeddings of y into ambient carrying the distinguished base of y to
/// the given ambient vertices pointwise (x_in_y[i] -> x_in_ambient[i]).
/// Output is deterministic: lexicographic in the image tuple of the
/// non-base vertices taken in ascending order.
///
/// The partition is enforced when both structures carry one; a partitioned
/// pattern cannot be matched into a plain graph.
inline std::vector<Embedding> copies_over_base(const Structure& ambient,
                                               const std::vector<int>& x_in_ambient,
                                               const Structure& y,
                                               const std::vector<int>& x_in_y) {
    if (x_in_ambient.size() != x_in_y.size())
        throw InputError("copies_over_base: base correspondence lists differ in length");
    if (y.has_partition() && !ambient.has_partition())
        throw InputError("copies_over_base: partitioned pattern over a plain graph ambient");
    bool check_partition = y.has_partition() && ambient.has_partition();

    VertexSet base_y = 0, base_amb = 0;
    for (std::size_t i = 0; i < x_in_y.size(); ++i) {
        y.check_vertex(x_in_y[i]);
        ambient.check_vertex(x_in_ambient[i]);
        if (contains(base_y, x_in_y[i]) || contains(base_amb, x_in_ambient[i]))
            throw InputError("copies_over_base: repeated vertex in base correspondence");
        base_y |= bit(x_in_y[i]);
        base_amb |= bit(x_in_ambient[i]);
    }
    // the correspondence itself must be a partial isomorphism
    for (std::size_t i = 0; i < x_in_y.size(); ++i) {
        for (std::size_t j = i + 1; j < x_in_y.size(); ++j) {
            if (y.has_edge(x_in_y[i], x_in_y[j]) != ambient.has_edge(x_in_ambient[i], x_in_ambient[j]))
                throw InputError("copies_over_base: base correspondence does not preserve edges");
            if (check_partition &&
                y.same_class(x_in_y[i], x_in_y[j]) != ambient.same_class(x_in_ambient[i], x_in_ambient[j]))
                throw InputError("copies_over_base: base correspondence does not preserve classes");
        }
    }

    std::vector<int> free_y = to_vertices(y.universe() & ~base_y);
    std::vector<int> map(y.size(), -1);
    for (std::size_t i = 0; i < x_in_y.size(); ++i) map[x_in_y[i]] = x_in_ambient[i];

    std::vector<Embedding> out;
    VertexSet used = base_amb;

    auto consistent = [&](int yv, int av) {
        for (int u = 0; u < y.size(); ++u) {
            if (map[u] < 0 || u == yv) continue;
            if (y.has_edge(u, yv) != ambient.has_edge(map[u], av)) return false;
            if (check_partition && y.same_class(u, yv) != ambient.same_class(map[u], av)) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == free_y.size()) {
            out.push_back(Embedding{map});
            return;
        }
        int yv = free_y[i];
        for (int av = 0; av < ambient.size(); ++av) {
            if (contains(used, av) || !consistent(yv, av)) continue;
            map[yv] = av;
            used |= bit(av);
            self(self, i + 1);
            used &= ~bit(av);
            map[yv] = -1;
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace genera
