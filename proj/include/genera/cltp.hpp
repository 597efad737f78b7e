#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "genera/canonical.hpp"
#include "genera/closure.hpp"

namespace genera {

/// Canonical finite tree of depth-k closure types of a tuple, relative to a
/// fixed finite ambient.
///
/// A depth-0 node records one realized minimal pair over a subset of the
/// tuple: which tuple positions anchor it, and the anchored canonical form
/// of the pair.  A depth-(k+1) node additionally carries the full depth-k
/// type of the tuple extended by the pair's new vertices.  Negative
/// information is the complement of the node set: in a fixed finite ambient
/// the realization set is total, so absence encodes the negated formulas.
struct ClosureTypeTree {
    struct Node {
        std::vector<int> anchor; // tuple positions, ascending
        std::string pair_form;   // canonical form of the pair anchored at the base
        std::shared_ptr<const ClosureTypeTree> child; // null at depth 0
        std::string encoding;
    };

    int depth = 0;
    std::vector<Node> nodes; // sorted by encoding, duplicate-free
    std::string encoding;
};

namespace cltp_detail {

inline std::string encode_node(const ClosureTypeTree::Node& n) {
    std::string out = "[";
    for (int p : n.anchor) {
        out += std::to_string(p);
        out += '.';
    }
    out += '|';
    out += n.pair_form;
    if (n.child) {
        out += '>';
        out += n.child->encoding;
    }
    out += ']';
    return out;
}

inline void finalize(ClosureTypeTree& t) {
    for (auto& n : t.nodes) n.encoding = encode_node(n);
    std::sort(t.nodes.begin(), t.nodes.end(),
              [](const auto& a, const auto& b) { return a.encoding < b.encoding; });
    t.nodes.erase(std::unique(t.nodes.begin(), t.nodes.end(),
                              [](const auto& a, const auto& b) { return a.encoding == b.encoding; }),
                  t.nodes.end());
    t.encoding = "(" + std::to_string(t.depth) + ":";
    for (const auto& n : t.nodes) t.encoding += n.encoding;
    t.encoding += ')';
}

class Evaluator {
public:
    Evaluator(const Structure& s, const ClassSpec& spec, int max_ext)
        : s_(s), spec_(spec), max_ext_(max_ext) {}

    std::shared_ptr<const ClosureTypeTree> eval(const std::vector<int>& tuple, int depth) {
        auto key = std::make_pair(tuple, depth);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        auto tree = std::make_shared<ClosureTypeTree>();
        tree->depth = depth;

        VertexSet tuple_set = 0;
        for (int v : tuple) {
            s_.check_vertex(v);
            tuple_set |= bit(v);
        }
        // first-occurrence position of each distinct vertex
        std::map<int, int> first_pos;
        for (std::size_t i = 0; i < tuple.size(); ++i)
            if (!first_pos.count(tuple[i])) first_pos[tuple[i]] = static_cast<int>(i);

        for (const MinimalPair& mp : enumerate_minimal_pairs(s_, tuple_set, spec_, max_ext_)) {
            ClosureTypeTree::Node node;
            for_each_vertex(mp.base, [&](int v) { node.anchor.push_back(first_pos[v]); });
            std::sort(node.anchor.begin(), node.anchor.end());

            Induced pair = induced_substructure(s_, mp.ext);
            std::vector<int> anchor_in_pair;
            // base vertices in tuple-position order
            std::vector<int> base_by_pos = to_vertices(mp.base);
            std::sort(base_by_pos.begin(), base_by_pos.end(),
                      [&](int a, int b) { return first_pos[a] < first_pos[b]; });
            for (int bv : base_by_pos) {
                for (std::size_t i = 0; i < pair.original.size(); ++i)
                    if (pair.original[i] == bv) anchor_in_pair.push_back(static_cast<int>(i));
            }
            node.pair_form = canonical_form_pinned(pair.structure, anchor_in_pair);

            if (depth > 0) {
                std::vector<int> extended = tuple;
                for_each_vertex(mp.ext & ~mp.base, [&](int v) { extended.push_back(v); });
                node.child = eval(extended, depth - 1);
            }
            tree->nodes.push_back(std::move(node));
        }
        finalize(*tree);
        std::shared_ptr<const ClosureTypeTree> out = tree;
        memo_.emplace(std::move(key), out);
        return out;
    }

private:
    const Structure& s_;
    ClassSpec spec_;
    int max_ext_;
    std::map<std::pair<std::vector<int>, int>, std::shared_ptr<const ClosureTypeTree>> memo_;
};

} // namespace cltp_detail

/// Closure type of a tuple at depth k in the given ambient.  Realization is
/// ambient-relative: the type describes exactly the minimal-pair extensions
/// the ambient offers.
inline ClosureTypeTree cltp(const Structure& s, const std::vector<int>& tuple, int depth,
                            const ClassSpec& spec, int max_ext = 6) {
    if (depth < 0) throw InputError("cltp depth must be non-negative");
    cltp_detail::Evaluator ev(s, spec, max_ext);
    return *ev.eval(tuple, depth);
}

/// Truncation to a smaller depth: children drop to depth j-1; at depth 0
/// nodes lose their children and merge.
inline ClosureTypeTree truncate(const ClosureTypeTree& t, int depth) {
    if (depth >= t.depth) return t;
    ClosureTypeTree out;
    out.depth = depth;
    for (const auto& n : t.nodes) {
        ClosureTypeTree::Node copy;
        copy.anchor = n.anchor;
        copy.pair_form = n.pair_form;
        if (depth > 0 && n.child)
            copy.child = std::make_shared<const ClosureTypeTree>(truncate(*n.child, depth - 1));
        out.nodes.push_back(std::move(copy));
    }
    cltp_detail::finalize(out);
    return out;
}

struct CltpComparison {
    bool equal = true;
    int distinguishing_depth = -1;   // least depth at which the trees differ
    std::vector<std::string> certificate; // node encodings along the distinguishing path
};

namespace cltp_detail {

inline void diff_path(const ClosureTypeTree& a, const ClosureTypeTree& b,
                      std::vector<std::string>& path) {
    // find a node of one side with no encoding-equal partner on the other
    for (const auto& n : a.nodes) {
        bool matched = false;
        for (const auto& m : b.nodes)
            if (m.encoding == n.encoding) { matched = true; break; }
        if (matched) continue;
        std::string label = "anchor=";
        for (int p : n.anchor) label += std::to_string(p) + ".";
        path.push_back(label);
        // descend when the partner differs only below this pair
        for (const auto& m : b.nodes) {
            if (m.anchor == n.anchor && m.pair_form == n.pair_form && n.child && m.child) {
                diff_path(*n.child, *m.child, path);
                return;
            }
        }
        return;
    }
    for (const auto& m : b.nodes) {
        bool matched = false;
        for (const auto& n : a.nodes)
            if (n.encoding == m.encoding) { matched = true; break; }
        if (!matched) {
            std::string label = "anchor=";
            for (int p : m.anchor) label += std::to_string(p) + ".";
            path.push_back(label);
            return;
        }
    }
}

} // namespace cltp_detail

/// Compares the closure types of two same-length tuples at every depth up
/// to k, reporting the least distinguishing depth and a witnessing path.
inline CltpComparison cltp_equal(const Structure& s, const std::vector<int>& t1,
                                 const std::vector<int>& t2, int depth, const ClassSpec& spec,
                                 int max_ext = 6) {
    if (t1.size() != t2.size()) throw InputError("cltp_equal: tuples must have equal length");
    CltpComparison cmp;
    ClosureTypeTree a = cltp(s, t1, depth, spec, max_ext);
    ClosureTypeTree b = cltp(s, t2, depth, spec, max_ext);
    if (a.encoding == b.encoding) return cmp;
    cmp.equal = false;
    for (int d = 0; d <= depth; ++d) {
        ClosureTypeTree ta = truncate(a, d);
        ClosureTypeTree tb = truncate(b, d);
        if (ta.encoding != tb.encoding) {
            cmp.distinguishing_depth = d;
            cltp_detail::diff_path(ta, tb, cmp.certificate);
            break;
        }
    }
    return cmp;
}

/// Human-readable rendering for the CLI.
inline void render_tree(const ClosureTypeTree& t, std::string indent, std::string& out) {
    out += indent + "depth " + std::to_string(t.depth) + ": " + std::to_string(t.nodes.size()) +
           " realized pair(s)\n";
    for (const auto& n : t.nodes) {
        std::string anchors;
        for (int p : n.anchor) anchors += (anchors.empty() ? "" : ",") + std::to_string(p);
        std::string hex;
        for (unsigned char c : n.pair_form) {
            const char* digits = "0123456789abcdef";
            hex += digits[c >> 4];
            hex += digits[c & 15];
        }
        out += indent + "  pair anchor=[" + anchors + "] form=" + hex.substr(0, 16) + "\n";
        if (n.child) render_tree(*n.child, indent + "    ", out);
    }
}

} // namespace genera
