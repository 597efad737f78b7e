#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "genera/structure.hpp"

namespace genera {

namespace canon_detail {

/// Stable coloring by iterated refinement.  Initial color: pin position for
/// pinned vertices (each its own cell, ordered first), else (degree, class
/// size).  Refinement folds in sorted neighbor and same-class color
/// multisets until the number of colors stabilizes.  Color ids are assigned
/// by sorting signatures, so they are isomorphism-invariant.
inline std::vector<int> stable_coloring(const Structure& s, const std::vector<int>& pinned) {
    int n = s.size();
    std::vector<int> pin_pos(n, -1);
    for (std::size_t i = 0; i < pinned.size(); ++i) pin_pos[pinned[i]] = static_cast<int>(i);

    std::vector<std::vector<long long>> sig(n);
    for (int v = 0; v < n; ++v) {
        if (pin_pos[v] >= 0)
            sig[v] = {0, pin_pos[v]};
        else
            sig[v] = {1, popcount(s.neighbors(v)), popcount(s.sclass_of(v))};
    }

    std::vector<int> color(n, 0);
    int num_colors = 0;
    for (int round = 0; round <= n; ++round) {
        std::vector<std::vector<long long>> keys(n);
        for (int v = 0; v < n; ++v) keys[v] = sig[v];
        std::vector<std::vector<long long>> sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
        int count = static_cast<int>(sorted.size());
        if (count == num_colors || count == n) break;
        num_colors = count;
        for (int v = 0; v < n; ++v) {
            std::vector<long long> nb, sc;
            for_each_vertex(s.neighbors(v), [&](int u) { nb.push_back(color[u]); });
            for_each_vertex(s.sclass_of(v) & ~bit(v), [&](int u) { sc.push_back(color[u]); });
            std::sort(nb.begin(), nb.end());
            std::sort(sc.begin(), sc.end());
            sig[v] = {color[v]};
            sig[v].push_back(-1);
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
            sig[v].push_back(-2);
            sig[v].insert(sig[v].end(), sc.begin(), sc.end());
        }
    }
    return color;
}

/// Per-placed-vertex record: adjacency mask to earlier placements plus the
/// block link (0 = opens a new block among placed, else 1 + index of the
/// earliest placed vertex sharing its block).
struct Record {
    std::uint64_t adj;
    int slink;
    friend auto operator<=>(const Record&, const Record&) = default;
};

class CanonSearch {
public:
    CanonSearch(const Structure& s, const std::vector<int>& pinned) : s_(s), n_(s.size()) {
        color_ = stable_coloring(s, pinned);
        order_.reserve(n_);
        for (int v : pinned) {
            order_.push_back(v);
            placed_ |= bit(v);
        }
    }

    std::vector<Record> run() {
        best_.clear();
        have_best_ = false;
        cur_.resize(n_);
        for (std::size_t i = 0; i < order_.size(); ++i) cur_[i] = record_for(order_[i], i);
        dfs(order_.size());
        return best_;
    }

private:
    Record record_for(int v, std::size_t position) const {
        Record r{0, 0};
        for (std::size_t j = 0; j < position; ++j)
            if (s_.has_edge(v, order_[j])) r.adj |= std::uint64_t{1} << j;
        for (std::size_t j = 0; j < position; ++j) {
            if (s_.block_of(order_[j]) == s_.block_of(v)) {
                r.slink = static_cast<int>(j) + 1;
                break;
            }
        }
        return r;
    }

    // -1 cur < best, 0 equal, +1 cur > best, at this position
    int cmp_best(std::size_t i) const {
        if (!have_best_) return -1;
        if (cur_[i] < best_[i]) return -1;
        if (best_[i] < cur_[i]) return 1;
        return 0;
    }

    void dfs(std::size_t depth) {
        if (depth == static_cast<std::size_t>(n_)) {
            best_.assign(cur_.begin(), cur_.end());
            have_best_ = true;
            return;
        }
        // first unplaced cell: the lowest color among unplaced vertices
        int cell = -1;
        for (int v = 0; v < n_; ++v)
            if (!contains(placed_, v) && (cell < 0 || color_[v] < cell)) cell = color_[v];
        std::vector<int> cands;
        for (int v = 0; v < n_; ++v)
            if (!contains(placed_, v) && color_[v] == cell) cands.push_back(v);

        std::vector<int> tried;
        for (int v : cands) {
            bool dup = false;
            for (int u : tried) {
                if (twins(u, v)) { dup = true; break; }
            }
            if (dup) continue;
            tried.push_back(v);

            cur_[depth] = record_for(v, depth);
            int c = cmp_best(depth);
            if (c > 0) continue; // worse than the known minimum
            bool strictly_better = c < 0;
            if (strictly_better) have_best_ = false; // everything below becomes the new best
            order_.push_back(v);
            placed_ |= bit(v);
            dfs(depth + 1);
            placed_ &= ~bit(v);
            order_.pop_back();
        }
    }

    // Swapping mutual twins is an automorphism, so trying both is redundant.
    bool twins(int u, int v) const {
        if (s_.block_of(u) != s_.block_of(v)) return false;
        VertexSet mu = s_.neighbors(u) & ~bit(v);
        VertexSet mv = s_.neighbors(v) & ~bit(u);
        return mu == mv;
    }

    const Structure& s_;
    int n_;
    std::vector<int> color_;
    std::vector<int> order_;
    VertexSet placed_ = 0;
    std::vector<Record> cur_;
    std::vector<Record> best_;
    bool have_best_ = false;
};

} // namespace canon_detail

/// Canonical byte form: equal byte strings exactly when the structures are
/// isomorphic (respecting partitions).  With a pinned anchor tuple, equal
/// forms mean isomorphic by a map carrying anchors to anchors pointwise in
/// order.
inline std::string canonical_form_pinned(const Structure& s, const std::vector<int>& anchor) {
    VertexSet seen = 0;
    for (int v : anchor) {
        s.check_vertex(v);
        if (contains(seen, v)) throw InputError("canonical anchor repeats vertex " + std::to_string(v));
        seen |= bit(v);
    }
    canon_detail::CanonSearch search(s, anchor);
    auto records = search.run();
    std::string out;
    out.push_back(static_cast<char>(s.size()));
    out.push_back(s.has_partition() ? 1 : 0);
    out.push_back(static_cast<char>(anchor.size()));
    for (const auto& r : records) {
        for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((r.adj >> (8 * b)) & 0xff));
        out.push_back(static_cast<char>(r.slink));
    }
    return out;
}

inline std::string canonical_form(const Structure& s) { return canonical_form_pinned(s, {}); }

inline bool are_isomorphic(const Structure& a, const Structure& b) {
    if (a.size() != b.size() || a.has_partition() != b.has_partition()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace genera
