#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "genera/structure.hpp"

namespace genera {

struct NamedStructure {
    std::string name;
    Structure structure;
};

namespace io_detail {

inline std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string t;
    while (in >> t) {
        if (t[0] == '#') break; // rest of line is a comment
        out.push_back(t);
    }
    return out;
}

inline int parse_int(const std::string& t, int line_no) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(t, &pos);
        if (pos != t.size()) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw InputError("line " + std::to_string(line_no) + ": expected integer, got '" + t + "'");
    }
}

} // namespace io_detail

/// Parses structure blocks:
///
///   structure <name>
///   vertices <n>
///   edge <u> <v>
///   sclass <v1> <v2> ...
///   end
///
/// Vertices not listed in any sclass line form singleton classes.  A block
/// with no sclass line at all is a pure graph (no partition).
inline std::vector<NamedStructure> parse_structures(std::istream& in) {
    std::vector<NamedStructure> out;
    std::string line;
    int line_no = 0;

    bool open = false;
    std::string name;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> sclasses;

    auto flush = [&](int at_line) {
        if (n < 0) throw InputError("line " + std::to_string(at_line) + ": structure '" + name + "' missing vertices line");
        Structure s(n);
        for (auto [u, v] : edges) s.add_edge(u, v);
        VertexSet covered = 0;
        for (const auto& cls : sclasses) {
            for (int v : cls) {
                s.check_vertex(v);
                if (contains(covered, v))
                    throw InputError("structure '" + name + "': vertex " + std::to_string(v) + " in two sclass lines");
                covered |= bit(v);
            }
            s.add_sclass(cls);
        }
        out.push_back({name, std::move(s)});
        open = false;
        name.clear();
        n = -1;
        edges.clear();
        sclasses.clear();
    };

    while (std::getline(in, line)) {
        ++line_no;
        auto t = io_detail::tokens(line);
        if (t.empty()) continue;
        const std::string& kw = t[0];
        if (kw == "structure") {
            if (open) throw InputError("line " + std::to_string(line_no) + ": nested structure block");
            open = true;
            name = t.size() > 1 ? t[1] : "";
        } else if (!open) {
            throw InputError("line " + std::to_string(line_no) + ": '" + kw + "' outside structure block");
        } else if (kw == "vertices") {
            if (t.size() != 2) throw InputError("line " + std::to_string(line_no) + ": vertices needs one count");
            n = io_detail::parse_int(t[1], line_no);
        } else if (kw == "edge") {
            if (t.size() != 3) throw InputError("line " + std::to_string(line_no) + ": edge needs two endpoints");
            edges.emplace_back(io_detail::parse_int(t[1], line_no), io_detail::parse_int(t[2], line_no));
        } else if (kw == "sclass") {
            std::vector<int> cls;
            for (std::size_t i = 1; i < t.size(); ++i) cls.push_back(io_detail::parse_int(t[i], line_no));
            sclasses.push_back(std::move(cls));
        } else if (kw == "end") {
            flush(line_no);
        } else {
            throw InputError("line " + std::to_string(line_no) + ": unknown keyword '" + kw + "'");
        }
    }
    if (open) throw InputError("unterminated structure block '" + name + "'");
    return out;
}

inline std::string format_structure(const Structure& s, const std::string& name) {
    std::ostringstream out;
    out << "structure " << name << "\n";
    out << "vertices " << s.size() << "\n";
    for (int u = 0; u < s.size(); ++u)
        for (int v = u + 1; v < s.size(); ++v)
            if (s.has_edge(u, v)) out << "edge " << u << " " << v << "\n";
    if (s.has_partition()) {
        for (VertexSet cls : s.classes_within(s.universe())) {
            if (popcount(cls) < 2) continue; // singletons are implicit
            out << "sclass";
            for_each_vertex(cls, [&](int v) { out << " " << v; });
            out << "\n";
        }
    }
    out << "end\n";
    return out.str();
}

/// Loads one structure from "path" or "path#name".
inline Structure load_structure(const std::string& spec_path) {
    std::string path = spec_path;
    std::string want;
    if (auto hash = spec_path.rfind('#'); hash != std::string::npos) {
        path = spec_path.substr(0, hash);
        want = spec_path.substr(hash + 1);
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot open structure file '" + path + "'");
    auto all = parse_structures(in);
    if (all.empty()) throw InputError("no structure blocks in '" + path + "'");
    if (want.empty()) return all.front().structure;
    for (auto& ns : all)
        if (ns.name == want) return ns.structure;
    throw InputError("no structure named '" + want + "' in '" + path + "'");
}

/// Parses a comma-separated vertex list ("0,2,5"); "" and "-" mean empty.
inline VertexSet parse_vertex_list(const std::string& text, const Structure& within) {
    if (text.empty() || text == "-" || text == "none") return 0;
    VertexSet out = 0;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw InputError("empty entry in vertex list '" + text + "'");
        int v = io_detail::parse_int(item, 0);
        within.check_vertex(v);
        if (contains(out, v)) throw InputError("duplicate vertex " + std::to_string(v) + " in list");
        out |= bit(v);
    }
    return out;
}

/// Parses an ordered tuple of vertices (repeats allowed).
inline std::vector<int> parse_vertex_tuple(const std::string& text, const Structure& within) {
    std::vector<int> out;
    if (text.empty() || text == "-" || text == "none") return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw InputError("empty entry in vertex tuple '" + text + "'");
        int v = io_detail::parse_int(item, 0);
        within.check_vertex(v);
        out.push_back(v);
    }
    return out;
}

} // namespace genera
