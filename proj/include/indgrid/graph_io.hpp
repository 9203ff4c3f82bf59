/**
 * Plain-text graph format.
 *
 *   p <order>
 *   v <index> <label>      one per vertex, 1-based, in index order
 *   e <i> <j>              1-based, i < j
 *
 * Blank lines are ignored; any other line is rejected.
 */
#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "graph.hpp"

namespace indgrid {

inline std::string write_graph_text(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.order() << '\n';
    for (std::size_t i = 0; i < g.order(); ++i) out << "v " << i + 1 << ' ' << g.label(i) << '\n';
    for (auto [a, b] : g.edges()) out << "e " << a + 1 << ' ' << b + 1 << '\n';
    return out.str();
}

inline Graph read_graph_text(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::size_t> order;
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError("graph text line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            std::size_t n;
            if (order || !(ls >> n)) throw fail("bad or repeated 'p' line");
            order = n;
        } else if (tag == "v") {
            std::size_t idx;
            std::string label;
            if (!order) throw fail("'v' before 'p'");
            if (!(ls >> idx >> label)) throw fail("malformed 'v' line");
            if (idx != labels.size() + 1) throw fail("vertex indices must be consecutive from 1");
            labels.push_back(label);
        } else if (tag == "e") {
            std::size_t a, b;
            if (!order) throw fail("'e' before 'p'");
            if (!(ls >> a >> b)) throw fail("malformed 'e' line");
            if (a < 1 || b > *order || a >= b) throw fail("edge must satisfy 1 <= i < j <= order");
            edges.emplace_back(a - 1, b - 1);
        } else {
            throw fail("unknown line '" + line + "'");
        }
        std::string extra;
        if (ls >> extra) throw fail("trailing text '" + extra + "'");
    }
    if (!order) throw ParseError("graph text: missing 'p' line");
    if (labels.size() != *order) throw ParseError("graph text: expected " + std::to_string(*order) + " vertices");
    try {
        return Graph(std::move(labels), edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("graph text: ") + e.what());
    }
}

inline Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file '" + path + "'");
    return read_graph_text(in);
}

/// FNV-1a over the canonical text form; stable across platforms.
inline std::uint64_t graph_hash(const Graph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : write_graph_text(g)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string graph_hash_hex(const Graph& g) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(graph_hash(g)));
    return buf;
}

} // namespace indgrid
