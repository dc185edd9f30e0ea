#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>

#include "omax/graph.hpp"

namespace omax {

struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

namespace detail {

inline bool parse_int(std::string_view tok, int& out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && ptr == tok.data() + tok.size();
}

inline std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string tok;
    while (in >> tok)
        toks.push_back(tok);
    return toks;
}

}  // namespace detail

// DIMACS ascii clique format: "c" comment lines, one "p edge <n> <m>" problem
// line, "e <u> <v>" edge lines with 1-based endpoints. Duplicate e-lines
// collapse; the resulting edge_count reflects distinct edges.
inline graph parse_dimacs(std::string_view text) {
    int n = -1;
    edge_list edges;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;
        if (!raw.empty() && raw.back() == '\r')
            raw.remove_suffix(1);
        auto toks = detail::split_ws(std::string(raw));
        if (toks.empty())
            continue;
        if (toks[0] == "c")
            continue;
        if (toks[0] == "p") {
            if (n >= 0)
                throw parse_error(line_no, "duplicate problem line");
            int m = 0;
            if (toks.size() != 4 || toks[1] != "edge" ||
                !detail::parse_int(toks[2], n) || !detail::parse_int(toks[3], m))
                throw parse_error(line_no, "malformed problem line, expected \"p edge <n> <m>\"");
            if (n < 1)
                throw parse_error(line_no, "graph order must be at least 1");
            continue;
        }
        if (toks[0] == "e") {
            if (n < 0)
                throw parse_error(line_no, "edge line before problem line");
            int u = 0, v = 0;
            if (toks.size() != 3 || !detail::parse_int(toks[1], u) || !detail::parse_int(toks[2], v))
                throw parse_error(line_no, "malformed edge line, expected \"e <u> <v>\"");
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error(line_no, "edge endpoint out of range");
            if (u == v)
                throw parse_error(line_no, "self-loop edge");
            edges.emplace_back(u, v);
            continue;
        }
        throw parse_error(line_no, "unrecognized line \"" + std::string(raw) + "\"");
    }
    if (n < 0)
        throw parse_error(line_no, "missing problem line");
    return graph(n, edges);
}

// LF line endings, no trailing whitespace, edges emitted smaller endpoint
// first in lexicographic order. parse_dimacs(write_dimacs(g)) == g.
inline std::string write_dimacs(const graph& g) {
    std::string out = "p edge " + std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace omax
