#pragma once

// graph6 I/O (McKay's format), short form only: header byte 63+n for
// n <= 62, then the upper triangle of the adjacency matrix in column order
// (0,1),(0,2),(1,2),(0,3),... packed big-endian into 6-bit groups, each
// offset by 63. Padding bits must be zero; round trips are bit-exact.
//
// Also a small edge-list reader: one "u v" pair per line, '#' comments,
// and an optional single-integer first line fixing the vertex count (needed
// for trailing isolated vertices).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vmchain/errors.hpp"
#include "vmchain/graph.hpp"

namespace vmchain {

inline constexpr int kGraph6MaxOrder = 62;

inline std::string to_graph6(const Graph& g) {
    int n = g.order();
    if (n > kGraph6MaxOrder)
        throw argument_error("graph6 short form covers n <= 62, got n = " +
                             std::to_string(n));
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

inline Graph from_graph6(std::string_view text) {
    std::size_t pos = 0;
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
    if (pos >= text.size()) throw parse_error("empty graph6 record", pos);

    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c == 126)
        throw parse_error("graph6 long form (n > 62) not supported", pos);
    if (c < 63 || c > 63 + kGraph6MaxOrder)
        throw parse_error("bad graph6 order byte", pos);
    int n = c - 63;
    ++pos;

    Graph g(n);
    int pairs = n * (n - 1) / 2;
    int consumed = 0;
    int i = 0, j = 1;
    while (consumed < pairs) {
        if (pos >= text.size())
            throw parse_error("truncated graph6 record", pos);
        unsigned char b = static_cast<unsigned char>(text[pos]);
        if (b < 63 || b > 126)
            throw parse_error("graph6 byte out of printable range", pos);
        int group = b - 63;
        for (int k = 5; k >= 0; --k) {
            int bit_val = (group >> k) & 1;
            if (consumed < pairs) {
                if (bit_val) g.add_edge(i, j);
                ++consumed;
                if (++i == j) {
                    i = 0;
                    ++j;
                }
            } else if (bit_val) {
                throw parse_error("nonzero graph6 padding", pos);
            }
        }
        ++pos;
    }
    if (pos != text.size())
        throw parse_error("trailing bytes after graph6 record", pos);
    return g;
}

inline Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    int n = -1;
    std::size_t pos = 0, line_start = 0;
    bool first_data_line = true;
    while (pos <= text.size()) {
        if (pos == text.size() || text[pos] == '\n') {
            std::string_view line = text.substr(line_start, pos - line_start);
            std::size_t here = line_start;
            line_start = pos + 1;
            // strip comments and whitespace-only lines
            if (auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            long a = -1, b = -1;
            int fields = 0;
            std::size_t q = 0;
            while (q < line.size()) {
                if (line[q] == ' ' || line[q] == '\t' || line[q] == '\r') {
                    ++q;
                    continue;
                }
                if (line[q] < '0' || line[q] > '9')
                    throw parse_error("bad edge list token", here + q);
                long v = 0;
                while (q < line.size() && line[q] >= '0' && line[q] <= '9') {
                    v = v * 10 + (line[q] - '0');
                    if (v > kMaxVertices)
                        throw parse_error("vertex label too large", here + q);
                    ++q;
                }
                if (fields == 0)
                    a = v;
                else if (fields == 1)
                    b = v;
                else
                    throw parse_error("more than two labels on a line",
                                      here + q);
                ++fields;
            }
            if (fields == 1 && first_data_line) {
                n = static_cast<int>(a);  // explicit vertex count
            } else if (fields == 2) {
                edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
                if (a >= n) n = static_cast<int>(a) + 1;
                if (b >= n) n = static_cast<int>(b) + 1;
            } else if (fields != 0) {
                throw parse_error("expected 'u v' per line", here);
            }
            if (fields != 0) first_data_line = false;
        }
        ++pos;
    }
    if (n < 0) n = 0;
    if (n > kMaxVertices) throw parse_error("too many vertices", 0);
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u == v) throw parse_error("loop in edge list", 0);
        g.add_edge(u, v);
    }
    return g;
}

}  // namespace vmchain
