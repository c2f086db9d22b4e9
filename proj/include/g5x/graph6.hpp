#pragma once

// graph6 encoding (bit-exact per the nauty formats specification) and a
// plain-text adjacency list format: one "u v" pair per line, 0-indexed,
// '#' comments. An optional "# order N" comment preserves isolated
// vertices across a round trip.

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "g5x/graph.hpp"

namespace g5x {

inline std::string to_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        // long form: '~' followed by 18 bits of n in three 6-bit groups
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int bit = 0;
    int chunk = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bit == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                bit = 0;
                chunk = 0;
            }
        }
    }
    if (bit > 0) out.push_back(static_cast<char>((chunk << (6 - bit)) + 63));
    return out;
}

inline Graph from_graph6(std::string_view s) {
    // tolerate the optional ">>graph6<<" header and trailing newline
    constexpr std::string_view header = ">>graph6<<";
    if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) throw std::invalid_argument("graph6: empty input");

    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw std::invalid_argument("graph6: truncated input");
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
        return c - 63;
    };

    int n;
    if (s[0] == '~') {
        ++pos;
        if (pos + 3 > s.size()) throw std::invalid_argument("graph6: truncated order");
        if (s[pos] == '~') throw std::invalid_argument("graph6: order beyond 64 unsupported");
        int a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = next();
    }
    if (n > Graph::kMaxOrder) throw std::invalid_argument("graph6: order exceeds capacity 64");

    Graph g(n);
    int bit = 0;
    int chunk = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bit == 0) {
                chunk = next();
                bit = 6;
            }
            --bit;
            if ((chunk >> bit) & 1) g.add_edge(i, j);
        }
    }
    if (pos != s.size()) throw std::invalid_argument("graph6: trailing bytes");
    return g;
}

inline std::string to_adjacency_text(const Graph& g) {
    std::ostringstream out;
    out << "# order " << g.order() << "\n";
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbourhood(u))
            if (v > u) out << u << " " << v << "\n";
    return out.str();
}

inline Graph from_adjacency_text(std::string_view text) {
    int order = -1;
    std::vector<std::pair<int, int>> edges;
    int max_id = -1;

    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;

        std::size_t hash = line.find('#');
        std::string_view comment = hash == std::string_view::npos ? std::string_view{} : line.substr(hash + 1);
        if (hash != std::string_view::npos) line = line.substr(0, hash);

        // "# order N" sets the order explicitly
        {
            std::istringstream cs{std::string(comment)};
            std::string word;
            int value;
            if (cs >> word >> value && word == "order") order = value;
        }

        std::istringstream ls{std::string(line)};
        int u, v;
        if (ls >> u) {
            if (!(ls >> v)) throw std::invalid_argument("adjacency: dangling vertex id");
            if (u < 0 || v < 0) throw std::invalid_argument("adjacency: negative vertex id");
            edges.emplace_back(u, v);
            max_id = std::max({max_id, u, v});
        }
    }

    int n = order >= 0 ? order : max_id + 1;
    if (max_id >= n) throw std::invalid_argument("adjacency: vertex id exceeds declared order");
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

}  // namespace g5x
