#include "minors/io.hpp"

#include <sstream>

namespace minors {

namespace {

constexpr const char* kHeader = ">>graph6<<";

}  // namespace

Graph parse_graph6(const std::string& raw) {
    std::string text = raw;
    if (text.rfind(kHeader, 0) == 0) text = text.substr(std::string(kHeader).size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.pop_back();
    if (text.empty()) throw ParseError("empty graph6 string", 0);

    std::size_t at = 0;
    auto next = [&]() -> int {
        if (at >= text.size()) throw ParseError("truncated graph6 string", at);
        unsigned char c = static_cast<unsigned char>(text[at]);
        if (c < 63 || c > 126) throw ParseError("invalid graph6 byte", at);
        ++at;
        return c - 63;
    };

    long long n;
    int first = next();
    if (first < 63) {
        n = first;
    } else {
        // '~' prefix: 18-bit count in the next three bytes. A second '~'
        // would start the 36-bit form, far beyond this build's cap.
        int b1 = next();
        if (b1 == 63) throw ParseError("graph too large for this build", at - 1);
        int b2 = next(), b3 = next();
        n = (static_cast<long long>(b1) << 12) | (b2 << 6) | b3;
    }
    if (n > 64) throw ParseError("graph has more than 64 vertices", 0);

    std::vector<std::pair<int, int>> edges;
    int bits = 0, have = 0, word = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (have == 0) {
                word = next();
                have = 6;
            }
            --have;
            if ((word >> have) & 1) edges.emplace_back(i, j);
            ++bits;
        }
    (void)bits;
    if (at != text.size()) throw ParseError("trailing bytes after graph6 data", at);
    return Graph(static_cast<int>(n), edges);
}

std::string serialize_graph6(const Graph& g) {
    std::string out;
    int n = g.vertex_count();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int have = 0, word = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            word = (word << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++have == 6) {
                out.push_back(static_cast<char>(word + 63));
                have = 0;
                word = 0;
            }
        }
    if (have > 0) out.push_back(static_cast<char>((word << (6 - have)) + 63));
    return out;
}

Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long long n = -1, declared_m = -1;
    std::vector<std::pair<int, int>> edges;
    std::size_t offset = 0;
    while (std::getline(in, line)) {
        std::size_t line_start = offset;
        offset += line.size() + 1;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> declared_m) || fmt != "edge" || n < 0)
                throw ParseError("malformed problem line: " + line, line_start);
            if (n > 64) throw ParseError("graph has more than 64 vertices", line_start);
        } else if (tag == "e") {
            if (n < 0) throw ParseError("edge before problem line", line_start);
            long long u, v;
            if (!(ls >> u >> v)) throw ParseError("malformed edge line: " + line, line_start);
            if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_start);
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError("edge endpoint out of range: " + line, line_start);
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            throw ParseError("unrecognized line: " + line, line_start);
        }
    }
    if (n < 0) throw ParseError("missing problem line", 0);
    return Graph(static_cast<int>(n), edges);
}

std::string serialize_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << (u + 1) << " " << (v + 1) << "\n";
    return out.str();
}

}  // namespace minors
