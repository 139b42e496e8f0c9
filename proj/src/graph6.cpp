#include "folkman/graph6.hpp"

#include <sstream>

namespace folkman {

namespace {

constexpr char kOffset = 63;

void append_bits(std::string& out, int& bit_pos, unsigned char& acc, bool bit) {
    acc = static_cast<unsigned char>((acc << 1) | (bit ? 1 : 0));
    if (++bit_pos == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        bit_pos = 0;
        acc = 0;
    }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kOffset));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kOffset));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kOffset));
        out.push_back(static_cast<char>((n & 0x3f) + kOffset));
    }
    int bit_pos = 0;
    unsigned char acc = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) append_bits(out, bit_pos, acc, g.has_edge(i, j));
    if (bit_pos > 0) {
        acc = static_cast<unsigned char>(acc << (6 - bit_pos));
        out.push_back(static_cast<char>(acc + kOffset));
    }
    return out;
}

Graph graph6_decode(const std::string& s) {
    std::size_t pos = 0;
    const std::string prefix = ">>graph6<<";
    if (s.rfind(prefix, 0) == 0) pos = prefix.size();
    if (pos >= s.size()) throw ParseError("empty graph6 string", pos);

    auto byte_at = [&](std::size_t i) -> int {
        unsigned char ch = static_cast<unsigned char>(s[i]);
        if (ch < kOffset || ch > 126)
            throw ParseError("byte outside the printable graph6 range", i);
        return ch - kOffset;
    };

    long long n;
    if (s[pos] != '~') {
        n = byte_at(pos);
        ++pos;
    } else {
        if (pos + 1 < s.size() && s[pos + 1] == '~')
            throw ParseError("8-byte size header exceeds the supported order", pos);
        if (pos + 4 > s.size()) throw ParseError("truncated size header", s.size());
        n = 0;
        for (int k = 1; k <= 3; ++k) n = (n << 6) | byte_at(pos + k);
        pos += 4;
    }
    if (n > VertexSet::max_vertices)
        throw ParseError("graph order " + std::to_string(n) + " exceeds the supported " +
                             std::to_string(VertexSet::max_vertices),
                         pos - 1);

    const long long bits_needed = n * (n - 1) / 2;
    const long long bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<long long>(s.size() - pos) < bytes_needed)
        throw ParseError("truncated adjacency payload", s.size());
    if (static_cast<long long>(s.size() - pos) > bytes_needed)
        throw ParseError("trailing data after adjacency payload", pos + bytes_needed);

    Graph g(static_cast<int>(n));
    long long bit_index = 0;
    int i = 0, j = 1;  // column-major upper-triangle walk
    for (long long b = 0; b < bytes_needed; ++b) {
        int word = byte_at(pos + b);
        for (int k = 5; k >= 0; --k, ++bit_index) {
            bool bit = (word >> k) & 1;
            if (bit_index >= bits_needed) {
                if (bit) throw ParseError("nonzero padding bit", pos + b);
                continue;
            }
            if (bit) g.add_edge(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return g;
}

std::string export_dimacs_col(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

}  // namespace folkman
