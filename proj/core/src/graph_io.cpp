#include "jfish/graph_io.hpp"

#include <cctype>
#include <vector>

namespace jfish {

namespace {

// Strip trailing newline/space so "D??\n" round-trips.
std::string_view trimmed(std::string_view text) {
    std::size_t end = text.size();
    while (end > 0 && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    std::size_t begin = 0;
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    return text.substr(begin, end - begin);
}

} // namespace

Graph parse_graph6(std::string_view raw) {
    std::size_t lead = 0;
    while (lead < raw.size() && std::isspace(static_cast<unsigned char>(raw[lead]))) ++lead;
    std::string_view text = trimmed(raw);
    if (text.empty()) throw ParseError("empty graph6 input", 0);

    std::size_t pos = 0;
    auto next_byte = [&]() -> int {
        if (pos >= text.size())
            throw ParseError("truncated graph6 input", lead + pos);
        unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126)
            throw ParseError("byte outside graph6 alphabet", lead + pos);
        ++pos;
        return c - 63;
    };

    long n;
    int first = next_byte();
    if (first < 63) {
        n = first;
    } else {
        // 126 escape: three more bytes of 18-bit order. The 258048+ form is
        // beyond the vertex capacity anyway, so 126 126 is rejected up front.
        int b1 = next_byte();
        if (b1 >= 63) throw ParseError("graph order exceeds supported range", lead + 1);
        int b2 = next_byte();
        int b3 = next_byte();
        n = (static_cast<long>(b1) << 12) | (b2 << 6) | b3;
    }
    if (n > kMaxVertices)
        throw ParseError("graph order exceeds vertex capacity", 0);

    Graph g(static_cast<int>(n));
    long bits_needed = n * (n - 1) / 2;
    int cur = 0, bits_left = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (bits_left == 0) {
                cur = next_byte();
                bits_left = 6;
            }
            if ((cur >> (bits_left - 1)) & 1) g.add_edge(row, col);
            --bits_left;
        }
    }
    // Padding bits of the last group must be zero, and nothing may follow.
    if (bits_left > 0 && (cur & ((1 << bits_left) - 1)) != 0)
        throw ParseError("nonzero padding bits", lead + pos - 1);
    if (pos != text.size())
        throw ParseError("trailing bytes after graph6 data", lead + pos);
    (void)bits_needed;
    return g;
}

std::string encode_graph6(const Graph& g) {
    std::string out;
    int n = g.n();
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int cur = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            cur = (cur << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + cur));
                cur = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (cur << (6 - nbits))));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    struct Tok {
        long value;
        std::size_t offset;
    };
    std::vector<Tok> toks;
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (!std::isdigit(c))
            throw ParseError("expected vertex id", i);
        std::size_t start = i;
        long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > kMaxVertices) throw ParseError("vertex id exceeds capacity", start);
            ++i;
        }
        toks.push_back({v, start});
    }
    if (toks.empty()) throw ParseError("empty edge list", 0);
    if (toks.size() % 2 != 0)
        throw ParseError("odd number of endpoints", toks.back().offset);

    long n = 0;
    for (const auto& t : toks)
        if (t.value + 1 > n) n = t.value + 1;
    if (n > kMaxVertices) throw ParseError("vertex id exceeds capacity", 0);

    Graph g(static_cast<int>(n));
    for (std::size_t k = 0; k + 1 < toks.size(); k += 2) {
        int u = static_cast<int>(toks[k].value);
        int v = static_cast<int>(toks[k + 1].value);
        if (u == v) throw ParseError("loop edge rejected", toks[k].offset);
        if (g.has_edge(u, v)) throw ParseError("repeated edge rejected", toks[k].offset);
        g.add_edge(u, v);
    }
    return g;
}

std::string encode_edge_list(const Graph& g) {
    std::string out;
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out.push_back(' ');
        out += std::to_string(v);
        out.push_back('\n');
    }
    return out;
}

std::string encode_dot(const Graph& g) {
    std::string out = "graph G {\n";
    for (int v = 0; v < g.n(); ++v)
        out += "  " + std::to_string(v) + ";\n";
    for (auto [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    if (format == GraphFormat::Graph6) return parse_graph6(text);
    if (format == GraphFormat::EdgeList) return parse_edge_list(text);
    std::string_view t = trimmed(text);
    if (t.empty()) throw ParseError("empty input", 0);
    // Edge lists consist of digits and whitespace with at least two tokens;
    // anything else is taken as graph6.
    bool digits_only = true;
    bool has_space = false;
    for (char c : t) {
        unsigned char u = static_cast<unsigned char>(c);
        if (std::isspace(u))
            has_space = true;
        else if (!std::isdigit(u))
            digits_only = false;
    }
    if (digits_only && has_space) return parse_edge_list(text);
    return parse_graph6(text);
}

} // namespace jfish
