#include "critideal/graph.hpp"

namespace critideal {

namespace {

[[noreturn]] void bad(const std::string& text, size_t pos, const std::string& why) {
    throw std::invalid_argument("invalid graph6 \"" + text + "\" at position " +
                                std::to_string(pos) + ": " + why);
}

int sextet(const std::string& text, size_t pos) {
    if (pos >= text.size()) bad(text, pos, "unexpected end of input");
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) bad(text, pos, "byte outside printable graph6 range");
    return c - 63;
}

}  // namespace

Graph parse_graph6(const std::string& text) {
    if (text.empty()) bad(text, 0, "empty string");
    size_t pos = 0;
    long n;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~') bad(text, 1, "256-bit sizes are not supported");
        // Long form: '~' then three sextets, big-endian.
        n = 0;
        for (pos = 1; pos <= 3; ++pos) n = n * 64 + sextet(text, pos);
        if (n < 63) bad(text, 1, "long-form header used for a small graph");
    } else {
        n = sextet(text, 0);
        pos = 1;
    }
    if (n > kMaxVertices)
        throw CapacityError("graph6 string encodes " + std::to_string(n) +
                            " vertices, limit is 64");

    Graph g(static_cast<int>(n));
    long nbits = n * (n - 1) / 2;
    long nchars = (nbits + 5) / 6;
    if (static_cast<long>(text.size()) - static_cast<long>(pos) != nchars) {
        if (static_cast<long>(text.size()) - static_cast<long>(pos) > nchars)
            bad(text, pos + nchars, "trailing garbage after adjacency data");
        bad(text, text.size(), "truncated adjacency data");
    }
    long bit = 0;
    int u = 0, v = 1;
    for (long k = 0; k < nchars; ++k) {
        int val = sextet(text, pos + k);
        for (int s = 5; s >= 0; --s, ++bit) {
            if (bit >= nbits) {
                if ((val >> s) & 1) bad(text, pos + k, "nonzero padding bits");
                continue;
            }
            if ((val >> s) & 1) g.add_edge(u, v);
            if (++u == v) {
                u = 0;
                ++v;
            }
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + (n >> 12)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int val = 0, s = 5;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (g.has_edge(u, v)) val |= 1 << s;
            if (--s < 0) {
                out.push_back(static_cast<char>(63 + val));
                val = 0;
                s = 5;
            }
        }
    if (s != 5) out.push_back(static_cast<char>(63 + val));
    return out;
}

}  // namespace critideal
