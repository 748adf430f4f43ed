#include "critideal/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace critideal {

namespace {

// Upper-triangle bitstrings fit in 128 bits for n <= 12 (66 bits at n=12).
using Bits = unsigned __int128;

struct CanonState {
    const Graph* g;
    int n;
    int total_bits;
    Bits best;
    bool have_best;
    std::vector<int> perm;  // position -> original vertex
};

// Column bits contributed by placing vertex v at position depth:
// adjacency to the vertices already placed, earliest position first.
Bits column_bits(const CanonState& st, int depth, int v) {
    Bits col = 0;
    for (int i = 0; i < depth; ++i) col = (col << 1) | (st.g->has_edge(st.perm[i], v) ? 1 : 0);
    return col;
}

void canon_search(CanonState& st, int depth, Bits prefix, int prefix_bits, VertexSet remaining) {
    if (!remaining) {
        if (!st.have_best || prefix < st.best) {
            st.best = prefix;
            st.have_best = true;
        }
        return;
    }
    // Candidates sorted by their column contribution; smallest first drives
    // toward the minimum and makes pruning effective.
    std::vector<std::pair<Bits, int>> cands;
    for (VertexSet r = remaining; r;) {
        int v = std::countr_zero(r);
        r &= r - 1;
        cands.emplace_back(column_bits(st, depth, v), v);
    }
    std::sort(cands.begin(), cands.end());
    for (auto& [col, v] : cands) {
        Bits next = (prefix << depth) | col;
        int next_bits = prefix_bits + depth;
        if (st.have_best) {
            // Candidates are sorted, so once the prefix exceeds the best
            // everything after it does too.
            Bits best_prefix = st.best >> (st.total_bits - next_bits);
            if (next > best_prefix) break;
        }
        st.perm[depth] = v;
        canon_search(st, depth + 1, next, next_bits, remaining & ~(VertexSet{1} << v));
    }
}

std::string pack_form(int n, Bits bits, int total_bits) {
    std::string out;
    out.push_back(static_cast<char>(n));
    int nbytes = (total_bits + 7) / 8;
    // MSB-first: first pair occupies the high bit of the first byte.
    Bits shifted = bits << (nbytes * 8 - total_bits);
    for (int i = nbytes - 1; i >= 0; --i)
        out.push_back(static_cast<char>((shifted >> (8 * i)) & 0xFF));
    return out;
}

}  // namespace

std::string canonical_form(const Graph& g) {
    int n = g.order();
    if (n > kCanonicalCap)
        throw CapacityError("canonical_form supports at most " + std::to_string(kCanonicalCap) +
                            " vertices, got " + std::to_string(n));
    if (n <= 1) return pack_form(n, 0, 0);
    CanonState st{&g, n, n * (n - 1) / 2, 0, false, std::vector<int>(n)};
    canon_search(st, 0, 0, 0, g.full_set());
    return pack_form(n, st.best, st.total_bits);
}

Graph graph_from_canonical_form(const std::string& form) {
    if (form.empty()) throw std::invalid_argument("empty canonical form");
    int n = static_cast<unsigned char>(form[0]);
    int total_bits = n * (n - 1) / 2;
    if (static_cast<int>(form.size()) != 1 + (total_bits + 7) / 8)
        throw std::invalid_argument("canonical form has wrong length");
    Graph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = 1 + bit / 8;
            int shift = 7 - bit % 8;
            if ((static_cast<unsigned char>(form[byte]) >> shift) & 1) g.add_edge(i, j);
        }
    return g;
}

std::string canonical_hex(const Graph& g) {
    static const char* digits = "0123456789abcdef";
    std::string form = canonical_form(g), out;
    for (unsigned char c : form) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xF]);
    }
    return out;
}

std::vector<Graph> enumerate_connected(int n) {
    if (n < 1 || n > kEnumerateCap)
        throw CapacityError("enumerate_connected supports 1 to " + std::to_string(kEnumerateCap) +
                            " vertices");
    int nbits = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

    std::set<std::string> forms;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nbits); ++mask) {
        Graph g(n);
        for (int b = 0; b < nbits; ++b)
            if ((mask >> b) & 1) g.add_edge(pairs[b].first, pairs[b].second);
        if (!is_connected(g)) continue;
        forms.insert(canonical_form(g));
    }

    std::vector<Graph> out;
    out.reserve(forms.size());
    for (const auto& f : forms) out.push_back(graph_from_canonical_form(f));
    return out;
}

}  // namespace critideal
