#include "critideal/graph.hpp"

#include <algorithm>
#include <bit>

namespace critideal {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(std::max(n, 0))) {
    if (n < 0 || n > kMaxVertices)
        throw CapacityError("graph order must be between 0 and 64, got " + std::to_string(n));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                                    std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj_[u] |= VertexSet{1} << v;
    adj_[v] |= VertexSet{1} << u;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += std::popcount(adj_[v]);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph trivial_graph(int n) { return Graph(n); }

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("multipartite graph needs at least one part");
    int n = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("part sizes must be nonnegative");
        n += p;
    }
    Graph g(n);
    int start = 0;
    std::vector<std::pair<int, int>> ranges;
    for (int p : parts) {
        ranges.emplace_back(start, start + p);
        start += p;
    }
    for (size_t a = 0; a < ranges.size(); ++a)
        for (size_t b = a + 1; b < ranges.size(); ++b)
            for (int u = ranges[a].first; u < ranges[a].second; ++u)
                for (int v = ranges[b].first; v < ranges[b].second; ++v) g.add_edge(u, v);
    return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int n = g.order() + h.order();
    if (n > kMaxVertices) throw CapacityError("union exceeds 64 vertices");
    Graph out(n);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
    return out;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    if (s & ~g.full_set())
        throw std::invalid_argument("vertex set contains vertices outside the graph");
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v)
        if ((s >> v) & 1) keep.push_back(v);
    Graph out(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            if (g.has_edge(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
    return induced_subgraph(g, g.full_set() & ~(VertexSet{1} << v));
}

bool is_connected(const Graph& g) {
    int n = g.order();
    if (n <= 1) return true;
    VertexSet seen = 1, frontier = 1;
    while (frontier) {
        VertexSet next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.neighbors(v) & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen == g.full_set();
}

std::vector<int> degree_vector(const Graph& g) {
    std::vector<int> d(g.order());
    for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
    return d;
}

namespace {

// Max clique over candidate set by branch and bound with greedy bound.
void clique_search(const Graph& g, VertexSet cand, int size, int& best) {
    if (size + std::popcount(cand) <= best) return;
    if (!cand) {
        best = std::max(best, size);
        return;
    }
    while (cand) {
        if (size + std::popcount(cand) <= best) return;
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        clique_search(g, cand & g.neighbors(v), size + 1, best);
    }
}

}  // namespace

int clique_number(const Graph& g) {
    if (g.order() == 0) return 0;
    int best = 0;
    clique_search(g, g.full_set(), 0, best);
    return best;
}

int stability_number(const Graph& g) {
    // Stable sets are cliques in the complement.
    Graph comp(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) comp.add_edge(u, v);
    return clique_number(comp);
}

std::optional<std::vector<int>> contains_induced(const Graph& pattern, const Graph& host) {
    int k = pattern.order(), m = host.order();
    if (k > m) return std::nullopt;
    if (k == 0) return std::vector<int>{};

    // Pattern vertices by descending degree, ties by index.
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = pattern.degree(a), db = pattern.degree(b);
        return da != db ? da > db : a < b;
    });

    std::vector<int> image(k, -1);  // pattern vertex -> host vertex
    VertexSet used = 0;

    auto candidates = [&](int depth) {
        int u = order[depth];
        VertexSet cand = host.full_set() & ~used;
        for (int d = 0; d < depth; ++d) {
            int w = order[d];
            VertexSet nb = host.neighbors(image[w]);
            cand &= pattern.has_edge(u, w) ? nb : ~nb;
        }
        return cand;
    };

    std::vector<VertexSet> stack(k);
    int depth = 0;
    stack[0] = candidates(0);
    while (depth >= 0) {
        VertexSet& cand = stack[depth];
        int u = order[depth];
        bool advanced = false;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            if (host.degree(v) < pattern.degree(u)) continue;
            image[u] = v;
            if (depth + 1 == k) return image;
            used |= VertexSet{1} << v;
            ++depth;
            stack[depth] = candidates(depth);
            advanced = true;
            break;
        }
        if (!advanced) {
            --depth;
            if (depth >= 0) {
                used &= ~(VertexSet{1} << image[order[depth]]);
            }
        }
    }
    return std::nullopt;
}

}  // namespace critideal
