#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace critideal {

// Thrown when an operation would exceed a hard structural limit
// (vertex capacity, canonical-form cap, enumeration cap).
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kMaxVertices = 64;

using VertexSet = std::uint64_t;  // bit i set <=> vertex i in the set

// Simple undirected graph on at most 64 vertices.
// Adjacency rows are single machine words; no loops, symmetric.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
    VertexSet neighbors(int v) const { return adj_[v]; }
    int degree(int v) const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    void add_edge(int u, int v);
    VertexSet full_set() const { return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1; }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;

    void check_vertex(int v) const;
};

// Named constructors.
Graph complete(int n);
Graph trivial_graph(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete_multipartite(const std::vector<int>& parts);

Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

// Vertices of the result are relabeled in ascending original-index order.
Graph induced_subgraph(const Graph& g, VertexSet s);
Graph delete_vertex(const Graph& g, int v);

bool is_connected(const Graph& g);
int clique_number(const Graph& g);
int stability_number(const Graph& g);
std::vector<int> degree_vector(const Graph& g);

// Injective map m with pattern[i]~pattern[j] <=> host[m[i]]~host[m[j]],
// or nullopt when no induced copy of pattern exists in host.
std::optional<std::vector<int>> contains_induced(const Graph& pattern, const Graph& host);

// Lexicographically minimal upper-triangle adjacency bitstring over all
// vertex permutations, prefixed by the vertex count. Equal strings <=>
// isomorphic graphs. Branch-and-bound; capped at 12 vertices.
inline constexpr int kCanonicalCap = 12;
std::string canonical_form(const Graph& g);
Graph graph_from_canonical_form(const std::string& form);
std::string canonical_hex(const Graph& g);

// graph6 text format, bit-exact per the published specification.
Graph parse_graph6(const std::string& text);
std::string write_graph6(const Graph& g);

// One representative per isomorphism class of connected graphs on n
// vertices (n <= 7), deduplicated via canonical_form and emitted in
// canonical-form order.
inline constexpr int kEnumerateCap = 7;
std::vector<Graph> enumerate_connected(int n);

}  // namespace critideal
