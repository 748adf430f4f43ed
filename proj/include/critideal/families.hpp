#pragma once

#include <optional>
#include <string>
#include <vector>

#include "critideal/critical.hpp"
#include "critideal/graph.hpp"

namespace critideal {

// A graph family given by an underlying graph whose vertices expand to
// cliques (sign -1), stable sets (sign +1) or stay single (sign 0). The
// parameter slots are the non-singleton vertices in vertex order.
struct FamilyTemplate {
    std::string name;
    Graph underlying;
    std::vector<int> signs;

    int slot_count() const;
};

// Blow-up of the underlying graph with the given per-slot part sizes;
// singleton vertices keep size 1.
Graph instantiate(const FamilyTemplate& tmpl, const std::vector<int>& sizes);

// The classification families: F1 covers clique number 3 (prism G1, the
// seven-slot family F1_1, and the hub-parameterized wheel F1_2); F2 covers
// clique number 2 (complete bipartite plus three path/cycle shapes).
const std::vector<FamilyTemplate>& f1_templates();
const std::vector<FamilyTemplate>& f2_templates();

// Underlying graphs of F1_1 and F1_2 on their fixed vertex order.
Graph f1_1_underlying();
Graph f1_2_underlying();
Graph g1_prism();

struct F3Member {
    std::string name;
    Graph graph;
};

// The 49-member forbidden family: P5, 27 graphs on 6 vertices, 17 on 7 and
// 4 on 8, frozen as graph6 fixtures and guarded by the gamma = 4 /
// gamma-critical self-check in the test suite.
const std::vector<F3Member>& f3_members();

struct F3Witness {
    std::string name;
    std::vector<int> injection;  // member vertex -> host vertex
};

// First family member (in fixture order) occurring in g as an induced
// subgraph; absent exactly when g is F3-free.
std::optional<F3Witness> f3_free(const Graph& g);

struct FamilyWitness {
    std::string template_name;
    std::vector<int> injection;  // g vertex -> instance vertex
};

// Is g an induced subgraph of some instance of one of the templates?
// Capping every part at |V(g)| is enough: an induced embedding never needs
// more vertices of a part than g has.
std::optional<FamilyWitness> family_member(const Graph& g,
                                           const std::vector<FamilyTemplate>& templates);

}  // namespace critideal
