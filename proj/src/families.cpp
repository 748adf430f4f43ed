#include "critideal/families.hpp"

#include <algorithm>

namespace critideal {

namespace {

Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

// graph6 fixtures for the forbidden family, expanded per the blow-up
// convention (clique parts of size 2, stable parts of size 2, singletons).
struct F3Fixture {
    const char* name;
    const char* g6;
};

const F3Fixture kF3Fixtures[] = {
    {"P5", "DhC"},
    {"G6_1", "E?ow"},
    {"G6_2", "E?qw"},
    {"G6_3", "E?ro"},
    {"G6_4", "E?rw"},
    {"G6_5", "E?zW"},
    {"G6_6", "E_Jo"},
    {"G6_7", "ECZg"},
    {"G6_8", "ECqg"},
    {"G6_9", "ECr_"},
    {"G6_10", "ECrg"},
    {"G6_11", "ECro"},
    {"G6_12", "ECrw"},
    {"G6_13", "E_zw"},
    {"G6_14", "ECzW"},
    {"G6_15", "ECzo"},
    {"G6_16", "ECzw"},
    {"G6_17", "EEno"},
    {"G6_18", "EEnw"},
    {"G6_19", "EEuw"},
    {"G6_20", "E`zW"},
    {"G6_21", "EQzO"},
    {"G6_22", "EQzW"},
    {"G6_23", "Eezw"},
    {"G6_24", "EUzW"},
    {"G6_25", "EUzo"},
    {"G6_26", "EUzw"},
    {"G6_27", "EU~w"},
    {"G7_1", "F`?Fw"},
    {"G7_2", "F_Bvo"},
    {"G7_3", "FEr^w"},
    {"G7_4", "FEv^o"},
    {"G7_5", "FEvvo"},
    {"G7_6", "FEv~w"},
    {"G7_7", "F_zn_"},
    {"G7_8", "FEvew"},
    {"G7_9", "FEzn?"},
    {"G7_10", "FEzfW"},
    {"G7_11", "FE~vg"},
    {"G7_12", "FE~vw"},
    {"G7_13", "FFzeo"},
    {"G7_14", "FKffG"},
    {"G7_15", "Fezvg"},
    {"G7_16", "Ff~fw"},
    {"G7_17", "F^r~w"},
    {"G8_1", "GGF~~o"},
    {"G8_2", "G_F~v{"},
    {"G8_3", "G@~~f_"},
    {"G8_4", "G]~v~{"},
};

}  // namespace

int FamilyTemplate::slot_count() const {
    return static_cast<int>(std::count_if(signs.begin(), signs.end(), [](int s) { return s != 0; }));
}

Graph f1_1_underlying() {
    // Three stable slots (vertices 0-2) each adjacent to the other two and
    // to two of the outer clique slots; slot 6 is the center adjacent to
    // the other clique slots.
    return from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {1, 5}, {2, 3}, {2, 5},
                          {3, 6}, {4, 6}, {5, 6}});
}

Graph f1_2_underlying() {
    // Wheel: hub 0 joined to a 5-cycle.
    return from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                          {5, 1}});
}

Graph g1_prism() {
    return from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
}

const std::vector<FamilyTemplate>& f1_templates() {
    static const std::vector<FamilyTemplate> families = {
        {"G1", g1_prism(), {0, 0, 0, 0, 0, 0}},
        {"F1_1", f1_1_underlying(), {1, 1, 1, -1, -1, -1, -1}},
        {"F1_2", f1_2_underlying(), {1, 0, 0, 0, 0, 0}},
    };
    return families;
}

const std::vector<FamilyTemplate>& f2_templates() {
    static const std::vector<FamilyTemplate> families = {
        {"K_n1_n2", from_edges(2, {{0, 1}}), {1, 1}},
        {"F2_1", from_edges(4, {{0, 1}, {1, 2}, {2, 3}}), {1, 1, 0, 0}},
        {"F2_2", from_edges(4, {{0, 1}, {0, 3}, {1, 2}}), {1, 1, 0, 0}},
        {"F2_3", from_edges(5, {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}), {1, 1, 0, 0, 0}},
    };
    return families;
}

Graph instantiate(const FamilyTemplate& tmpl, const std::vector<int>& sizes) {
    if (static_cast<int>(sizes.size()) != tmpl.slot_count())
        throw std::invalid_argument("template " + tmpl.name + " takes " +
                                    std::to_string(tmpl.slot_count()) + " sizes, got " +
                                    std::to_string(sizes.size()));
    WeightVector d(tmpl.signs.size(), 1);
    size_t next = 0;
    for (size_t v = 0; v < tmpl.signs.size(); ++v) {
        if (tmpl.signs[v] == 0) continue;
        int s = sizes[next++];
        if (s < 1) throw std::invalid_argument("part sizes must be positive");
        d[v] = tmpl.signs[v] * s;
    }
    return blowup(tmpl.underlying, d);
}

const std::vector<F3Member>& f3_members() {
    static const std::vector<F3Member> members = [] {
        std::vector<F3Member> out;
        for (const auto& fx : kF3Fixtures) out.push_back({fx.name, parse_graph6(fx.g6)});
        return out;
    }();
    return members;
}

std::optional<F3Witness> f3_free(const Graph& g) {
    for (const auto& member : f3_members()) {
        if (member.graph.order() > g.order()) continue;
        if (auto inj = contains_induced(member.graph, g)) return F3Witness{member.name, *inj};
    }
    return std::nullopt;
}

std::optional<FamilyWitness> family_member(const Graph& g,
                                           const std::vector<FamilyTemplate>& templates) {
    int cap = std::max(1, g.order());
    for (const auto& tmpl : templates) {
        std::vector<int> sizes(static_cast<size_t>(tmpl.slot_count()), cap);
        long total = 0;
        for (int s : tmpl.signs) total += s == 0 ? 1 : cap;
        if (total > kMaxVertices)
            throw CapacityError("capped instance of " + tmpl.name + " exceeds 64 vertices");
        Graph instance = instantiate(tmpl, sizes);
        if (auto inj = contains_induced(g, instance)) return FamilyWitness{tmpl.name, *inj};
    }
    return std::nullopt;
}

}  // namespace critideal
