#pragma once

#include <vector>

#include "critideal/graph.hpp"
#include "critideal/groebner.hpp"
#include "critideal/polynomial.hpp"
#include "critideal/zlinalg.hpp"

namespace critideal {

// L(G, X): x_u on the diagonal, -1 at adjacent pairs, 0 elsewhere.
struct SymbolicLaplacian {
    Graph graph;
    Ring ring;  // one variable per vertex
    std::vector<std::vector<Polynomial>> entries;
};

SymbolicLaplacian symbolic_laplacian(const Graph& g);

// All i x i minors of L(G, X): zero determinants dropped, duplicates
// removed after sign normalization, row and column subsets in
// lexicographic order.
std::vector<Polynomial> critical_ideal_generators(const Graph& g, int i);

bool critical_ideal_trivial(const Graph& g, int i, const GbBudget& budget = {});

struct GammaReport {
    int gamma = 0;
    bool connected = true;
    struct IndexVerdict {
        int index;
        bool trivial;
        DecisionPath path;
    };
    std::vector<IndexVerdict> per_index;
};

// Number of trivial critical ideals; computed incrementally and stopped at
// the first nontrivial index (triviality is downward closed since the
// (i+1)-minors expand over i-minors). exhaustive keeps going through i = n
// for auditing.
GammaReport gamma(const Graph& g, const GbBudget& budget = {}, bool exhaustive = false);

bool is_gamma_critical(const Graph& g, const GbBudget& budget = {});

// Per-vertex nonzero weights: negative = clique part, positive = stable-set
// part of the blow-up.
using WeightVector = std::vector<int>;

// Componentwise {d_v > 0 -> 0, d_v < 0 -> -1}.
std::vector<int> phi(const WeightVector& d);

Graph blowup(const Graph& g, const WeightVector& d);

// Triviality of the j-th critical ideal of the blow-up, decided on the
// underlying graph alone. Variables of parts with |d_v| >= 2 are evaluated
// at phi(d)_v (those parts create twins); size-one parts stay symbolic.
// With every part wide this is a pure integer computation: the j-th
// determinantal divisor of L(G, phi(d)) must be 1.
bool blowup_ideal_trivial(const Graph& g, const WeightVector& d, int j);

}  // namespace critideal
