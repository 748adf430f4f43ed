#pragma once

#include <string>
#include <vector>

#include "critideal/critical.hpp"
#include "critideal/families.hpp"
#include "critideal/graph.hpp"

namespace critideal {

struct SearchOptions {
    int jobs = 1;
    std::string checkpoint_path;  // empty = no checkpointing
    bool prune = true;
    GbBudget budget;
};

struct SearchHit {
    std::string graph6;
    int gamma = 0;
    bool gamma_critical = false;
};

struct SearchReport {
    long processed = 0;
    long skipped_by_pruning = 0;
    long skipped_by_checkpoint = 0;
    std::vector<SearchHit> hits;
};

// Minimal forbidden graphs for gamma <= k in the stream: gamma(g) >= k+1
// and gamma(g - v) <= k for every v. Graphs containing an already-found
// smaller hit are skipped (they cannot be minimal) but still counted.
// Deterministic output order regardless of jobs.
SearchReport find_minimal_forbidden(const std::vector<Graph>& stream, int k,
                                    const SearchOptions& options = {});

struct VerifyReport {
    long checked = 0;
    std::vector<std::string> counterexamples;  // graph6
};

// For every connected graph with <= n_max vertices and clique number omega:
// F3-freeness must coincide with membership in F2 (omega 2) or F1 (omega 3).
VerifyReport verify_omega_classification(int n_max, int omega, const SearchOptions& options = {});

// For every connected graph with <= n_max vertices: gamma <= 3 must
// coincide with F3-freeness. gamma is always computed definitionally here;
// no freeness pre-filter, to keep the check non-circular.
VerifyReport verify_gamma_equals_f3_free(int n_max, const SearchOptions& options = {});

// One graph per non-empty line; '#' starts a comment line.
std::vector<Graph> read_graph6_lines(const std::string& path);

}  // namespace critideal
