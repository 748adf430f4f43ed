#include "critideal/critical.hpp"

#include <algorithm>
#include <set>

namespace critideal {

SymbolicLaplacian symbolic_laplacian(const Graph& g) {
    int n = g.order();
    SymbolicLaplacian out{g, Ring{n}, {}};
    out.entries.assign(size_t(n), std::vector<Polynomial>(size_t(n), Polynomial(out.ring)));
    for (int u = 0; u < n; ++u) {
        out.entries[size_t(u)][size_t(u)] = Polynomial::variable(out.ring, u);
        for (int v = 0; v < n; ++v)
            if (u != v && g.has_edge(u, v))
                out.entries[size_t(u)][size_t(v)] = Polynomial(out.ring, -1);
    }
    return out;
}

namespace {

// Next k-subset of {0..n-1} in lexicographic order; false when done.
bool next_subset(std::vector<int>& s, int n) {
    int k = static_cast<int>(s.size());
    for (int i = k - 1; i >= 0; --i) {
        if (s[size_t(i)] < n - k + i) {
            ++s[size_t(i)];
            for (int j = i + 1; j < k; ++j) s[size_t(j)] = s[size_t(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

std::vector<int> first_subset(int k) {
    std::vector<int> s(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) s[size_t(i)] = i;
    return s;
}

// Enumerates minors in (row-subset, column-subset) lexicographic order.
// Returns true and stops early if a unit constant minor shows up and
// stop_on_unit is set; gens then holds whatever was collected so far.
bool enumerate_minors(const Graph& g, int i, bool stop_on_unit, std::vector<Polynomial>& gens) {
    int n = g.order();
    if (i < 1 || i > n) throw std::invalid_argument("critical ideal index out of range");
    SymbolicLaplacian sl = symbolic_laplacian(g);
    std::set<Polynomial> seen;
    std::vector<std::vector<Polynomial>> sub(static_cast<size_t>(i), std::vector<Polynomial>(static_cast<size_t>(i)));

    std::vector<int> rows = first_subset(i);
    do {
        std::vector<int> cols = first_subset(i);
        do {
            for (int r = 0; r < i; ++r)
                for (int c = 0; c < i; ++c)
                    sub[size_t(r)][size_t(c)] =
                        sl.entries[size_t(rows[size_t(r)])][size_t(cols[size_t(c)])];
            Polynomial det = symbolic_determinant(sub);
            if (det.is_zero()) continue;
            if (stop_on_unit && det.is_unit()) return true;
            det = det.sign_normalized();
            if (seen.insert(det).second) gens.push_back(std::move(det));
        } while (next_subset(cols, n));
    } while (next_subset(rows, n));
    return false;
}

}  // namespace

std::vector<Polynomial> critical_ideal_generators(const Graph& g, int i) {
    std::vector<Polynomial> gens;
    enumerate_minors(g, i, false, gens);
    return gens;
}

namespace {

// {0,-1}-valued evaluation points aligned with the twin structure of g:
// vertices sharing an open neighborhood take 0, vertices sharing a closed
// neighborhood take -1, and the loose vertices sweep both values (capped).
// Sound regardless of structure; decisive on blow-ups, where the per-part
// pattern is the point that exposes a nontrivial evaluation.
std::vector<std::vector<long>> twin_pattern_points(const Graph& g) {
    int n = g.order();
    std::vector<long> forced(static_cast<size_t>(n), 2);  // 2 = unconstrained
    std::vector<bool> done(static_cast<size_t>(n), false);
    std::vector<int> loose;
    for (int u = 0; u < n; ++u) {
        if (done[size_t(u)]) continue;
        std::vector<int> open{u}, closed{u};
        for (int v = u + 1; v < n; ++v) {
            if (done[size_t(v)]) continue;
            if (g.neighbors(v) == g.neighbors(u)) open.push_back(v);
            VertexSet cu = g.neighbors(u) | (VertexSet{1} << u);
            VertexSet cv = g.neighbors(v) | (VertexSet{1} << v);
            if (cu == cv) closed.push_back(v);
        }
        const std::vector<int>& cls = open.size() >= closed.size() ? open : closed;
        long value = open.size() >= closed.size() ? 0 : -1;
        if (cls.size() >= 2) {
            for (int v : cls) {
                forced[size_t(v)] = value;
                done[size_t(v)] = true;
            }
        } else {
            loose.push_back(u);
            done[size_t(u)] = true;
        }
    }
    std::vector<std::vector<long>> points;
    if (loose.size() <= 10) {
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << loose.size()); ++mask) {
            std::vector<long> p = forced;
            for (size_t b = 0; b < loose.size(); ++b)
                p[size_t(loose[b])] = (mask >> b) & 1 ? -1 : 0;
            points.push_back(std::move(p));
        }
    } else {
        for (long fill : {0L, -1L}) {
            std::vector<long> p = forced;
            for (int v : loose) p[size_t(v)] = fill;
            points.push_back(std::move(p));
        }
    }
    return points;
}

TrivialityVerdict critical_ideal_verdict(const Graph& g, int i, const GbBudget& budget) {
    std::vector<Polynomial> gens;
    if (enumerate_minors(g, i, true, gens)) return {true, DecisionPath::UnitMinor};
    std::vector<int> degs = degree_vector(g);
    std::vector<std::vector<long>> extra{{degs.begin(), degs.end()}};
    for (auto& p : twin_pattern_points(g)) extra.push_back(std::move(p));
    return is_trivial_with_path(gens, extra, budget);
}

}  // namespace

bool critical_ideal_trivial(const Graph& g, int i, const GbBudget& budget) {
    return critical_ideal_verdict(g, i, budget).trivial;
}

GammaReport gamma(const Graph& g, const GbBudget& budget, bool exhaustive) {
    GammaReport report;
    report.connected = is_connected(g);
    int n = g.order();
    bool still_trivial = true;
    for (int i = 1; i <= n; ++i) {
        TrivialityVerdict v;
        try {
            v = critical_ideal_verdict(g, i, budget);
        } catch (const BudgetExhausted& e) {
            throw BudgetExhausted(std::string(e.what()) + " (critical ideal index " +
                                  std::to_string(i) + ")");
        }
        report.per_index.push_back({i, v.trivial, v.path});
        if (v.trivial && still_trivial) {
            report.gamma = i;
        } else {
            still_trivial = false;
            if (!exhaustive) break;
        }
    }
    return report;
}

bool is_gamma_critical(const Graph& g, const GbBudget& budget) {
    if (g.order() < 2) throw std::invalid_argument("gamma-criticality needs at least 2 vertices");
    int base = gamma(g, budget).gamma;
    for (int v = 0; v < g.order(); ++v)
        if (gamma(delete_vertex(g, v), budget).gamma >= base) return false;
    return true;
}

std::vector<int> phi(const WeightVector& d) {
    std::vector<int> out(d.size());
    for (size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0) throw std::invalid_argument("weight vector entries must be nonzero");
        out[i] = d[i] > 0 ? 0 : -1;
    }
    return out;
}

Graph blowup(const Graph& g, const WeightVector& d) {
    if (static_cast<int>(d.size()) != g.order())
        throw std::invalid_argument("weight vector length does not match graph order");
    long total = 0;
    for (int w : d) {
        if (w == 0) throw std::invalid_argument("weight vector entries must be nonzero");
        total += std::abs(w);
    }
    if (total > kMaxVertices) throw CapacityError("blow-up exceeds 64 vertices");

    std::vector<int> start(d.size()), size(d.size());
    int n = 0;
    for (size_t u = 0; u < d.size(); ++u) {
        start[u] = n;
        size[u] = std::abs(d[u]);
        n += size[u];
    }
    Graph out(n);
    for (size_t u = 0; u < d.size(); ++u) {
        if (d[u] < 0)
            for (int a = 0; a < size[u]; ++a)
                for (int b = a + 1; b < size[u]; ++b) out.add_edge(start[u] + a, start[u] + b);
        for (size_t v = u + 1; v < d.size(); ++v) {
            if (!g.has_edge(static_cast<int>(u), static_cast<int>(v))) continue;
            for (int a = 0; a < size[u]; ++a)
                for (int b = 0; b < size[v]; ++b) out.add_edge(start[u] + a, start[v] + b);
        }
    }
    return out;
}

bool blowup_ideal_trivial(const Graph& g, const WeightVector& d, int j) {
    int n = g.order();
    if (static_cast<int>(d.size()) != n)
        throw std::invalid_argument("weight vector length does not match graph order");
    if (j < 1 || j > n) throw std::invalid_argument("critical ideal index out of range");
    std::vector<int> point = phi(d);

    // The substitution x_v -> phi(d)_v is justified exactly where the part
    // has at least two vertices (the blow-up creates twins there). Size-one
    // parts keep their variable; with every part of size one this is the
    // plain critical ideal of g.
    bool all_wide = true;
    for (int w : d) all_wide = all_wide && std::abs(w) >= 2;

    SymbolicLaplacian sl = symbolic_laplacian(g);
    if (all_wide) {
        std::vector<mpz_class> at(point.begin(), point.end());
        IntMatrix m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m.at(r, c) = sl.entries[size_t(r)][size_t(c)].evaluate(at);
        return determinantal_divisor(m, j) == 1;
    }

    for (int v = 0; v < n; ++v) {
        if (std::abs(d[size_t(v)]) < 2) continue;
        Polynomial value(sl.ring, point[size_t(v)]);
        sl.entries[size_t(v)][size_t(v)] = value;
    }
    std::vector<Polynomial> gens;
    std::set<Polynomial> seen;
    std::vector<std::vector<Polynomial>> sub(static_cast<size_t>(j),
                                             std::vector<Polynomial>(static_cast<size_t>(j)));
    std::vector<int> rows = first_subset(j);
    do {
        std::vector<int> cols = first_subset(j);
        do {
            for (int r = 0; r < j; ++r)
                for (int c = 0; c < j; ++c)
                    sub[size_t(r)][size_t(c)] =
                        sl.entries[size_t(rows[size_t(r)])][size_t(cols[size_t(c)])];
            Polynomial det = symbolic_determinant(sub);
            if (det.is_zero()) continue;
            if (det.is_unit()) return true;
            det = det.sign_normalized();
            if (seen.insert(det).second) gens.push_back(std::move(det));
        } while (next_subset(cols, n));
    } while (next_subset(rows, n));
    return is_trivial_with_path(gens, {}, GbBudget{}).trivial;
}

}  // namespace critideal
