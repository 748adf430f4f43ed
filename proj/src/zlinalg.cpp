#include "critideal/zlinalg.hpp"

#include <algorithm>

namespace critideal {

SnfResult smith_normal_form(IntMatrix m) {
    int rows = m.rows(), cols = m.cols();
    SnfResult out;
    int t = 0;
    while (t < rows && t < cols) {
        // Smallest nonzero entry in the remaining block as pivot.
        int pr = -1, pc = -1;
        for (int r = t; r < rows; ++r)
            for (int c = t; c < cols; ++c) {
                if (m.at(r, c) == 0) continue;
                if (pr < 0 || mpz_cmpabs(m.at(r, c).get_mpz_t(), m.at(pr, pc).get_mpz_t()) < 0) {
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) break;  // remaining block is zero
        if (pr != t)
            for (int c = 0; c < cols; ++c) std::swap(m.at(t, c), m.at(pr, c));
        if (pc != t)
            for (int r = 0; r < rows; ++r) std::swap(m.at(r, t), m.at(r, pc));

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int r = t + 1; r < rows; ++r) {
                if (m.at(r, t) == 0) continue;
                mpz_class q = m.at(r, t) / m.at(t, t);  // truncated; remainder may be negative
                if (q != 0)
                    for (int c = t; c < cols; ++c) m.at(r, c) -= q * m.at(t, c);
                if (m.at(r, t) != 0) {
                    // Smaller residue becomes the new pivot row.
                    for (int c = 0; c < cols; ++c) std::swap(m.at(t, c), m.at(r, c));
                    clean = false;
                }
            }
            for (int c = t + 1; c < cols; ++c) {
                if (m.at(t, c) == 0) continue;
                mpz_class q = m.at(t, c) / m.at(t, t);
                if (q != 0)
                    for (int r = t; r < rows; ++r) m.at(r, c) -= q * m.at(r, t);
                if (m.at(t, c) != 0) {
                    for (int r = 0; r < rows; ++r) std::swap(m.at(r, t), m.at(r, c));
                    clean = false;
                }
            }
        }
        out.factors.push_back(abs(m.at(t, t)));
        ++t;
    }
    out.rank = static_cast<int>(out.factors.size());

    // Repair the divisibility chain: gcd/lcm exchanges preserve all
    // determinantal divisors of the diagonal.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < out.factors.size(); ++i)
            for (size_t j = i + 1; j < out.factors.size(); ++j) {
                if (out.factors[j] % out.factors[i] == 0) continue;
                mpz_class g = gcd(out.factors[i], out.factors[j]);
                out.factors[j] = out.factors[i] / g * out.factors[j];
                out.factors[i] = g;
                changed = true;
            }
    }
    return out;
}

mpz_class determinantal_divisor(const IntMatrix& m, int i) {
    if (i < 0 || i > std::min(m.rows(), m.cols()))
        throw std::invalid_argument("minor size out of range");
    if (i == 0) return 1;
    SnfResult snf = smith_normal_form(m);
    if (i > snf.rank) return 0;
    mpz_class d = 1;
    for (int k = 0; k < i; ++k) d *= snf.factors[static_cast<size_t>(k)];
    return d;
}

IntMatrix laplacian(const Graph& g) {
    int n = g.order();
    IntMatrix m(n, n);
    for (int u = 0; u < n; ++u) {
        m.at(u, u) = g.degree(u);
        for (int v = 0; v < n; ++v)
            if (u != v && g.has_edge(u, v)) m.at(u, v) = -1;
    }
    return m;
}

CriticalGroup critical_group(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("critical group requires a connected graph");
    int n = g.order();
    CriticalGroup out;
    if (n == 0) return out;
    SnfResult snf = smith_normal_form(laplacian(g));
    // L(G) of a connected graph has rank exactly n-1.
    out.factors.assign(snf.factors.begin(), snf.factors.begin() + (n - 1));
    for (const auto& f : out.factors)
        if (f == 1) ++out.f1;
    return out;
}

int f1(const Graph& g) { return critical_group(g).f1; }

}  // namespace critideal
