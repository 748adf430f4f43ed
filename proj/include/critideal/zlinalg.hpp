#pragma once

#include <gmpxx.h>

#include <vector>

#include "critideal/graph.hpp"

namespace critideal {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpz_class& at(int r, int c) { return a_[size_t(r) * size_t(cols_) + size_t(c)]; }
    const mpz_class& at(int r, int c) const { return a_[size_t(r) * size_t(cols_) + size_t(c)]; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<mpz_class> a_;
};

struct SnfResult {
    int rank = 0;
    std::vector<mpz_class> factors;  // positive, s_i | s_{i+1}
};

// Invariant factors by Euclidean row/column elimination with
// smallest-absolute-value pivoting and a divisibility-repair pass.
SnfResult smith_normal_form(IntMatrix m);

// gcd of all i x i minors: product s_1..s_i for i <= rank, else 0.
mpz_class determinantal_divisor(const IntMatrix& m, int i);

// diag = degree vector, off-diagonal = -adjacency.
IntMatrix laplacian(const Graph& g);

struct CriticalGroup {
    std::vector<mpz_class> factors;  // the n-1 invariant factors of L(G)
    int f1 = 0;                      // how many equal 1
};

CriticalGroup critical_group(const Graph& g);  // connected graphs only
int f1(const Graph& g);

}  // namespace critideal
