#include <functional>
#include <numeric>
#include <random>

#include "critideal/zlinalg.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace critideal;

namespace {

mpz_class minor_det(const IntMatrix& m, const std::vector<int>& rows,
                    const std::vector<int>& cols) {
    // Laplace expansion; matrices in these tests are tiny.
    size_t k = rows.size();
    if (k == 1) return m.at(rows[0], cols[0]);
    mpz_class det = 0;
    for (size_t j = 0; j < k; ++j) {
        if (m.at(rows[0], cols[j]) == 0) continue;
        std::vector<int> sub_cols;
        for (size_t c = 0; c < k; ++c)
            if (c != j) sub_cols.push_back(cols[c]);
        std::vector<int> sub_rows(rows.begin() + 1, rows.end());
        mpz_class term = m.at(rows[0], cols[j]) * minor_det(m, sub_rows, sub_cols);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

// Brute-force gcd of all i x i minors, the independent oracle for SNF.
mpz_class brute_divisor(const IntMatrix& m, int i) {
    mpz_class g = 0;
    std::vector<int> rows(static_cast<size_t>(i)), cols(static_cast<size_t>(i));
    std::function<void(int, int)> loop_rows = [&](int start, int depth) {
        if (depth == i) {
            std::function<void(int, int)> loop_cols = [&](int cstart, int cdepth) {
                if (cdepth == i) {
                    g = gcd(g, minor_det(m, rows, cols));
                    return;
                }
                for (int c = cstart; c < m.cols(); ++c) {
                    cols[size_t(cdepth)] = c;
                    loop_cols(c + 1, cdepth + 1);
                }
            };
            loop_cols(0, 0);
            return;
        }
        for (int r = start; r < m.rows(); ++r) {
            rows[size_t(depth)] = r;
            loop_rows(r + 1, depth + 1);
        }
    };
    loop_rows(0, 0);
    return abs(g);
}

std::vector<long> factor_longs(const SnfResult& snf) {
    std::vector<long> out;
    for (const auto& f : snf.factors) out.push_back(f.get_si());
    return out;
}

}  // namespace

TEST_CASE("laplacian entries") {
    IntMatrix k2 = laplacian(complete(2));
    CHECK(k2.at(0, 0) == 1);
    CHECK(k2.at(0, 1) == -1);
    CHECK(k2.at(1, 1) == 1);

    IntMatrix k3 = laplacian(complete(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(k3.at(i, j) == (i == j ? 2 : -1));

    Graph claw = join(complete(1), trivial_graph(3));
    IntMatrix lc = laplacian(claw);
    CHECK(lc.at(0, 0) == 3);
    CHECK(lc.at(1, 1) == 1);
    CHECK(lc.at(1, 2) == 0);
    CHECK(lc.at(0, 2) == -1);

    // Row sums vanish.
    for (int r = 0; r < 4; ++r) {
        mpz_class s = 0;
        for (int c = 0; c < 4; ++c) s += lc.at(r, c);
        CHECK(s == 0);
    }
}

TEST_CASE("smith normal form examples") {
    CHECK(factor_longs(smith_normal_form(laplacian(complete(4)))) ==
          std::vector<long>{1, 4, 4});

    IntMatrix zero(3, 3);
    SnfResult z = smith_normal_form(zero);
    CHECK(z.rank == 0);
    CHECK(z.factors.empty());
}

TEST_CASE("snf against brute-force minor gcds") {
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 2 + int(rng() % 4), cols = 2 + int(rng() % 4);
        IntMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.at(r, c) = entry(rng);
        SnfResult snf = smith_normal_form(m);
        for (size_t i = 1; i < snf.factors.size(); ++i)
            CHECK(snf.factors[i] % snf.factors[i - 1] == 0);
        mpz_class prod = 1;
        for (int i = 1; i <= std::min(rows, cols); ++i) {
            CHECK(determinantal_divisor(m, i) == brute_divisor(m, i));
            if (i <= snf.rank) {
                prod *= snf.factors[size_t(i) - 1];
                CHECK(prod == brute_divisor(m, i));
            }
        }
    }
}

TEST_CASE("determinantal divisors of complete-graph laplacians") {
    CHECK(determinantal_divisor(laplacian(complete(4)), 3) == 16);
    CHECK(determinantal_divisor(laplacian(complete(5)), 4) == 125);

    std::mt19937 rng(22);
    std::uniform_int_distribution<int> entry(-7, 7);
    IntMatrix m(3, 4);
    mpz_class g = 0;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c) {
            m.at(r, c) = entry(rng);
            g = gcd(g, m.at(r, c));
        }
    CHECK(determinantal_divisor(m, 1) == g);
    CHECK_THROWS_AS(determinantal_divisor(m, 4), std::invalid_argument);
}

TEST_CASE("laplacian rank counts components") {
    Graph two = disjoint_union(path(3), complete(3));
    CHECK(smith_normal_form(laplacian(two)).rank == 4);  // 6 vertices, 2 components
    CHECK(smith_normal_form(laplacian(path(5))).rank == 4);
}

TEST_CASE("critical groups of named graphs") {
    CriticalGroup k5 = critical_group(complete(5));
    std::vector<long> k5_factors;
    for (const auto& f : k5.factors) k5_factors.push_back(f.get_si());
    CHECK(k5_factors == std::vector<long>{1, 5, 5, 5});
    CHECK(k5.f1 == 1);

    Graph claw = join(complete(1), trivial_graph(3));
    CHECK(f1(claw) == 3);
    CHECK(f1(join(complete(1), claw)) == 2);

    CHECK_THROWS_AS(critical_group(trivial_graph(2)), std::invalid_argument);
}

TEST_CASE("matrix-tree consistency on random connected graphs") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 3 + int(rng() % 5);
        Graph g = testutil::random_connected_graph(rng, n);
        CriticalGroup cg = critical_group(g);
        mpz_class trees = 1;
        for (const auto& f : cg.factors) trees *= f;

        IntMatrix l = laplacian(g);
        std::vector<int> idx(size_t(n) - 1);
        std::iota(idx.begin(), idx.end(), 1);  // delete row/col 0
        CHECK(trees == abs(minor_det(l, idx, idx)));
    }
}
