#include <random>

#include "critideal/polynomial.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace critideal;

namespace {

Polynomial var(const Ring& r, int i) { return Polynomial::variable(r, i); }
Polynomial cst(const Ring& r, long c) { return Polynomial(r, c); }

// Plain cofactor expansion along the first row, as an independent route.
Polynomial cofactor_det(const std::vector<std::vector<Polynomial>>& m) {
    size_t k = m.size();
    if (k == 1) return m[0][0];
    Polynomial det(m[0][0].ring());
    for (size_t j = 0; j < k; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> sub;
        for (size_t r = 1; r < k; ++r) {
            std::vector<Polynomial> row;
            for (size_t c = 0; c < k; ++c)
                if (c != j) row.push_back(m[r][c]);
            sub.push_back(std::move(row));
        }
        Polynomial prod = m[0][j] * cofactor_det(sub);
        det = (j % 2 == 0) ? det + prod : det - prod;
    }
    return det;
}

mpz_class integer_det(std::vector<std::vector<mpz_class>> m) {
    // fraction-free Bareiss
    size_t n = m.size();
    mpz_class sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

TEST_CASE("basic arithmetic") {
    Ring r{2};
    Polynomial p = (var(r, 0) + cst(r, 1)) * (var(r, 0) - cst(r, 1));
    CHECK(p.to_string() == "x1^2 - 1");
    CHECK(p == parse_polynomial(r, "x1^2 - 1"));

    Polynomial q = var(r, 0) * var(r, 1) - cst(r, 1);
    CHECK(q.evaluate_at_ints({1, 1}) == 0);

    Ring r7{7};
    Polynomial g3gen = parse_polynomial(r7, "x1^2 + 5*x1 + 5");
    CHECK(g3gen.evaluate_at_ints({0, 0, 0, 0, 0, 0, 0}) == 5);
}

TEST_CASE("ring axioms on random polynomials") {
    Ring r{3};
    std::mt19937 rng(5);
    for (int trial = 0; trial < 80; ++trial) {
        Polynomial a = testutil::random_polynomial(rng, r);
        Polynomial b = testutil::random_polynomial(rng, r);
        Polynomial c = testutil::random_polynomial(rng, r);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Polynomial(r));
        CHECK(a + (-a) == Polynomial(r));
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    Ring r{3};
    std::mt19937 rng(6);
    std::uniform_int_distribution<long> pt(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial p = testutil::random_polynomial(rng, r);
        Polynomial q = testutil::random_polynomial(rng, r);
        Polynomial s = testutil::random_polynomial(rng, r);
        std::vector<long> a{pt(rng), pt(rng), pt(rng)};
        CHECK((p * q + s).evaluate_at_ints(a) ==
              p.evaluate_at_ints(a) * q.evaluate_at_ints(a) + s.evaluate_at_ints(a));
    }
}

TEST_CASE("monomial orders") {
    Ring drl{3, MonomialOrder::DegRevLex};
    // In degrevlex, total degree dominates.
    Polynomial p = parse_polynomial(drl, "x1^2 + x2^3");
    CHECK(p.leading_term().mon == Monomial::from_exponents(drl, {0, 3, 0}));
    // Degrevlex tie-break: x1*x3 < x2^2.
    Polynomial q = parse_polynomial(drl, "x1*x3 + x2^2");
    CHECK(q.leading_term().mon == Monomial::from_exponents(drl, {0, 2, 0}));

    Ring lex{3, MonomialOrder::Lex};
    Polynomial s = parse_polynomial(lex, "x1^2 + x2^3");
    CHECK(s.leading_term().mon == Monomial::from_exponents(lex, {2, 0, 0}));
}

TEST_CASE("wide rings fall back to heap exponents") {
    Ring wide{20};
    Polynomial p = var(wide, 0) * var(wide, 19) + cst(wide, 2);
    CHECK(p.to_string() == "x1*x20 + 2");
    CHECK(p.evaluate_at_ints(std::vector<long>(20, 3)) == 11);
    CHECK(p == parse_polynomial(wide, p.to_string()));
}

TEST_CASE("symbolic determinants") {
    Ring r{3};
    std::vector<std::vector<Polynomial>> m2{{var(r, 0), cst(r, -1)}, {cst(r, -1), var(r, 1)}};
    CHECK(symbolic_determinant(m2).to_string() == "x1*x2 - 1");

    std::vector<std::vector<Polynomial>> m1{{cst(r, -1)}};
    CHECK(symbolic_determinant(m1).to_string() == "-1");

    // Full symbolic Laplacian of the path on 3 vertices.
    std::vector<std::vector<Polynomial>> lp3{
        {var(r, 0), cst(r, -1), cst(r, 0)},
        {cst(r, -1), var(r, 1), cst(r, -1)},
        {cst(r, 0), cst(r, -1), var(r, 2)},
    };
    CHECK(symbolic_determinant(lp3).to_string() == "x1*x2*x3 - x1 - x3");

    CHECK_THROWS_AS(symbolic_determinant({{var(r, 0), var(r, 1)}}), std::invalid_argument);
}

TEST_CASE("determinant agrees with cofactor expansion and integer evaluation") {
    Ring r{4};
    std::mt19937 rng(9);
    std::uniform_int_distribution<long> pt(-3, 3);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<std::vector<Polynomial>> m(4, std::vector<Polynomial>(4));
        for (auto& row : m)
            for (auto& e : row) e = testutil::random_polynomial(rng, r, 3, 1, 3);
        Polynomial dp = symbolic_determinant(m);
        CHECK(dp == cofactor_det(m));

        std::vector<long> a{pt(rng), pt(rng), pt(rng), pt(rng)};
        std::vector<std::vector<mpz_class>> mi(4, std::vector<mpz_class>(4));
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) mi[i][j] = m[i][j].evaluate_at_ints(a);
        CHECK(dp.evaluate_at_ints(a) == integer_det(mi));
    }
}

TEST_CASE("printing and parsing round trip") {
    Ring r{3};
    std::mt19937 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial p = testutil::random_polynomial(rng, r);
        CHECK(parse_polynomial(r, p.to_string()) == p);
    }
    CHECK(Polynomial(r).to_string() == "0");
    CHECK(parse_polynomial(r, "0") == Polynomial(r));
    CHECK(parse_polynomial(r, "-x1 + 2").to_string() == "-x1 + 2");
    CHECK_THROWS_AS(parse_polynomial(r, "x9"), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial(r, "x1 +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial(Ring{2}, "x1 * * x2"), std::invalid_argument);
}

TEST_CASE("ring mismatch is rejected") {
    Ring a{2}, b{3};
    CHECK_THROWS_AS(var(a, 0) + var(b, 0), std::invalid_argument);
    CHECK_THROWS_AS(var(a, 0) * var(b, 1), std::invalid_argument);
}
