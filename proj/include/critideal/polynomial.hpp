#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "critideal/graph.hpp"

namespace critideal {

enum class MonomialOrder { DegRevLex, Lex };

// A polynomial ring Z[x1..xn] with a fixed monomial order. Cheap value
// type; polynomials carry a copy and operations check for mismatches.
struct Ring {
    int nvars = 0;
    MonomialOrder order = MonomialOrder::DegRevLex;

    bool operator==(const Ring&) const = default;
    bool packed() const { return nvars <= 15; }
    std::string var_name(int i) const { return "x" + std::to_string(i + 1); }
};

// Exponent vector. For rings with at most 15 variables the exponents live
// in a single 128-bit word (byte 15 = total degree, byte i = exponent of
// x_{i+1}), so multiplication is an add and degrevlex comparison is two
// integer compares. Wider rings fall back to a heap vector.
class Monomial {
public:
    Monomial() = default;

    static Monomial one(const Ring& ring);
    static Monomial variable(const Ring& ring, int i);
    static Monomial from_exponents(const Ring& ring, const std::vector<int>& exps);

    int degree() const;
    int exponent(int i) const;
    bool is_constant() const { return degree() == 0; }

    Monomial times(const Monomial& other) const;
    bool divides(const Monomial& other) const;       // this | other
    Monomial divided_into(const Monomial& num) const;  // num / this
    Monomial lcm_with(const Monomial& other) const;
    bool coprime_with(const Monomial& other) const;

    // <0, 0, >0 like memcmp; order-specific.
    static int compare(const Monomial& a, const Monomial& b, MonomialOrder order);

    bool operator==(const Monomial&) const = default;

private:
    unsigned __int128 key_ = 0;
    std::vector<std::uint8_t> big_;  // empty in packed mode; [i] = exp of x_{i+1}

    bool packed() const { return big_.empty(); }
    static int compare_drl(const Monomial& a, const Monomial& b);
    static int compare_lex(const Monomial& a, const Monomial& b);
};

struct Term {
    mpz_class coef;
    Monomial mon;

    bool operator==(const Term&) const = default;
};

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(const Ring& ring) : ring_(ring) {}
    Polynomial(const Ring& ring, const mpz_class& constant);

    static Polynomial variable(const Ring& ring, int i);
    static Polynomial from_terms(const Ring& ring, std::vector<Term> terms);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Unit means +-1.
    bool is_unit() const;
    bool is_constant() const;
    const Term& leading_term() const;
    int max_degree() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial&) const;
    Polynomial operator-(const Polynomial&) const;
    Polynomial operator*(const Polynomial&) const;

    // this + c * x^m * g, the workhorse of reduction.
    Polynomial add_scaled(const Polynomial& g, const mpz_class& c, const Monomial& m) const;

    // Flip the global sign so the leading coefficient is positive.
    Polynomial sign_normalized() const;

    mpz_class evaluate(const std::vector<mpz_class>& point) const;
    mpz_class evaluate_at_ints(const std::vector<long>& point) const;

    std::string to_string() const;

    bool operator==(const Polynomial&) const = default;
    // Total order (by ring, then term lists); used for canonical dedup.
    static int compare(const Polynomial& a, const Polynomial& b);
    bool operator<(const Polynomial& o) const { return compare(*this, o) < 0; }

private:
    Ring ring_;
    std::vector<Term> terms_;  // strictly descending in ring_.order

    void normalize();
};

void check_same_ring(const Ring& a, const Ring& b);

// Exact determinant of a square polynomial matrix by dynamic programming
// over column subsets (memoized Laplace expansion along rows).
Polynomial symbolic_determinant(const std::vector<std::vector<Polynomial>>& m);

// Parses the grammar produced by to_string: signed terms of integer and
// x<k>[^e] factors separated by '*' (juxtaposition tolerated).
Polynomial parse_polynomial(const Ring& ring, const std::string& text);

}  // namespace critideal
