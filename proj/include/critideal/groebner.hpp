#pragma once

#include <stdexcept>
#include <vector>

#include "critideal/polynomial.hpp"

namespace critideal {

// A resource cap was hit; the computation was aborted rather than risk a
// wrong or never-terminating answer.
struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GbBudget {
    long max_pair_reductions = 200'000;
    int max_degree = 40;
};

// Strong reduction over Z: a term is rewritten by a basis element when the
// basis leading monomial divides its monomial, taking the canonical
// remainder of the coefficient modulo the leading coefficient. No term of
// the result is strongly reducible; p minus the result lies in <basis>.
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis);

struct GroebnerBasis {
    Ring ring;
    std::vector<Polynomial> basis;
    // Set once every S-polynomial and G-polynomial of basis pairs reduces
    // to zero; reduction to zero is then a complete membership test.
    bool complete = false;
};

// Buchberger's procedure for Z coefficients with S-polynomials and
// G-polynomials (Bezout combinations of leading coefficients), normal pair
// selection, and a final interreduction pass. Deterministic for a fixed
// input order.
GroebnerBasis strong_groebner(const std::vector<Polynomial>& gens, const GbBudget& budget = {});

enum class DecisionPath { UnitMinor, UnitGenerator, ConstantGcd, Evaluation, Groebner };

struct TrivialityVerdict {
    bool trivial = false;
    DecisionPath path = DecisionPath::Groebner;
};

// Is 1 in <gens> over Z[X]? Staged: unit generator, gcd-1 constants, integer
// evaluations whose image gcd exceeds 1 (sound: a ring homomorphism cannot
// map a trivial ideal onto a proper one), then a full strong GB.
TrivialityVerdict is_trivial_with_path(const std::vector<Polynomial>& gens,
                                       const std::vector<std::vector<long>>& extra_points = {},
                                       const GbBudget& budget = {});
bool is_trivial(const std::vector<Polynomial>& gens, const GbBudget& budget = {});

bool ideal_equals(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                  const GbBudget& budget = {});

}  // namespace critideal
