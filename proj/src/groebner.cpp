#include "critideal/groebner.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace critideal {

namespace {

// fdiv: quotient q and canonical remainder r with c = q*a + r, 0 <= r < a.
void floor_divmod(const mpz_class& c, const mpz_class& a, mpz_class& q, mpz_class& r) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
}

}  // namespace

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis) {
    const Ring& ring = p.ring();
    std::vector<const Polynomial*> active;
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        check_same_ring(ring, g.ring());
        active.push_back(&g);
    }
    Polynomial work = p;
    std::vector<Term> done;  // strictly below every remaining monomial of work

    while (!work.is_zero()) {
        Monomial mon = work.leading_term().mon;
        mpz_class coef = work.leading_term().coef;
        bool changed = true;
        while (changed && coef != 0) {
            changed = false;
            for (const Polynomial* g : active) {
                const Term& lt = g->leading_term();
                if (!lt.mon.divides(mon)) continue;
                mpz_class lc = abs(lt.coef);
                mpz_class q, r;
                floor_divmod(coef, lc, q, r);
                if (q == 0) continue;
                if (lt.coef < 0) q = -q;
                work = work.add_scaled(*g, -q, lt.mon.divided_into(mon));
                coef = std::move(r);
                changed = true;
                if (coef == 0) break;
            }
        }
        if (coef != 0) {
            // Irreducible leading term; detach it. Everything left in work
            // is strictly smaller.
            done.push_back({coef, mon});
            work = Polynomial::from_terms(
                ring, {work.terms().begin() + 1, work.terms().end()});
        }
        // coef == 0: the last rewrite eliminated mon from work entirely.
    }
    return Polynomial::from_terms(ring, std::move(done));
}

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const Term& ft = f.leading_term();
    const Term& gt = g.leading_term();
    Monomial l = ft.mon.lcm_with(gt.mon);
    mpz_class c = lcm(ft.coef, gt.coef);  // positive for sign-normalized inputs
    Polynomial out = Polynomial(f.ring());
    out = out.add_scaled(f, c / ft.coef, ft.mon.divided_into(l));
    out = out.add_scaled(g, -(c / gt.coef), gt.mon.divided_into(l));
    return out;
}

Polynomial g_polynomial(const Polynomial& f, const Polynomial& g) {
    const Term& ft = f.leading_term();
    const Term& gt = g.leading_term();
    Monomial l = ft.mon.lcm_with(gt.mon);
    mpz_class d, s, t;
    mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), ft.coef.get_mpz_t(),
               gt.coef.get_mpz_t());
    Polynomial out = Polynomial(f.ring());
    out = out.add_scaled(f, s, ft.mon.divided_into(l));
    out = out.add_scaled(g, t, gt.mon.divided_into(l));
    return out;
}

struct Pair {
    int lcm_degree;
    long seq;
    int i, j;
    bool operator>(const Pair& o) const {
        return std::tie(lcm_degree, seq) > std::tie(o.lcm_degree, o.seq);
    }
};

}  // namespace

GroebnerBasis strong_groebner(const std::vector<Polynomial>& gens, const GbBudget& budget) {
    Ring ring;
    bool have_ring = false;
    std::vector<Polynomial> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!have_ring) {
            ring = g.ring();
            have_ring = true;
        } else {
            check_same_ring(ring, g.ring());
        }
        basis.push_back(g.sign_normalized());
    }
    GroebnerBasis out;
    out.ring = have_ring ? ring : (gens.empty() ? Ring{} : gens.front().ring());
    if (basis.empty()) {
        out.complete = true;
        return out;
    }
    // Cheap generators first so they drive early reductions.
    std::stable_sort(basis.begin(), basis.end(), [](const Polynomial& a, const Polynomial& b) {
        return std::pair(a.max_degree(), a.terms().size()) <
               std::pair(b.max_degree(), b.terms().size());
    });
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

    std::priority_queue<Pair, std::vector<Pair>, std::greater<>> pairs;
    long seq = 0;
    auto enqueue_with_all = [&](int k) {
        for (int i = 0; i < k; ++i) {
            Monomial l = basis[static_cast<size_t>(i)].leading_term().mon.lcm_with(
                basis[static_cast<size_t>(k)].leading_term().mon);
            pairs.push({l.degree(), seq++, i, k});
        }
    };
    for (int k = 0; k < static_cast<int>(basis.size()); ++k) enqueue_with_all(k);

    long reductions = 0;
    while (!pairs.empty()) {
        Pair pr = pairs.top();
        pairs.pop();
        // Copies: push_back below invalidates references into basis.
        Polynomial f = basis[static_cast<size_t>(pr.i)];
        Polynomial g = basis[static_cast<size_t>(pr.j)];
        const Term& ft = f.leading_term();
        const Term& gt = g.leading_term();

        bool mons_coprime = ft.mon.coprime_with(gt.mon);
        mpz_class cg = gcd(ft.coef, gt.coef);
        bool skip_s = mons_coprime && cg == 1;  // product criterion for S-pairs
        // d = gcd divides one of the leading coefficients: the G-polynomial
        // is a monomial multiple of that element and reduces to zero.
        bool skip_g = cg == ft.coef || cg == gt.coef;

        for (int which = 0; which < 2; ++which) {
            if (which == 0 && skip_s) continue;
            if (which == 1 && skip_g) continue;
            if (++reductions > budget.max_pair_reductions)
                throw BudgetExhausted("Groebner pair-reduction budget exhausted");
            Polynomial h = which == 0 ? s_polynomial(f, g) : g_polynomial(f, g);
            h = reduce(h, basis);
            if (h.is_zero()) continue;
            if (h.max_degree() > budget.max_degree)
                throw BudgetExhausted("Groebner degree budget exhausted");
            basis.push_back(h.sign_normalized());
            enqueue_with_all(static_cast<int>(basis.size()) - 1);
        }
    }

    // Interreduce until stable; gives canonical reduced output.
    for (int pass = 0; pass < 64; ++pass) {
        bool changed = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].is_zero()) continue;
            std::vector<Polynomial> others;
            others.reserve(basis.size() - 1);
            for (size_t j = 0; j < basis.size(); ++j)
                if (j != i && !basis[j].is_zero()) others.push_back(basis[j]);
            Polynomial r = reduce(basis[i], others).sign_normalized();
            if (!(r == basis[i])) {
                basis[i] = std::move(r);
                changed = true;
            }
        }
        if (!changed) break;
    }
    std::erase_if(basis, [](const Polynomial& p) { return p.is_zero(); });
    std::sort(basis.begin(), basis.end());
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

    out.basis = std::move(basis);
    out.complete = true;
    return out;
}

TrivialityVerdict is_trivial_with_path(const std::vector<Polynomial>& gens,
                                       const std::vector<std::vector<long>>& extra_points,
                                       const GbBudget& budget) {
    std::vector<const Polynomial*> live;
    for (const auto& g : gens)
        if (!g.is_zero()) live.push_back(&g);
    if (live.empty()) return {false, DecisionPath::Evaluation};
    const Ring& ring = live.front()->ring();

    for (const auto* g : live)
        if (g->is_unit()) return {true, DecisionPath::UnitGenerator};

    mpz_class const_gcd = 0;
    for (const auto* g : live)
        if (g->is_constant()) const_gcd = gcd(const_gcd, g->leading_term().coef);
    if (const_gcd == 1) return {true, DecisionPath::ConstantGcd};

    std::vector<std::vector<long>> points;
    points.emplace_back(ring.nvars, 0);
    points.emplace_back(ring.nvars, -1);
    for (const auto& p : extra_points) {
        if (static_cast<int>(p.size()) != ring.nvars)
            throw std::invalid_argument("evaluation point length does not match ring");
        points.push_back(p);
    }
    std::uint64_t state = 0x9E3779B97F4A7C15ULL;  // fixed seed; only soundness matters
    auto next = [&state] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int k = 0; k < 16; ++k) {
        std::vector<long> p(static_cast<size_t>(ring.nvars));
        for (auto& x : p) x = static_cast<long>(next() % 7) - 3;
        points.push_back(std::move(p));
    }
    for (const auto& pt : points) {
        std::vector<mpz_class> at(pt.begin(), pt.end());
        mpz_class g = 0;
        for (const auto* gen : live) {
            g = gcd(g, gen->evaluate(at));
            if (g == 1) break;
        }
        if (g != 1) return {false, DecisionPath::Evaluation};
    }

    GroebnerBasis gb = strong_groebner(gens, budget);
    for (const auto& b : gb.basis)
        if (b.is_unit()) return {true, DecisionPath::Groebner};
    return {false, DecisionPath::Groebner};
}

bool is_trivial(const std::vector<Polynomial>& gens, const GbBudget& budget) {
    return is_trivial_with_path(gens, {}, budget).trivial;
}

bool ideal_equals(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                  const GbBudget& budget) {
    GroebnerBasis gba = strong_groebner(a, budget);
    GroebnerBasis gbb = strong_groebner(b, budget);
    for (const auto& p : a)
        if (!reduce(p, gbb.basis).is_zero()) return false;
    for (const auto& p : b)
        if (!reduce(p, gba.basis).is_zero()) return false;
    return true;
}

}  // namespace critideal
