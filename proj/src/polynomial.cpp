#include "critideal/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace critideal {

namespace {

using U128 = unsigned __int128;

constexpr int kDegByte = 15;
constexpr U128 kTailMask = (U128{1} << (8 * kDegByte)) - 1;

int key_degree(U128 key) { return static_cast<int>(key >> (8 * kDegByte)); }
int key_exp(U128 key, int i) { return static_cast<int>((key >> (8 * i)) & 0xFF); }

}  // namespace

Monomial Monomial::one(const Ring& ring) {
    Monomial m;
    if (!ring.packed()) m.big_.assign(static_cast<size_t>(ring.nvars), 0);
    return m;
}

Monomial Monomial::variable(const Ring& ring, int i) {
    if (i < 0 || i >= ring.nvars) throw std::invalid_argument("variable index out of range");
    Monomial m = one(ring);
    if (m.packed())
        m.key_ = (U128{1} << (8 * i)) | (U128{1} << (8 * kDegByte));
    else
        m.big_[static_cast<size_t>(i)] = 1;
    return m;
}

Monomial Monomial::from_exponents(const Ring& ring, const std::vector<int>& exps) {
    if (static_cast<int>(exps.size()) != ring.nvars)
        throw std::invalid_argument("exponent vector length does not match ring");
    Monomial m = one(ring);
    long deg = 0;
    for (int i = 0; i < ring.nvars; ++i) {
        if (exps[i] < 0 || exps[i] > 255)
            throw CapacityError("exponent out of supported range [0, 255]");
        deg += exps[i];
        if (m.packed())
            m.key_ |= U128{static_cast<unsigned>(exps[i])} << (8 * i);
        else
            m.big_[static_cast<size_t>(i)] = static_cast<std::uint8_t>(exps[i]);
    }
    if (deg > 255) throw CapacityError("total degree exceeds 255");
    if (m.packed()) m.key_ |= U128{static_cast<unsigned>(deg)} << (8 * kDegByte);
    return m;
}

int Monomial::degree() const {
    if (packed()) return key_degree(key_);
    int d = 0;
    for (auto e : big_) d += e;
    return d;
}

int Monomial::exponent(int i) const {
    if (packed()) return key_exp(key_, i);
    return big_[static_cast<size_t>(i)];
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    if (packed() && other.packed()) {
        if (key_degree(key_) + key_degree(other.key_) > 255)
            throw CapacityError("monomial degree overflow");
        out.key_ = key_ + other.key_;
        return out;
    }
    out.big_.resize(std::max(big_.size(), other.big_.size()));
    for (size_t i = 0; i < out.big_.size(); ++i) {
        int e = (i < big_.size() ? big_[i] : 0) + (i < other.big_.size() ? other.big_[i] : 0);
        if (e > 255) throw CapacityError("monomial exponent overflow");
        out.big_[i] = static_cast<std::uint8_t>(e);
    }
    return out;
}

bool Monomial::divides(const Monomial& other) const {
    if (packed() && other.packed()) {
        for (int i = 0; i < kDegByte; ++i)
            if (key_exp(key_, i) > key_exp(other.key_, i)) return false;
        return true;
    }
    for (size_t i = 0; i < std::max(big_.size(), other.big_.size()); ++i)
        if ((i < big_.size() ? big_[i] : 0) > (i < other.big_.size() ? other.big_[i] : 0))
            return false;
    return true;
}

Monomial Monomial::divided_into(const Monomial& num) const {
    Monomial out;
    if (packed() && num.packed()) {
        out.key_ = num.key_ - key_;
        return out;
    }
    out.big_.resize(num.big_.size());
    for (size_t i = 0; i < out.big_.size(); ++i)
        out.big_[i] = static_cast<std::uint8_t>(num.big_[i] - (i < big_.size() ? big_[i] : 0));
    return out;
}

Monomial Monomial::lcm_with(const Monomial& other) const {
    Monomial out;
    if (packed() && other.packed()) {
        int deg = 0;
        for (int i = 0; i < kDegByte; ++i) {
            int e = std::max(key_exp(key_, i), key_exp(other.key_, i));
            out.key_ |= U128{static_cast<unsigned>(e)} << (8 * i);
            deg += e;
        }
        out.key_ |= U128{static_cast<unsigned>(deg)} << (8 * kDegByte);
        return out;
    }
    out.big_.resize(std::max(big_.size(), other.big_.size()));
    for (size_t i = 0; i < out.big_.size(); ++i)
        out.big_[i] = std::max<std::uint8_t>(i < big_.size() ? big_[i] : 0,
                                             i < other.big_.size() ? other.big_[i] : 0);
    return out;
}

bool Monomial::coprime_with(const Monomial& other) const {
    if (packed() && other.packed()) {
        for (int i = 0; i < kDegByte; ++i)
            if (key_exp(key_, i) && key_exp(other.key_, i)) return false;
        return true;
    }
    for (size_t i = 0; i < std::min(big_.size(), other.big_.size()); ++i)
        if (big_[i] && other.big_[i]) return false;
    return true;
}

int Monomial::compare_drl(const Monomial& a, const Monomial& b) {
    if (a.packed() && b.packed()) {
        int da = key_degree(a.key_), db = key_degree(b.key_);
        if (da != db) return da < db ? -1 : 1;
        U128 ta = a.key_ & kTailMask, tb = b.key_ & kTailMask;
        if (ta == tb) return 0;
        // Higher byte = higher variable index; the rightmost differing
        // exponent decides with reversed inequality.
        return ta > tb ? -1 : 1;
    }
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (int i = static_cast<int>(std::max(a.big_.size(), b.big_.size())) - 1; i >= 0; --i) {
        int ea = a.exponent(i), eb = b.exponent(i);
        if (ea != eb) return ea > eb ? -1 : 1;
    }
    return 0;
}

int Monomial::compare_lex(const Monomial& a, const Monomial& b) {
    size_t n = a.packed() ? kDegByte : std::max(a.big_.size(), b.big_.size());
    for (size_t i = 0; i < n; ++i) {
        int ea = a.exponent(static_cast<int>(i)), eb = b.exponent(static_cast<int>(i));
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
}

int Monomial::compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
    return order == MonomialOrder::DegRevLex ? compare_drl(a, b) : compare_lex(a, b);
}

Polynomial::Polynomial(const Ring& ring, const mpz_class& constant) : ring_(ring) {
    if (constant != 0) terms_.push_back({constant, Monomial::one(ring)});
}

Polynomial Polynomial::variable(const Ring& ring, int i) {
    Polynomial p(ring);
    p.terms_.push_back({1, Monomial::variable(ring, i)});
    return p;
}

Polynomial Polynomial::from_terms(const Ring& ring, std::vector<Term> terms) {
    Polynomial p(ring);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    auto order = ring_.order;
    std::sort(terms_.begin(), terms_.end(), [order](const Term& a, const Term& b) {
        return Monomial::compare(a.mon, b.mon, order) > 0;
    });
    std::vector<Term> out;
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mon == t.mon)
            out.back().coef += t.coef;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coef == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

bool Polynomial::is_unit() const {
    return terms_.size() == 1 && terms_[0].mon.is_constant() &&
           (terms_[0].coef == 1 || terms_[0].coef == -1);
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_constant());
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
}

int Polynomial::max_degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mon.degree());
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({-t.coef, t.mon});
    return out;
}

Polynomial Polynomial::add_scaled(const Polynomial& g, const mpz_class& c,
                                  const Monomial& m) const {
    check_same_ring(ring_, g.ring_);
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size() + g.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
        if (j == g.terms_.size()) {
            out.terms_.push_back(terms_[i++]);
            continue;
        }
        Monomial gm = g.terms_[j].mon.times(m);
        int cmp = i == terms_.size() ? -1 : Monomial::compare(terms_[i].mon, gm, ring_.order);
        if (cmp > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (cmp < 0) {
            mpz_class coef = g.terms_[j].coef * c;
            if (coef != 0) out.terms_.push_back({std::move(coef), std::move(gm)});
            ++j;
        } else {
            mpz_class coef = terms_[i].coef + g.terms_[j].coef * c;
            if (coef != 0) out.terms_.push_back({std::move(coef), std::move(gm)});
            ++i;
            ++j;
        }
    }
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    return add_scaled(o, 1, Monomial::one(ring_));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return add_scaled(o, -1, Monomial::one(ring_));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    const Polynomial& shorter = terms_.size() <= o.terms_.size() ? *this : o;
    const Polynomial& longer = terms_.size() <= o.terms_.size() ? o : *this;
    Polynomial out(ring_);
    for (const auto& t : shorter.terms_) out = out.add_scaled(longer, t.coef, t.mon);
    return out;
}

Polynomial Polynomial::sign_normalized() const {
    if (!terms_.empty() && terms_.front().coef < 0) return -*this;
    return *this;
}

mpz_class Polynomial::evaluate(const std::vector<mpz_class>& point) const {
    if (static_cast<int>(point.size()) != ring_.nvars)
        throw std::invalid_argument("evaluation point length does not match ring");
    mpz_class total = 0;
    for (const auto& t : terms_) {
        mpz_class v = t.coef;
        for (int i = 0; i < ring_.nvars; ++i) {
            int e = t.mon.exponent(i);
            for (int k = 0; k < e; ++k) v *= point[static_cast<size_t>(i)];
        }
        total += v;
    }
    return total;
}

mpz_class Polynomial::evaluate_at_ints(const std::vector<long>& point) const {
    std::vector<mpz_class> p(point.begin(), point.end());
    return evaluate(p);
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        mpz_class a = abs(t.coef);
        if (first) {
            if (t.coef < 0) out << "-";
            first = false;
        } else {
            out << (t.coef < 0 ? " - " : " + ");
        }
        bool printed = false;
        if (a != 1 || t.mon.is_constant()) {
            out << a.get_str();
            printed = true;
        }
        for (int i = 0; i < ring_.nvars; ++i) {
            int e = t.mon.exponent(i);
            if (!e) continue;
            if (printed) out << "*";
            out << ring_.var_name(i);
            if (e > 1) out << "^" << e;
            printed = true;
        }
    }
    return out.str();
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
    if (a.ring_.nvars != b.ring_.nvars) return a.ring_.nvars < b.ring_.nvars ? -1 : 1;
    size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        int c = Monomial::compare(a.terms_[i].mon, b.terms_[i].mon, a.ring_.order);
        if (c != 0) return c;
        int s = cmp(a.terms_[i].coef, b.terms_[i].coef);
        if (s != 0) return s;
    }
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
    return 0;
}

void check_same_ring(const Ring& a, const Ring& b) {
    if (!(a == b)) throw std::invalid_argument("polynomial ring mismatch");
}

Polynomial symbolic_determinant(const std::vector<std::vector<Polynomial>>& m) {
    size_t k = m.size();
    for (const auto& row : m)
        if (row.size() != k) throw std::invalid_argument("determinant of non-square matrix");
    if (k == 0) throw std::invalid_argument("determinant of empty matrix");
    if (k > 16) throw CapacityError("symbolic determinants supported up to 16x16");
    Ring ring = m[0][0].ring();
    for (const auto& row : m)
        for (const auto& e : row) check_same_ring(ring, e.ring());

    // minor[S] = det of the submatrix on rows 0..|S|-1 and columns S.
    std::vector<Polynomial> minor(size_t{1} << k, Polynomial(ring));
    minor[0] = Polynomial(ring, 1);
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << k); ++s) {
        int row = __builtin_popcount(s) - 1;
        Polynomial det(ring);
        int idx = 0;
        for (std::uint32_t rest = s; rest; rest &= rest - 1, ++idx) {
            int col = __builtin_ctz(rest);
            const Polynomial& entry = m[static_cast<size_t>(row)][static_cast<size_t>(col)];
            if (entry.is_zero()) continue;
            const Polynomial& sub = minor[s & ~(std::uint32_t{1} << col)];
            if (sub.is_zero()) continue;
            Polynomial prod = entry * sub;
            det = ((row + idx) % 2 == 0) ? det + prod : det - prod;
        }
        minor[s] = std::move(det);
    }
    return minor[(size_t{1} << k) - 1];
}

namespace {

struct PolyParser {
    const Ring& ring;
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek_is(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("cannot parse polynomial \"" + s + "\" at position " +
                                    std::to_string(pos) + ": " + why);
    }

    mpz_class parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected integer");
        return mpz_class(s.substr(start, pos - start));
    }

    Polynomial parse_factor() {
        skip_ws();
        if (pos >= s.size()) fail("expected factor");
        if (std::isdigit(static_cast<unsigned char>(s[pos])))
            return Polynomial(ring, parse_int());
        if (s[pos] == 'x') {
            ++pos;
            mpz_class idx = parse_int();
            if (idx < 1 || idx > ring.nvars) fail("variable index out of range");
            Polynomial v = Polynomial::variable(ring, idx.get_si() - 1);
            if (peek_is('^')) {
                ++pos;
                mpz_class e = parse_int();
                Polynomial out(ring, 1);
                for (mpz_class k = 0; k < e; ++k) out = out * v;
                return out;
            }
            return v;
        }
        fail("expected integer or variable");
    }

    Polynomial parse_term() {
        Polynomial p = parse_factor();
        while (true) {
            skip_ws();
            if (peek_is('*')) {
                ++pos;
                p = p * parse_factor();
            } else if (pos < s.size() &&
                       (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == 'x')) {
                p = p * parse_factor();  // juxtaposition
            } else {
                return p;
            }
        }
    }

    Polynomial parse() {
        Polynomial total(ring);
        int sign = 1;
        skip_ws();
        if (peek_is('-')) {
            sign = -1;
            ++pos;
        } else if (peek_is('+')) {
            ++pos;
        }
        while (true) {
            Polynomial t = parse_term();
            total = sign > 0 ? total + t : total - t;
            skip_ws();
            if (pos >= s.size()) return total;
            if (s[pos] == '+')
                sign = 1;
            else if (s[pos] == '-')
                sign = -1;
            else
                fail("expected '+' or '-'");
            ++pos;
        }
    }
};

}  // namespace

Polynomial parse_polynomial(const Ring& ring, const std::string& text) {
    PolyParser parser{ring, text};
    Polynomial p = parser.parse();
    return p;
}

}  // namespace critideal
