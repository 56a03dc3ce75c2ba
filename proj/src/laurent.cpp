#include "braidrep/laurent.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace braidrep {

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_[{0, 0}] = c;
}

LaurentPoly::LaurentPoly(const mpz_class& c) {
    if (c != 0) terms_[{0, 0}] = c;
}

LaurentPoly LaurentPoly::term(const mpz_class& c, long a, long b) {
    LaurentPoly p;
    if (c != 0) p.terms_[{a, b}] = c;
    return p;
}

mpz_class LaurentPoly::coeff(long a, long b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& r) {
    for (const auto& [e, c] : r.terms_) {
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& r) {
    for (const auto& [e, c] : r.terms_) {
        auto [it, fresh] = terms_.try_emplace(e, -c);
        if (!fresh) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& r) {
    LaurentPoly out;
    mpz_class prod;
    for (const auto& [ep, cp] : p.terms_) {
        for (const auto& [er, cr] : r.terms_) {
            prod = cp * cr;
            Exponent e{ep.a + er.a, ep.b + er.b};
            auto [it, fresh] = out.terms_.try_emplace(e, prod);
            if (!fresh) {
                it->second += prod;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[{-e.a, -e.b}] = c;
    return r;
}

namespace {

mpq_class rational_pow(const mpq_class& x, long e) {
    if (e == 0) return 1;
    mpq_class base = e > 0 ? x : mpq_class(1) / x;
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    mpq_class r = 1;
    while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

}  // namespace

mpq_class LaurentPoly::eval(const mpq_class& t0, const mpq_class& q0) const {
    if (t0 == 0 || q0 == 0)
        throw std::domain_error("LaurentPoly::eval: evaluation point must be nonzero");
    mpq_class sum = 0;
    for (const auto& [e, c] : terms_)
        sum += mpq_class(c) * rational_pow(t0, e.a) * rational_pow(q0, e.b);
    return sum;
}

LaurentPoly LaurentPoly::derivative(Var v) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
        if (v == Var::t) {
            if (e.a != 0) r.terms_[{e.a - 1, e.b}] = c * e.a;
        } else {
            if (e.b != 0) r.terms_[{e.a, e.b - 1}] = c * e.b;
        }
    }
    return r;
}

LaurentPoly LaurentPoly::times_unit(const UnitMonomial& u) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_[{e.a + u.a, e.b + u.b}] = u.sign > 0 ? c : mpz_class(-c);
    return r;
}

std::pair<LaurentPoly, UnitMonomial> LaurentPoly::normalize_up_to_units() const {
    if (is_zero())
        throw std::domain_error("normalize_up_to_units: zero input");
    const auto& [e, c] = *terms_.begin();  // lex-smallest exponent
    UnitMonomial u{c > 0 ? 1 : -1, e.a, e.b};
    return {times_unit(u.inverse()), u};
}

bool LaurentPoly::as_unit(UnitMonomial* u) const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    if (c != 1 && c != -1) return false;
    if (u) *u = {c > 0 ? 1 : -1, e.a, e.b};
    return true;
}

bool LaurentPoly::q_free() const {
    for (const auto& [e, c] : terms_)
        if (e.b != 0) return false;
    return true;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        os << c << "*t^" << e.a << "*q^" << e.b;
        first = false;
    }
    return os.str();
}

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

long parse_int(const std::string& s, std::size_t& i, const char* what) {
    skip_ws(s, i);
    std::size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        throw std::invalid_argument(std::string("LaurentPoly::parse: expected ") + what);
    return std::stol(s.substr(start, i - start));
}

mpz_class parse_bigint(const std::string& s, std::size_t& i) {
    skip_ws(s, i);
    std::size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits)
        throw std::invalid_argument("LaurentPoly::parse: expected coefficient");
    return mpz_class(s.substr(start, i - start));
}

void expect(const std::string& s, std::size_t& i, const std::string& tok) {
    skip_ws(s, i);
    if (s.compare(i, tok.size(), tok) != 0)
        throw std::invalid_argument("LaurentPoly::parse: expected '" + tok + "'");
    i += tok.size();
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
    std::size_t i = 0;
    skip_ws(text, i);
    if (text.compare(i, 1, "0") == 0) {
        std::size_t j = i + 1;
        skip_ws(text, j);
        if (j == text.size()) return LaurentPoly();
    }
    LaurentPoly out;
    while (true) {
        mpz_class c = parse_bigint(text, i);
        expect(text, i, "*");
        expect(text, i, "t^");
        long a = parse_int(text, i, "t-exponent");
        expect(text, i, "*");
        expect(text, i, "q^");
        long b = parse_int(text, i, "q-exponent");
        out += term(c, a, b);
        skip_ws(text, i);
        if (i == text.size()) break;
        expect(text, i, "+");
    }
    return out;
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d) {
    if (d.is_zero())
        throw InexactDivisionError("exact_div: division by zero");
    if (p.is_zero()) return LaurentPoly();

    // Leading-term elimination under lex order. Λ is graded by each variable
    // separately, so when d | p the quotient's t-degrees lie in
    // [min_t(p)-min_t(d), max_t(p)-max_t(d)] and likewise for q. A quotient
    // term outside that box proves the division inexact; the box also bounds
    // the strictly lex-decreasing leading terms, so the loop terminates.
    const auto degree_box = [](const LaurentPoly& f) {
        long ta = f.terms().begin()->first.a, tb = ta;
        long qa = f.terms().begin()->first.b, qb = qa;
        for (const auto& [e, c] : f.terms()) {
            ta = std::min(ta, e.a);
            tb = std::max(tb, e.a);
            qa = std::min(qa, e.b);
            qb = std::max(qb, e.b);
        }
        return std::array<long, 4>{ta, tb, qa, qb};
    };
    const auto bp = degree_box(p);
    const auto bd = degree_box(d);
    const long t_lo = bp[0] - bd[0], t_hi = bp[1] - bd[1];
    const long q_lo = bp[2] - bd[2], q_hi = bp[3] - bd[3];

    LaurentPoly r = p;
    LaurentPoly quot;
    const auto [ed, cd] = *d.terms().rbegin();
    while (!r.is_zero()) {
        const auto [er, cr] = *r.terms().rbegin();
        if (cr % cd != 0)
            throw InexactDivisionError("exact_div: nonzero remainder (coefficient)");
        Exponent eq{er.a - ed.a, er.b - ed.b};
        if (eq.a < t_lo || eq.a > t_hi || eq.b < q_lo || eq.b > q_hi)
            throw InexactDivisionError("exact_div: nonzero remainder (support)");
        LaurentPoly term = LaurentPoly::term(cr / cd, eq.a, eq.b);
        quot += term;
        r -= term * d;
    }
    return quot;
}

}  // namespace braidrep
