#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace braidrep {

/// Thrown by exact_div when the divisor does not divide exactly.
/// A nonzero remainder inside Bareiss elimination is an internal bug,
/// so callers must never swallow this.
struct InexactDivisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Var { t, q };

/// Exponent pair (a, b) of a monomial t^a q^b, ordered lexicographically
/// (t-exponent first).
struct Exponent {
    long a = 0;
    long b = 0;
    auto operator<=>(const Exponent&) const = default;
};

/// A unit ±t^a q^b of the Laurent ring.
struct UnitMonomial {
    int sign = 1;  // ±1
    long a = 0;
    long b = 0;

    UnitMonomial inverse() const { return {sign, -a, -b}; }
    bool operator==(const UnitMonomial&) const = default;
};

/// Sparse exact element of Λ = Z[t^{±1}, q^{±1}].
///
/// Invariant: the term map never stores a zero coefficient, so structural
/// equality of the maps is ring equality.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);
    LaurentPoly(const mpz_class& c);

    static LaurentPoly term(const mpz_class& c, long a, long b);
    static LaurentPoly t(long e = 1) { return term(1, e, 0); }
    static LaurentPoly q(long e = 1) { return term(1, 0, e); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponent, mpz_class>& terms() const { return terms_; }

    /// Coefficient of t^a q^b (zero if absent).
    mpz_class coeff(long a, long b) const;

    bool operator==(const LaurentPoly&) const = default;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& r);
    LaurentPoly& operator-=(const LaurentPoly& r);
    friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& r) { return p += r; }
    friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& r) { return p -= r; }
    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& r);
    LaurentPoly& operator*=(const LaurentPoly& r) { return *this = *this * r; }

    /// The bar involution t ↦ t^{-1}, q ↦ q^{-1}.
    LaurentPoly bar() const;

    /// Exact value at (t0, q0); both must be nonzero.
    mpq_class eval(const mpq_class& t0, const mpq_class& q0) const;

    /// Formal partial derivative with respect to t or q.
    LaurentPoly derivative(Var v) const;

    /// Multiply by the unit ±t^a q^b.
    LaurentPoly times_unit(const UnitMonomial& u) const;

    /// Canonical associate: returns (p̂, u) with *this = u·p̂, where the
    /// lexicographically smallest exponent of p̂ is (0,0) with positive
    /// coefficient. Throws std::domain_error on zero.
    std::pair<LaurentPoly, UnitMonomial> normalize_up_to_units() const;

    /// True if this is a unit ±t^a q^b; fills u when non-null.
    bool as_unit(UnitMonomial* u = nullptr) const;

    /// True if no q appears (element of Z[t^{±1}]).
    bool q_free() const;

    /// Deterministic textual form `c*t^a*q^b + ...`, terms in lexicographic
    /// exponent order; "0" for zero.
    std::string str() const;
    static LaurentPoly parse(const std::string& text);

private:
    void prune(std::map<Exponent, mpz_class>::iterator it);
    std::map<Exponent, mpz_class> terms_;
};

/// Exact quotient p/d in Λ; throws InexactDivisionError unless d divides p.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d);

}  // namespace braidrep
