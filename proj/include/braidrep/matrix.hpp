#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "braidrep/laurent.hpp"

namespace braidrep {

/// Dense matrix over Λ with exact entries.
class LambdaMatrix {
public:
    LambdaMatrix() = default;
    LambdaMatrix(std::size_t rows, std::size_t cols);
    static LambdaMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    LaurentPoly& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const LaurentPoly& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    bool operator==(const LambdaMatrix&) const = default;
    bool is_zero() const;

    friend LambdaMatrix operator*(const LambdaMatrix& a, const LambdaMatrix& b);
    friend LambdaMatrix operator+(const LambdaMatrix& a, const LambdaMatrix& b);
    friend LambdaMatrix operator-(const LambdaMatrix& a, const LambdaMatrix& b);
    friend LambdaMatrix operator*(const LaurentPoly& s, const LambdaMatrix& a);

    LambdaMatrix transpose() const;
    LambdaMatrix bar() const;
    /// Conjugate transpose M(t^{-1}, q^{-1})^T.
    LambdaMatrix conj_transpose() const { return bar().transpose(); }

    /// Exact determinant via fraction-free Bareiss elimination.
    LaurentPoly determinant() const;

    /// Entrywise evaluation; exact rationals, row-major.
    std::vector<mpq_class> eval(const mpq_class& t0, const mpq_class& q0) const;

    /// Entrywise k-fold t-derivative and l-fold q-derivative.
    LambdaMatrix derivative(int k, int l) const;

    /// Stable machine-readable record {rows, cols, entries:[…]} (row-major).
    std::string to_json() const;
    static LambdaMatrix from_json(const std::string& text);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<LaurentPoly> e_;
};

/// det(zI - M) as a monic polynomial in z over Λ; coeffs[k] multiplies z^k.
struct CharPoly {
    std::vector<LaurentPoly> coeffs;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    bool operator==(const CharPoly&) const = default;

    std::string to_json() const;
};

CharPoly char_poly(const LambdaMatrix& m);

/// Corollary-style symmetry comparison: clears z-denominators of
/// f(z^{-1}, t^{-1}, q^{-1}) by z^N, then tests equality with g up to one
/// global unit of Λ.
bool charpoly_equal_up_to_units(const CharPoly& f, const CharPoly& g);

}  // namespace braidrep
