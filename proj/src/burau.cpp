#include "braidrep/burau.hpp"

#include <cstdlib>
#include <stdexcept>

namespace braidrep {

namespace {

LaurentPoly T(long c, long a) { return LaurentPoly::term(c, a, 0); }

}  // namespace

BurauContext::BurauContext(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("BurauContext: need n >= 2");
    const std::size_t d = dim();

    // B(σ1) = I + e_{1,2} - (1+t) e_{1,1}; at n=2 the e_{1,2} term is out of
    // range and the matrix degenerates to [-t]. The e_{1,2} coefficient must
    // be 1 for consistency with B(δ_n): only then does δ_n^{-1}σ_1δ_n map to
    // the standard B(σ_2) and B(δ_n) factor as B(σ_{n-1})⋯B(σ_1).
    LambdaMatrix b1 = LambdaMatrix::identity(d);
    b1.at(0, 0) = T(-1, 1);
    if (d > 1) b1.at(0, 1) = LaurentPoly(1);

    LambdaMatrix b1_inv = LambdaMatrix::identity(d);
    b1_inv.at(0, 0) = T(-1, -1);
    if (d > 1) b1_inv.at(0, 1) = T(1, -1);

    // B(δ_n) = -t^{n-1} e_{n-1,1} + Σ_{i<=n-2} (-t^i e_{i,1} + e_{i,i+1})
    LambdaMatrix delta(d, d);
    for (std::size_t i = 0; i + 1 < d; ++i) {
        delta.at(i, 0) = T(-1, static_cast<long>(i) + 1);
        delta.at(i, i + 1) = LaurentPoly(1);
    }
    delta.at(d - 1, 0) = T(-1, static_cast<long>(d));

    // Closed-form inverse: if y = B(δ)x then x_1 = -t^{1-n} y_{n-1} and
    // x_{i+1} = y_i - t^{i-n+1} y_{n-1}.
    LambdaMatrix delta_inv(d, d);
    delta_inv.at(0, d - 1) = T(-1, 1 - static_cast<long>(n));
    for (std::size_t i = 0; i + 1 < d; ++i) {
        delta_inv.at(i + 1, i) = LaurentPoly(1);
        delta_inv.at(i + 1, d - 1) = T(-1, static_cast<long>(i) + 2 - n);
    }

    LambdaMatrix conj = LambdaMatrix::identity(d);      // δ^{m-1}
    LambdaMatrix conj_inv = LambdaMatrix::identity(d);  // δ^{-(m-1)}
    for (int m = 1; m < n; ++m) {
        gen_.push_back(conj_inv * b1 * conj);
        gen_inv_.push_back(conj_inv * b1_inv * conj);
        conj = conj * delta;
        conj_inv = delta_inv * conj_inv;
    }

    J0_ = LambdaMatrix(d, d);
    const LambdaMatrix id = LambdaMatrix::identity(d);
    for (int m = 1; m < n; ++m) J0_ = J0_ + (gen_[m - 1] - id);

    for (const auto& g : gen_)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (!g.at(i, j).q_free())
                    throw std::logic_error("BurauContext: q leaked into a Burau matrix");
}

const LambdaMatrix& BurauContext::generator(int m, int sign) const {
    if (m < 1 || m >= n_) throw std::out_of_range("Burau generator index out of range");
    return sign > 0 ? gen_[m - 1] : gen_inv_[m - 1];
}

LambdaMatrix BurauContext::matrix(const BraidWord& w) const {
    if (w.n != n_) throw std::invalid_argument("braid word strand count mismatch");
    LambdaMatrix m = LambdaMatrix::identity(dim());
    for (int l : w.letters) m = m * generator(std::abs(l), l > 0 ? +1 : -1);
    return m;
}

bool BurauContext::check_squier_unitary(const BraidWord& w) const {
    LambdaMatrix b = matrix(w);
    return b.conj_transpose() * J0_ * b == J0_;
}

bool BurauContext::skein_action_check(int i, int j) const {
    if (i < 1 || i >= n_ || j < 1 || j >= n_)
        throw std::out_of_range("skein_action_check: index out of range");
    LaurentPoly lhs = gen_[i - 1].at(i - 1, j - 1);
    if (i == j) lhs -= LaurentPoly(1);
    return lhs == J0_.at(i - 1, j - 1);
}

}  // namespace braidrep
