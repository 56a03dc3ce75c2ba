#include "braidrep/lk.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace braidrep {

namespace {

const LaurentPoly kOne(1);

LaurentPoly P(long c, long a, long b) { return LaurentPoly::term(c, a, b); }

void check_gen(int n, int m) {
    if (m < 1 || m >= n) throw std::out_of_range("generator index out of range");
}

}  // namespace

std::vector<ForkTerm> fork_row_action(int n, int i, int j, int m, int sign) {
    if (i < 1 || i >= j || j > n) throw std::out_of_range("fork_row_action: bad double index");
    check_gen(n, m);
    const LaurentPoly q = LaurentPoly::q();
    if (sign > 0) {
        if (m == i && j == i + 1)
            return {{i, j, P(-1, 1, 2)}};  // -t q^2
        if (m == i - 1)
            return {{i - 1, j, kOne}};
        if (m == j - 1 && i < m)
            return {{i, j - 1, kOne}};
        if (m == i)  // j > i+1 here
            return {{i + 1, j, q},
                    {i, j, kOne - q},
                    {i, i + 1, P(1, 1, 1) - P(1, 1, 2)}};  // tq(1-q)
        if (m == j)
            return {{i, j + 1, q},
                    {i, j, kOne - q},
                    {j, j + 1, P(-1, 0, 1) + P(1, 0, 2)}};  // -q(1-q)
        return {{i, j, kOne}};
    }
    // Inverse action X_{i,j}·σ_m^{-1}.
    if (m == i && j == i + 1)
        return {{i, j, P(-1, -1, -2)}};  // -t^{-1} q^{-2}
    if (m == i)  // j > i+1
        return {{i + 1, j, kOne}};
    if (m == j)
        return {{i, j + 1, kOne}};
    if (m == i - 1)
        return {{i - 1, j, P(1, 0, -1)},
                {i, j, kOne - P(1, 0, -1)},
                {i - 1, i, P(-1, 0, -1) + P(1, 0, -2)}};  // -q^{-1}(1-q^{-1})
    if (m == j - 1 && i < m)
        return {{i, j - 1, P(1, 0, -1)},
                {i, j, kOne - P(1, 0, -1)},
                {j - 1, j, P(1, -1, -1) - P(1, -1, -2)}};  // t^{-1}q^{-1}(1-q^{-1})
    return {{i, j, kOne}};
}

std::vector<ForkTerm> dual_fork_left_action(int n, int i, int j, int m, int sign) {
    // Duality: the coefficients of σ_m^{±1}·X* are the bar of the
    // σ_m^{∓1}-on-forks coefficients.
    auto terms = fork_row_action(n, i, j, m, -sign);
    for (auto& t : terms) t.coeff = t.coeff.bar();
    return terms;
}

LaurentPoly pairing_table_entry(int n, int k, int l, int i, int j) {
    if (i < 1 || i >= j || j > n || k < 1 || k >= l || l > n)
        throw std::out_of_range("pairing_table_entry: bad double index");
    const LaurentPoly q = LaurentPoly::q();
    if (i == k && j == l)
        return (P(-1, -1, 0) + q) * (P(1, 0, -1) + P(1, 1, 1));  // (-t^{-1}+q)(q^{-1}+qt)
    if (i == k)  // l != j
        return l < j ? P(1, -1, 0) - P(1, -1, -1)                // t^{-1}(1-q^{-1})
                     : P(-1, 1, 1) + P(1, 1, 2);                 // -tq(1-q), i=k<j<l
    if (j == l)
        return k < i ? P(1, -1, 0) - P(1, -1, -1)                // t^{-1}(1-q^{-1})
                     : P(-1, 1, 1) + P(1, 1, 2);                 // -tq(1-q), i<k<j=l
    if (j == k)
        return P(-1, 0, 0) + P(1, 0, -1);  // -(1-q^{-1})
    if (l == i)
        return P(1, 0, 1) - P(1, 0, 2);  // q(1-q)
    const LaurentPoly one_minus_q_sq = (kOne - q) * (kOne - q);
    if (k < i && i < l && l < j)
        return LaurentPoly() - one_minus_q_sq * (P(1, -1, -1) + kOne);  // -(1-q)^2(t^{-1}q^{-1}+1)
    if (i < k && k < j && j < l)
        return one_minus_q_sq * (P(1, 0, -1) + P(1, 1, 0));  // (1-q)^2(q^{-1}+t)
    // Disjoint or nested-on-one-side tines.
    assert(static_cast<long>(i - k) * (i - l) * (j - k) * (j - l) > 0);
    return LaurentPoly();
}

LKContext::LKContext(int n) : LKContext(n, false) {}

LKContext LKContext::with_mutation(int n) { return LKContext(n, true); }

LKContext::LKContext(int n, bool mutate) : n_(n) {
    if (n < 2) throw std::invalid_argument("LKContext: need n >= 2");
    dim_ = static_cast<std::size_t>(n) * (n - 1) / 2;

    for (int m = 1; m < n; ++m) {
        for (int sign : {+1, -1}) {
            LambdaMatrix g(dim_, dim_);
            for (int i = 1; i < n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    int row = index_bijection(n, i, j) - 1;
                    for (const auto& t : fork_row_action(n, i, j, m, sign))
                        g.at(row, index_bijection(n, t.i, t.j) - 1) += t.coeff;
                }
            (sign > 0 ? gen_ : gen_inv_).push_back(std::move(g));
        }
    }
    if (mutate) {
        LaurentPoly& e = gen_[0].at(0, 0);
        e = LaurentPoly() - e;
    }

    for (int m = 1; m < n; ++m) {
        LaurentPoly d = gen_[m - 1].determinant();
        UnitMonomial u;
        if (!d.as_unit(&u))
            throw std::logic_error("LKContext: generator determinant is not a unit");
        gen_det_.push_back(d);
        gen_inv_det_.push_back(kOne.times_unit(u.inverse()));
    }

    J_ = LambdaMatrix(dim_, dim_);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            LambdaMatrix col = dual_fork(i, j);
            int c = index_bijection(n, i, j) - 1;
            for (std::size_t r = 0; r < dim_; ++r) J_.at(r, c) = col.at(r, 0);
        }

    LambdaMatrix delta = matrix(half_twist(n));
    R_ = LambdaMatrix(dim_, dim_);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int row = index_bijection(n, i, j) - 1;
            int src = index_bijection(n, n + 1 - j, n + 1 - i) - 1;
            for (std::size_t c = 0; c < dim_; ++c) R_.at(row, c) = delta.at(src, c);
        }
    V_ = (R_ * J_).bar();
}

const LambdaMatrix& LKContext::generator(int m, int sign) const {
    check_gen(n_, m);
    return sign > 0 ? gen_[m - 1] : gen_inv_[m - 1];
}

void LKContext::check_word(const BraidWord& w) const {
    if (w.n != n_) throw std::invalid_argument("braid word strand count mismatch");
}

LambdaMatrix LKContext::matrix(const BraidWord& w) const {
    check_word(w);
    LambdaMatrix m = LambdaMatrix::identity(dim_);
    for (int l : w.letters) m = m * generator(std::abs(l), l > 0 ? +1 : -1);
    return m;
}

LaurentPoly LKContext::det_matrix(const BraidWord& w) const {
    check_word(w);
    LaurentPoly d = kOne;
    for (int l : w.letters)
        d = d * (l > 0 ? gen_det_[l - 1] : gen_inv_det_[-l - 1]);
    return d;
}

LambdaMatrix LKContext::bifork_projector() const {
    const LaurentPoly q = LaurentPoly::q();
    LambdaMatrix p = (LaurentPoly(-1) * gen_[0]) + (q * gen_inv_[0]);
    return p + ((kOne - q) * LambdaMatrix::identity(dim_));
}

LambdaMatrix LKContext::dual_fork(int i, int j) const {
    LambdaMatrix proj = bifork_projector();
    LambdaMatrix col(dim_, 1);
    for (std::size_t r = 0; r < dim_; ++r) col.at(r, 0) = proj.at(r, 0);
    return matrix(permutation_braid(n_, i, j)) * col;
}

LambdaMatrix LKContext::form_J_band() const {
    const LaurentPoly q = LaurentPoly::q();
    const LambdaMatrix id = LambdaMatrix::identity(dim_);
    LambdaMatrix sum(dim_, dim_);
    for (int i = 1; i < n_; ++i)
        for (int j = i + 1; j <= n_; ++j) {
            BraidWord b = band_generator(n_, i, j);
            LambdaMatrix kb = matrix(b);
            LambdaMatrix kbi = matrix(inverse(b));
            sum = sum + (id - kb) * (id + q * kbi);
        }
    return sum;
}

bool LKContext::check_unitary(const BraidWord& w) const {
    check_word(w);
    // K(w)·J·K(w)* associated letter by letter: with w = l1…lk,
    // S_k = J and S_{i-1} = K(l_i)·S_i·K(l_i)*.
    LambdaMatrix s = J_;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        const LambdaMatrix& g = generator(std::abs(*it), *it > 0 ? +1 : -1);
        s = g * s * g.conj_transpose();
    }
    return s == J_;
}

bool LKContext::check_cubic(int m) const {
    check_gen(n_, m);
    const LambdaMatrix& k = gen_[m - 1];
    const LambdaMatrix id = LambdaMatrix::identity(dim_);
    LambdaMatrix prod = (k - id) * (k + LaurentPoly::q() * id);
    prod = prod * (k + P(1, 1, 2) * id);  // K + t q^2 I
    return prod.is_zero();
}

bool LKContext::check_reversal(const BraidWord& w) const {
    check_word(w);
    LambdaMatrix kw = matrix(w);
    LambdaMatrix krev = matrix(reverse(w));
    return krev * V_ == V_ * kw.transpose();
}

}  // namespace braidrep
