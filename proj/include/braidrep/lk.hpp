#pragma once

#include <vector>

#include "braidrep/braid.hpp"
#include "braidrep/matrix.hpp"

namespace braidrep {

/// One term of a fork/dual-fork action: coefficient times the basis element
/// at the double index (i, j).
struct ForkTerm {
    int i, j;
    LaurentPoly coeff;
};

/// Coordinates of X_{i,j}·σ_m^{sign} in the standard fork basis (the six-case
/// row formula of the representation and its inverse counterpart).
std::vector<ForkTerm> fork_row_action(int n, int i, int j, int m, int sign);

/// Coordinates of σ_m^{sign}·X*_{i,j} in the standard dual-fork basis.
std::vector<ForkTerm> dual_fork_left_action(int n, int i, int j, int m, int sign);

/// The closed-form pairing X_{k,l}·X*_{i,j} (a scalar in Λ).
LaurentPoly pairing_table_entry(int n, int k, int l, int i, int j);

/// Immutable Lawrence–Krammer context for B_n: cached generator matrices,
/// the invariant form J, and the reversal matrices R and V.
class LKContext {
public:
    explicit LKContext(int n);

    /// Same context but with the (1,1) entry of K(σ_1) sign-flipped; a fault
    /// injection used to prove the verification harness is not vacuous.
    static LKContext with_mutation(int n);

    int n() const { return n_; }
    std::size_t dim() const { return dim_; }

    const LambdaMatrix& generator(int m, int sign) const;
    LambdaMatrix matrix(const BraidWord& w) const;

    /// det K(w), assembled from cached generator determinants (all units).
    LaurentPoly det_matrix(const BraidWord& w) const;

    /// The idempotent P = -K(σ1) + q·K(σ1^{-1}) + (1-q)·I; column b(1,2) is
    /// its only nonzero column and holds X*_{1,2}.
    LambdaMatrix bifork_projector() const;

    /// The column vector X*_{i,j} = K(A_{π(i,j)})·X*_{1,2} (N×1).
    LambdaMatrix dual_fork(int i, int j) const;

    /// J: column b(i,j) is the dual fork X*_{i,j}.
    const LambdaMatrix& form_J() const { return J_; }

    /// J as the band-generator sum Σ (I - K(b_{i,j}))(I + q·K(b_{i,j}^{-1})).
    LambdaMatrix form_J_band() const;

    /// Row b(i,j) of R is row b(n+1-j, n+1-i) of K(Δ_n).
    const LambdaMatrix& reversal_R() const { return R_; }
    /// V = bar(R·J).
    const LambdaMatrix& reversal_V() const { return V_; }

    /// K(w)·J·K(w)* == J, evaluated letter by letter.
    bool check_unitary(const BraidWord& w) const;
    /// (K - I)(K + qI)(K + tq^2 I) == 0 for K = K(σ_m).
    bool check_cubic(int m) const;
    /// K(w^{rev})·V == V·K(w)^T.
    bool check_reversal(const BraidWord& w) const;

    CharPoly charpoly(const BraidWord& w) const { return char_poly(matrix(w)); }

private:
    LKContext(int n, bool mutate);
    void check_word(const BraidWord& w) const;

    int n_;
    std::size_t dim_;
    std::vector<LambdaMatrix> gen_, gen_inv_;
    std::vector<LaurentPoly> gen_det_, gen_inv_det_;
    LambdaMatrix J_, R_, V_;
};

}  // namespace braidrep
