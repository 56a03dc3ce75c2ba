#pragma once

#include <vector>

#include "braidrep/braid.hpp"
#include "braidrep/matrix.hpp"

namespace braidrep {

/// Reduced Burau representation B_n → GL(n-1, Z[t^{±1}]). Entries live in
/// the q-exponent-0 slice of Λ; every output asserts q-freeness.
class BurauContext {
public:
    explicit BurauContext(int n);

    int n() const { return n_; }
    std::size_t dim() const { return static_cast<std::size_t>(n_) - 1; }

    const LambdaMatrix& generator(int m, int sign) const;
    LambdaMatrix matrix(const BraidWord& w) const;

    /// Squier's form J0 = Σ (B(σ_i) - I).
    const LambdaMatrix& squier_form() const { return J0_; }

    /// B(w)*·J0·B(w) == J0 (conjugate transpose in the single variable t).
    bool check_squier_unitary(const BraidWord& w) const;

    /// Entry (i,j) of B(σ_i) - I equals entry (i,j) of J0 (1-based).
    bool skein_action_check(int i, int j) const;

private:
    int n_;
    std::vector<LambdaMatrix> gen_, gen_inv_;
    LambdaMatrix J0_;
};

}  // namespace braidrep
