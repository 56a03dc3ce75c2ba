#pragma once

#include <array>
#include <map>

#include "braidrep/lk.hpp"

namespace braidrep {

/// Λ-linear combination of standard dual forks Σ c_{i,j}·X*_{i,j}.
struct DualForkCoords {
    int n = 2;
    std::map<std::pair<int, int>, LaurentPoly> coeffs;  // no zero values stored

    void add(int i, int j, const LaurentPoly& c);
    bool operator==(const DualForkCoords&) const = default;
};

/// Λ-linear combination of standard biforks Σ c·X*_{i,j}X_{k,l}; keys are
/// (i, j, k, l).
struct BiforkCoords {
    int n = 2;
    std::map<std::array<int, 4>, LaurentPoly> coeffs;

    void add(int i, int j, int k, int l, const LaurentPoly& c);
    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const BiforkCoords&) const = default;
};

/// Linear extension of σ_m^{sign}·X*_{i,j} to dual-fork combinations.
DualForkCoords left_act_generator(int sign, int m, const DualForkCoords& d);

/// σ_m^{sign} acting on the dual-fork (left) index of every basis bifork.
BiforkCoords left_act_generator(int sign, int m, const BiforkCoords& c);

/// X*_{i,j}X_{k,l}·σ_m^{sign}: the representation's row formula applied to
/// the fork (right) index.
BiforkCoords right_act_generator(int sign, int m, const BiforkCoords& c);

/// Coordinates of β·X*_{1,2}X_{1,2}·γ in the standard-bifork basis.
BiforkCoords expand(const BraidWord& beta, const BraidWord& gamma);

/// Structure-constant product via the closed-form pairing table.
BiforkCoords multiply(const BiforkCoords& u, const BiforkCoords& v);

/// Realization as an N×1 column / N×N matrix (the injective module map).
LambdaMatrix realize(const LKContext& ctx, const DualForkCoords& d);
LambdaMatrix realize(const LKContext& ctx, const BiforkCoords& c);

/// Lemma-style independence evidence: det J ≠ 0 plus random nonzero
/// coordinate vectors realizing to nonzero matrices.
bool linear_independence_check(int n, unsigned long seed = 0);

}  // namespace braidrep
