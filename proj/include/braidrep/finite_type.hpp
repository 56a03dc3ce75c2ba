#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "braidrep/lk.hpp"

namespace braidrep {

/// Element of the integral group ring Z[B_n], keyed by the letter sequence.
struct GroupRingElement {
    int n = 2;
    std::map<std::vector<int>, mpz_class> terms;  // word letters -> coefficient

    void add(const BraidWord& w, const mpz_class& c);
    bool operator==(const GroupRingElement&) const = default;
};

GroupRingElement group_ring_word(const BraidWord& w);
GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);

/// K extended linearly to the group ring.
LambdaMatrix lk_of_group_ring(const LKContext& ctx, const GroupRingElement& e);

/// A sampled element of I^(depth): a product of depth factors
/// γ·(σ_m - σ_m^{-1})·γ′ with random sandwich words.
struct IdealSample {
    int depth = 0;
    GroupRingElement element;
};

IdealSample make_ideal_sample(int n, int depth, int max_sandwich_len, std::mt19937_64& rng);

/// Integer matrix, row-major.
struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<mpz_class> entries;
    bool operator==(const IntMatrix&) const = default;
    bool is_zero() const;
};

/// ∂^{k+l}/∂t^k ∂q^l of K(w) (or a group-ring combination), evaluated
/// exactly at (t,q) = (-1,1).
IntMatrix derivative_invariant(const LKContext& ctx, const BraidWord& w, int k, int l);
IntMatrix derivative_invariant(const LKContext& ctx, const GroupRingElement& e, int k, int l);

/// Minimal total degree of p expanded at t=-1+u, q=1+v; nullopt for p = 0.
/// Negative exponents are cleared by unit monomials first (value ∓1 ≠ 0 at
/// the basepoint, so the valuation is unchanged).
std::optional<long> lowest_degree_at_basepoint(const LaurentPoly& p);

/// Every entry of K(sample) has basepoint valuation ≥ k+l+1, equivalently
/// the (k,l) derivative invariant vanishes on the sample.
bool finite_type_check(const LKContext& ctx, const std::vector<IdealSample>& samples,
                       int k, int l);

}  // namespace braidrep
