#pragma once

#include <string>
#include <vector>

namespace braidrep {

/// A braid group element as an unreduced word in signed Artin generators.
/// Letter +m stands for σ_m, -m for σ_m^{-1}, 1 ≤ m ≤ n-1.
struct BraidWord {
    int n = 2;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int strands, std::vector<int> ls);

    bool operator==(const BraidWord&) const = default;
};

BraidWord concat(const BraidWord& u, const BraidWord& w);
BraidWord reverse(const BraidWord& w);
BraidWord inverse(const BraidWord& w);
long exponent_sum(const BraidWord& w);

/// Image of w under B_n → S_n, σ_m ↦ (m, m+1). Letters act left to right:
/// perm[x-1] is the image of x under the composite. 1-based values.
std::vector<int> underlying_permutation(const BraidWord& w);

/// b(i,j) = (2n-i)(i-1)/2 + (j-i), the lexicographic position of the double
/// index (i,j), 1-based in {1, …, n(n-1)/2}.
int index_bijection(int n, int i, int j);
std::pair<int, int> index_bijection_inverse(int n, int lambda);

/// The permutation braid A_{π(i,j)} = (σ_{i-1}⋯σ_1)(σ_{j-1}⋯σ_2).
BraidWord permutation_braid(int n, int i, int j);

/// The half twist Δ_n = (σ_1)(σ_2σ_1)⋯(σ_{n-1}⋯σ_1).
BraidWord half_twist(int n);

/// The band generator b_{i,j} = A_{π(i,j)} σ_1 A_{π(i,j)}^{-1}.
BraidWord band_generator(int n, int i, int j);

/// Word grammar: whitespace-separated signed integers, e.g. "1 1 2 -1 -1 -2".
BraidWord parse_word(int n, const std::string& text);
std::string format_word(const BraidWord& w);

}  // namespace braidrep
