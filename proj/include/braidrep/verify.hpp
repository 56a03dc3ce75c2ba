#pragma once

#include <random>
#include <string>
#include <vector>

#include "braidrep/braid.hpp"

namespace braidrep {

BraidWord random_word(int n, int max_len, std::mt19937_64& rng);

struct VerifyOptions {
    int max_n = 5;
    unsigned long seed = 0;
    int trials = 25;
    int max_word_length = 12;
    bool mutate = false;  // fault injection: flip one sign in K(σ1)
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // counterexample word or note on failure
};

/// Runs the full theorem suite (unitarity, cubic, reversal, Squier,
/// pairing-table vs matrix J, band formula, charpoly symmetry, finite type)
/// in declaration order; deterministic for a fixed (options, seed).
std::vector<CheckResult> run_verification(const VerifyOptions& opt);

}  // namespace braidrep
