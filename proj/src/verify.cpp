#include "braidrep/verify.hpp"

#include <cstdlib>

#include "braidrep/bifork.hpp"
#include "braidrep/burau.hpp"
#include "braidrep/finite_type.hpp"
#include "braidrep/lk.hpp"

namespace braidrep {

BraidWord random_word(int n, int max_len, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> gen(1, n - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<int> ls;
    int k = len(rng);
    for (int x = 0; x < k; ++x) ls.push_back(gen(rng) * (coin(rng) ? 1 : -1));
    return BraidWord(n, std::move(ls));
}

namespace {

bool is_permutation_matrix(const LambdaMatrix& m) {
    const LaurentPoly one(1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::size_t ones = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const LaurentPoly& e = m.at(i, j);
            if (e == one)
                ++ones;
            else if (!e.is_zero())
                return false;
        }
        if (ones != 1) return false;
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::size_t ones = 0;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!m.at(i, j).is_zero()) ++ones;
        if (ones != 1) return false;
    }
    return true;
}

struct Suite {
    const VerifyOptions& opt;
    std::mt19937_64 rng;
    std::vector<CheckResult> results;
    std::vector<LKContext> ctxs;  // index n-2

    explicit Suite(const VerifyOptions& o) : opt(o), rng(o.seed) {
        for (int n = 2; n <= opt.max_n; ++n)
            ctxs.push_back(opt.mutate ? LKContext::with_mutation(n) : LKContext(n));
    }

    const LKContext& ctx(int n) const { return ctxs[n - 2]; }

    void record(const std::string& name, bool pass, const std::string& detail = "") {
        results.push_back({name, pass, pass ? "" : detail});
    }

    void unitarity() {
        for (int n = 2; n <= opt.max_n; ++n) {
            const LKContext& c = ctx(n);
            for (int m = 1; m < n; ++m)
                if (!c.check_unitary(BraidWord(n, {m}))) {
                    record("unitarity", false,
                           "n=" + std::to_string(n) + " word: " + std::to_string(m));
                    return;
                }
            for (int trial = 0; trial < opt.trials; ++trial) {
                BraidWord w = random_word(n, opt.max_word_length, rng);
                if (!c.check_unitary(w)) {
                    record("unitarity", false,
                           "n=" + std::to_string(n) + " word: " + format_word(w));
                    return;
                }
            }
        }
        record("unitarity", true);
    }

    void cubic() {
        for (int n = 2; n <= opt.max_n; ++n)
            for (int m = 1; m < n; ++m)
                if (!ctx(n).check_cubic(m)) {
                    record("cubic-relation", false,
                           "n=" + std::to_string(n) + " generator " + std::to_string(m));
                    return;
                }
        record("cubic-relation", true);
    }

    void reversal() {
        for (int n = 2; n <= opt.max_n; ++n) {
            const LKContext& c = ctx(n);
            const LambdaMatrix& R = c.reversal_R();
            if (!is_permutation_matrix(R * c.matrix(inverse(half_twist(n))))) {
                record("reversal", false, "n=" + std::to_string(n) + " R·K(Δ⁻¹) not a permutation");
                return;
            }
            for (int trial = 0; trial < opt.trials; ++trial) {
                BraidWord w = random_word(n, opt.max_word_length, rng);
                LambdaMatrix lhs = R * c.matrix(inverse(w));
                LambdaMatrix rhs = c.matrix(reverse(w)).bar() * R;
                if (lhs != rhs || !c.check_reversal(w)) {
                    record("reversal", false,
                           "n=" + std::to_string(n) + " word: " + format_word(w));
                    return;
                }
            }
        }
        record("reversal", true);
    }

    void squier() {
        for (int n = 2; n <= opt.max_n; ++n) {
            BurauContext c(n);
            for (int i = 1; i < n; ++i)
                for (int j = 1; j < n; ++j)
                    if (!c.skein_action_check(i, j)) {
                        record("squier", false, "n=" + std::to_string(n) + " row structure");
                        return;
                    }
            for (int trial = 0; trial < opt.trials; ++trial) {
                BraidWord w = random_word(n, opt.max_word_length, rng);
                if (!c.check_squier_unitary(w)) {
                    record("squier", false,
                           "n=" + std::to_string(n) + " word: " + format_word(w));
                    return;
                }
            }
        }
        record("squier", true);
    }

    void pairing_table() {
        for (int n = 2; n <= opt.max_n; ++n) {
            const LKContext& c = ctx(n);
            const LambdaMatrix& J = c.form_J();
            for (int lam = 1; lam <= static_cast<int>(c.dim()); ++lam)
                for (int mu = 1; mu <= static_cast<int>(c.dim()); ++mu) {
                    auto [k, l] = index_bijection_inverse(n, lam);
                    auto [i, j] = index_bijection_inverse(n, mu);
                    if (J.at(lam - 1, mu - 1) != pairing_table_entry(n, k, l, i, j)) {
                        record("pairing-table", false,
                               "n=" + std::to_string(n) + " entry (" + std::to_string(lam) +
                                   "," + std::to_string(mu) + ")");
                        return;
                    }
                }
            if (c.form_J_band() != J) {
                record("pairing-table", false, "n=" + std::to_string(n) + " band formula");
                return;
            }
        }
        record("pairing-table", true);
    }

    void charpoly_symmetry() {
        int cap = std::min(opt.max_n, 4);
        for (int n = 2; n <= cap; ++n) {
            const LKContext& c = ctx(n);
            for (int trial = 0; trial < opt.trials; ++trial) {
                BraidWord w = random_word(n, opt.max_word_length, rng);
                CharPoly f = c.charpoly(w);
                if (!charpoly_equal_up_to_units(f, f)) {
                    record("charpoly-symmetry", false,
                           "n=" + std::to_string(n) + " word: " + format_word(w));
                    return;
                }
                // Cleared identity det(K)·z^N·f(z⁻¹,t⁻¹,q⁻¹) = (-1)^N f.
                LaurentPoly det = c.det_matrix(w);
                std::size_t N = f.degree();
                bool ok = true;
                for (std::size_t k = 0; k <= N && ok; ++k) {
                    LaurentPoly lhs = det * f.coeffs[N - k].bar();
                    LaurentPoly rhs = (N % 2 == 0) ? f.coeffs[k] : LaurentPoly() - f.coeffs[k];
                    ok = lhs == rhs;
                }
                if (!ok) {
                    record("charpoly-symmetry", false,
                           "n=" + std::to_string(n) + " cleared identity, word: " + format_word(w));
                    return;
                }
            }
        }
        record("charpoly-symmetry", true);
    }

    void finite_type() {
        int n = std::min(opt.max_n, 3);
        const LKContext& c = ctx(n);
        for (int depth = 1; depth <= 3; ++depth) {
            std::vector<IdealSample> samples;
            for (int s = 0; s < std::max(1, opt.trials / 2); ++s)
                samples.push_back(make_ideal_sample(n, depth, 3, rng));
            int order = depth - 1;
            for (int k = 0; k <= order; ++k) {
                int l = order - k;
                if (!finite_type_check(c, samples, k, l)) {
                    record("finite-type", false,
                           "depth " + std::to_string(depth) + " order (" + std::to_string(k) +
                               "," + std::to_string(l) + ")");
                    return;
                }
            }
        }
        record("finite-type", true);
    }
};

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
    Suite s(opt);
    s.unitarity();
    s.cubic();
    s.reversal();
    s.squier();
    s.pairing_table();
    s.charpoly_symmetry();
    s.finite_type();
    return std::move(s.results);
}

}  // namespace braidrep
