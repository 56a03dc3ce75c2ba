#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "braidrep/bifork.hpp"
#include "braidrep/burau.hpp"
#include "braidrep/finite_type.hpp"
#include "braidrep/lk.hpp"
#include "braidrep/verify.hpp"

namespace {

using namespace braidrep;

constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitLimit = 3;

struct Options {
    int strands = 2;
    int max_strands = 8;
    std::string format = "text";
    unsigned long seed = 0;
    int trials = 25;
    int max_word_length = 12;
};

void print_matrix(const LambdaMatrix& m, const std::string& format) {
    if (format == "structured") {
        std::cout << m.to_json() << "\n";
        return;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) std::cout << " ; ";
            std::cout << m.at(i, j).str();
        }
        std::cout << "\n";
    }
}

void print_charpoly(const CharPoly& f, const std::string& format) {
    if (format == "structured") {
        std::cout << f.to_json() << "\n";
        return;
    }
    for (std::size_t k = 0; k < f.coeffs.size(); ++k)
        std::cout << "z^" << k << ": " << f.coeffs[k].str() << "\n";
}

BraidWord word_from_letters(int n, const std::vector<int>& letters) {
    return BraidWord(n, letters);
}

int check_cap(const Options& opt) {
    if (opt.strands < 2 || opt.strands > opt.max_strands) {
        std::cerr << "strand count " << opt.strands << " outside [2, " << opt.max_strands
                  << "] (raise --max-strands to override)\n";
        return kExitLimit;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Lawrence-Krammer / Burau braid representation toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--strands,-n", opt.strands, "strand count n");
    app.add_option("--max-strands", opt.max_strands, "dimension cap (default 8)");
    app.add_option("--format", opt.format, "output format: text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--seed", opt.seed, "random seed for verification runs");
    app.add_option("--trials", opt.trials, "random trials per check");
    app.add_option("--max-word-length", opt.max_word_length, "random word length bound");

    std::vector<int> letters, letters2;
    std::string left_text, right_text;
    bool mutate = false;
    int der_k = 0, der_l = 0, depth = 1;

    auto* lk = app.add_subcommand("lk", "Lawrence-Krammer matrix of a braid word");
    lk->add_option("letters", letters, "signed generator indices");
    auto* burau = app.add_subcommand("burau", "reduced Burau matrix of a braid word");
    burau->add_option("letters", letters, "signed generator indices");
    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial of K(w)");
    charpoly->add_option("letters", letters, "signed generator indices");
    app.add_subcommand("form-j", "the invariant sesquilinear form J");
    app.add_subcommand("r", "the reversal matrix R");
    app.add_subcommand("v", "the reversal matrix V = bar(R J)");
    auto* verify = app.add_subcommand("verify", "run the full theorem suite");
    verify->add_flag("--mutate", mutate, "fault injection: flip one sign in K(σ1)");
    app.add_subcommand("verify-squier", "run only the Burau/Squier checks");
    auto* dist = app.add_subcommand("distinguish", "compare two braid words");
    dist->add_option("--left", left_text, "first word")->required();
    dist->add_option("--right", right_text, "second word")->required();
    auto* expand_cmd = app.add_subcommand("expand-bifork",
                                          "expand β·X*_{1,2}X_{1,2}·γ in the standard basis");
    expand_cmd->add_option("--left", left_text, "word β")->required();
    expand_cmd->add_option("--right", right_text, "word γ")->required();
    auto* deriv = app.add_subcommand("derivative", "derivative invariant at (t,q)=(-1,1)");
    deriv->add_option("--k", der_k, "t-derivative order");
    deriv->add_option("--l", der_l, "q-derivative order");
    deriv->add_option("letters", letters, "signed generator indices");
    auto* ft = app.add_subcommand("finite-type-check", "randomized finite-type vanishing check");
    ft->add_option("--depth", depth, "ideal power depth")->required();
    ft->add_option("--k", der_k, "t-derivative order");
    ft->add_option("--l", der_l, "q-derivative order");

    // Allow the global options (--strands, --seed, ...) after a subcommand.
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }

    try {
        if (int rc = check_cap(opt)) return rc;
        const int n = opt.strands;

        if (lk->parsed()) {
            print_matrix(LKContext(n).matrix(word_from_letters(n, letters)), opt.format);
        } else if (burau->parsed()) {
            print_matrix(BurauContext(n).matrix(word_from_letters(n, letters)), opt.format);
        } else if (charpoly->parsed()) {
            print_charpoly(LKContext(n).charpoly(word_from_letters(n, letters)), opt.format);
        } else if (app.get_subcommand("form-j")->parsed()) {
            print_matrix(LKContext(n).form_J(), opt.format);
        } else if (app.get_subcommand("r")->parsed()) {
            print_matrix(LKContext(n).reversal_R(), opt.format);
        } else if (app.get_subcommand("v")->parsed()) {
            print_matrix(LKContext(n).reversal_V(), opt.format);
        } else if (verify->parsed()) {
            VerifyOptions vo{std::min(opt.strands > 2 ? opt.strands : 5, opt.max_strands),
                             opt.seed, opt.trials, opt.max_word_length, mutate};
            bool all = true;
            for (const auto& r : run_verification(vo)) {
                std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name;
                if (!r.pass) std::cout << "  counterexample: " << r.detail;
                std::cout << "\n";
                all = all && r.pass;
            }
            return all ? 0 : kExitFail;
        } else if (app.get_subcommand("verify-squier")->parsed()) {
            std::mt19937_64 rng(opt.seed);
            BurauContext c(n);
            bool all = true;
            for (int i = 1; i < n && all; ++i)
                for (int j = 1; j < n && all; ++j) all = c.skein_action_check(i, j);
            std::cout << (all ? "PASS" : "FAIL") << " squier-row-structure\n";
            bool uni = all;
            for (int trial = 0; trial < opt.trials && uni; ++trial)
                uni = c.check_squier_unitary(random_word(n, opt.max_word_length, rng));
            std::cout << (uni ? "PASS" : "FAIL") << " squier-unitarity\n";
            return (all && uni) ? 0 : kExitFail;
        } else if (dist->parsed()) {
            LKContext c(n);
            BraidWord w1 = parse_word(n, left_text), w2 = parse_word(n, right_text);
            bool same = c.matrix(w1) == c.matrix(w2);
            bool same_charpoly = c.charpoly(w1) == c.charpoly(w2);
            std::cout << "braids: " << (same ? "same" : "distinct") << "\n";
            std::cout << "charpoly: " << (same_charpoly ? "equal" : "different") << "\n";
            if (!same && same_charpoly)
                std::cout << "verdict: equal charpoly, distinct braids\n";
            else
                std::cout << "verdict: " << (same ? "same braid" : "distinguished by charpoly")
                          << "\n";
        } else if (expand_cmd->parsed()) {
            BiforkCoords c = expand(parse_word(n, left_text), parse_word(n, right_text));
            for (const auto& [key, coeff] : c.coeffs)
                std::cout << "(" << key[0] << "," << key[1] << "," << key[2] << "," << key[3]
                          << "): " << coeff.str() << "\n";
        } else if (deriv->parsed()) {
            IntMatrix m = derivative_invariant(LKContext(n), word_from_letters(n, letters),
                                               der_k, der_l);
            for (std::size_t i = 0; i < m.rows; ++i) {
                for (std::size_t j = 0; j < m.cols; ++j) {
                    if (j) std::cout << " ";
                    std::cout << m.entries[i * m.cols + j];
                }
                std::cout << "\n";
            }
        } else if (ft->parsed()) {
            if (depth < der_k + der_l + 1) {
                std::cerr << "depth must be at least k+l+1\n";
                return kExitParse;
            }
            std::mt19937_64 rng(opt.seed);
            LKContext c(n);
            std::vector<IdealSample> samples;
            for (int s = 0; s < opt.trials; ++s)
                samples.push_back(make_ideal_sample(n, depth, 3, rng));
            bool ok = finite_type_check(c, samples, der_k, der_l);
            std::cout << (ok ? "PASS" : "FAIL") << " finite-type depth=" << depth
                      << " k=" << der_k << " l=" << der_l << " trials=" << opt.trials << "\n";
            return ok ? 0 : kExitFail;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return 0;
}
