#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidrep/burau.hpp"
#include "braidrep/verify.hpp"

using namespace braidrep;

namespace {

LaurentPoly T(long c, long a) { return LaurentPoly::term(c, a, 0); }

}  // namespace

TEST_CASE("golden matrices at n=2 and n=3") {
    BurauContext c2(2);
    REQUIRE(c2.dim() == 1);
    CHECK(c2.generator(1, +1).at(0, 0) == T(-1, 1));
    CHECK(c2.generator(1, -1).at(0, 0) == T(-1, -1));

    BurauContext c3(3);
    // B(σ1) = [[-t, 1], [0, 1]] and B(σ2) = [[1, 0], [t, -t]]
    LambdaMatrix b1(2, 2);
    b1.at(0, 0) = T(-1, 1);
    b1.at(0, 1) = LaurentPoly(1);
    b1.at(1, 1) = LaurentPoly(1);
    CHECK(c3.generator(1, +1) == b1);
    LambdaMatrix b2(2, 2);
    b2.at(0, 0) = LaurentPoly(1);
    b2.at(1, 0) = T(1, 1);
    b2.at(1, 1) = T(-1, 1);
    CHECK(c3.generator(2, +1) == b2);
    // B(δ_3) = [[-t, 1], [-t^2, 0]]
    LambdaMatrix d(2, 2);
    d.at(0, 0) = T(-1, 1);
    d.at(0, 1) = LaurentPoly(1);
    d.at(1, 0) = T(-1, 2);
    CHECK(c3.matrix(BraidWord(3, {2, 1})) == d);
}

TEST_CASE("generators invert and satisfy braid relations") {
    for (int n = 2; n <= 6; ++n) {
        BurauContext c(n);
        LambdaMatrix id = LambdaMatrix::identity(c.dim());
        for (int m = 1; m < n; ++m) {
            CHECK(c.generator(m, +1) * c.generator(m, -1) == id);
            CHECK(c.generator(m, -1) * c.generator(m, +1) == id);
        }
        for (int m = 1; m + 1 < n; ++m)
            CHECK(c.matrix(BraidWord(n, {m, m + 1, m})) ==
                  c.matrix(BraidWord(n, {m + 1, m, m + 1})));
        for (int m = 1; m < n; ++m)
            for (int k = m + 2; k < n; ++k)
                CHECK(c.generator(m, +1) * c.generator(k, +1) ==
                      c.generator(k, +1) * c.generator(m, +1));
    }
}

TEST_CASE("all matrices are q-free") {
    for (int n = 2; n <= 5; ++n) {
        BurauContext c(n);
        std::mt19937_64 rng(103);
        LambdaMatrix m = c.matrix(random_word(n, 10, rng));
        for (std::size_t i = 0; i < c.dim(); ++i)
            for (std::size_t j = 0; j < c.dim(); ++j) CHECK(m.at(i, j).q_free());
    }
}

TEST_CASE("Squier unitarity") {
    std::mt19937_64 rng(107);
    for (int n = 2; n <= 6; ++n) {
        BurauContext c(n);
        for (int m = 1; m < n; ++m) {
            CHECK(c.check_squier_unitary(BraidWord(n, {m})));
            CHECK(c.check_squier_unitary(BraidWord(n, {-m})));
        }
        for (int trial = 0; trial < 10; ++trial)
            CHECK(c.check_squier_unitary(random_word(n, 10, rng)));
    }
}

TEST_CASE("skein row structure of J0") {
    for (int n = 2; n <= 5; ++n) {
        BurauContext c(n);
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j) CHECK(c.skein_action_check(i, j));
        // Each B(σ_i) - I is supported on row i alone, so row i of J0 is
        // exactly row i of B(σ_i) - I.
        const LambdaMatrix& j0 = c.squier_form();
        LambdaMatrix id = LambdaMatrix::identity(c.dim());
        for (int m = 1; m < n; ++m) {
            LambdaMatrix diff = c.generator(m, +1) - id;
            for (std::size_t i = 0; i < c.dim(); ++i)
                for (std::size_t j = 0; j < c.dim(); ++j) {
                    if (i + 1 != static_cast<std::size_t>(m))
                        CHECK(diff.at(i, j).is_zero());
                    else
                        CHECK(diff.at(i, j) == j0.at(i, j));
                }
        }
        // Consistency of the two defining matrices: B(δ) is the product of
        // the generator images of δ = σ_{n-1}⋯σ_1.
        std::vector<int> letters;
        for (int m = n - 1; m >= 1; --m) letters.push_back(m);
        LambdaMatrix bdelta = c.matrix(BraidWord(n, letters));
        LambdaMatrix expected(c.dim(), c.dim());
        for (std::size_t i = 0; i + 1 < c.dim(); ++i) {
            expected.at(i, 0) = T(-1, static_cast<long>(i) + 1);
            expected.at(i, i + 1) = LaurentPoly(1);
        }
        expected.at(c.dim() - 1, 0) = T(-1, static_cast<long>(c.dim()));
        CHECK(bdelta == expected);
    }
}

TEST_CASE("J0 is nonsingular at t=0") {
    for (int n = 2; n <= 6; ++n) {
        BurauContext c(n);
        LaurentPoly det = c.squier_form().determinant();
        CHECK_FALSE(det.is_zero());
        CHECK(det.eval(mpq_class(0) + 1, 1) != 0);  // sanity: nonzero at t=1 too
        CHECK(det.coeff(0, 0) != 0);  // constant term = value at t=0
    }
}
