#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "braidrep/matrix.hpp"

using namespace braidrep;

namespace {

LaurentPoly P(long c, long a, long b) { return LaurentPoly::term(c, a, b); }

LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<long> expo(-2, 2);
    std::uniform_int_distribution<long> coeff(-5, 5);
    LaurentPoly p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) p += P(coeff(rng), expo(rng), expo(rng));
    return p;
}

LambdaMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
    LambdaMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_poly(rng);
    return m;
}

// Independent determinant oracle: cofactor expansion along the first row.
LaurentPoly cofactor_det(const LambdaMatrix& m) {
    std::size_t n = m.rows();
    if (n == 0) return LaurentPoly(1);
    if (n == 1) return m.at(0, 0);
    LaurentPoly det;
    for (std::size_t c = 0; c < n; ++c) {
        if (m.at(0, c).is_zero()) continue;
        LambdaMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j) {
                if (j == c) continue;
                minor.at(i - 1, jj++) = m.at(i, j);
            }
        LaurentPoly term = m.at(0, c) * cofactor_det(minor);
        det += (c % 2 == 0) ? term : -term;
    }
    return det;
}

// Dense polynomial in z with Λ coefficients, used only as a charpoly oracle.
using ZP = std::vector<LaurentPoly>;

ZP zp_trim(ZP p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

ZP zp_add(const ZP& a, const ZP& b) {
    ZP r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return zp_trim(r);
}

ZP zp_neg(const ZP& a) {
    ZP r = a;
    for (auto& c : r) c = -c;
    return r;
}

ZP zp_mul(const ZP& a, const ZP& b) {
    if (a.empty() || b.empty()) return {};
    ZP r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return zp_trim(r);
}

ZP zp_cofactor_det(const std::vector<ZP>& m, std::size_t n) {
    if (n == 0) return {LaurentPoly(1)};
    if (n == 1) return m[0];
    ZP det;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<ZP> minor;
        minor.reserve((n - 1) * (n - 1));
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) minor.push_back(m[i * n + j]);
        ZP term = zp_mul(m[c], zp_cofactor_det(minor, n - 1));
        det = zp_add(det, (c % 2 == 0) ? term : zp_neg(term));
    }
    return det;
}

// Charpoly oracle: cofactor expansion of det(zI - M) over Λ[z].
CharPoly cofactor_char_poly(const LambdaMatrix& m) {
    std::size_t n = m.rows();
    std::vector<ZP> zm(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ZP e = {-m.at(i, j)};
            if (i == j) e.push_back(LaurentPoly(1));
            zm[i * n + j] = zp_trim(e);
        }
    ZP det = zp_cofactor_det(zm, n);
    det.resize(n + 1);
    return CharPoly{det};
}

}  // namespace

TEST_CASE("arithmetic and structural operations") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        LambdaMatrix a = random_matrix(3, rng), b = random_matrix(3, rng),
                     c = random_matrix(3, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * LambdaMatrix::identity(3) == a);
        CHECK(LambdaMatrix::identity(3) * a == a);
        CHECK((a - a).is_zero());
        CHECK((a * b).transpose() == b.transpose() * a.transpose());
        CHECK((a * b).bar() == a.bar() * b.bar());
        CHECK((a * b).conj_transpose() == b.conj_transpose() * a.conj_transpose());
        CHECK(a.bar().bar() == a);
    }
}

TEST_CASE("Bareiss determinant equals the cofactor oracle up to 5x5") {
    std::mt19937_64 rng(29);
    for (std::size_t n = 1; n <= 5; ++n)
        for (int trial = 0; trial < (n <= 3 ? 25 : 8); ++trial) {
            LambdaMatrix m = random_matrix(n, rng);
            CHECK(m.determinant() == cofactor_det(m));
        }
    CHECK(LambdaMatrix::identity(4).determinant() == LaurentPoly(1));
}

TEST_CASE("determinant handles zero pivots and is multiplicative") {
    LambdaMatrix m(3, 3);
    // Zero in the (0,0) pivot position forces a row swap.
    m.at(0, 1) = LaurentPoly::t();
    m.at(1, 0) = LaurentPoly::q();
    m.at(2, 2) = LaurentPoly(1);
    CHECK(m.determinant() == -(LaurentPoly::t() * LaurentPoly::q()));

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        LambdaMatrix a = random_matrix(3, rng), b = random_matrix(3, rng);
        CHECK((a * b).determinant() == a.determinant() * b.determinant());
    }
}

TEST_CASE("charpoly equals the cofactor oracle up to 6x6") {
    std::mt19937_64 rng(37);
    for (std::size_t n = 1; n <= 6; ++n)
        for (int trial = 0; trial < (n <= 3 ? 15 : 4); ++trial) {
            LambdaMatrix m = random_matrix(n, rng);
            CHECK(char_poly(m) == cofactor_char_poly(m));
        }
}

TEST_CASE("charpoly coefficient identities") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 15; ++trial) {
        LambdaMatrix m = random_matrix(4, rng);
        CharPoly f = char_poly(m);
        REQUIRE(f.coeffs.size() == 5);
        CHECK(f.coeffs[4] == LaurentPoly(1));  // monic
        LaurentPoly trace;
        for (std::size_t i = 0; i < 4; ++i) trace += m.at(i, i);
        CHECK(f.coeffs[3] == -trace);
        CHECK(f.coeffs[0] == m.determinant());  // (-1)^4 det
    }
}

TEST_CASE("charpoly is a similarity invariant") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        LambdaMatrix m = random_matrix(3, rng);
        // Conjugate by an elementary transvection I + p·E_{0,1} (unit det).
        LambdaMatrix s = LambdaMatrix::identity(3), si = LambdaMatrix::identity(3);
        LaurentPoly p = random_poly(rng);
        s.at(0, 1) = p;
        si.at(0, 1) = -p;
        CHECK(char_poly(s * m * si) == char_poly(m));
    }
}

TEST_CASE("evaluation and derivatives are entrywise") {
    LambdaMatrix m(2, 2);
    m.at(0, 0) = P(1, 2, 0);   // t^2
    m.at(0, 1) = P(3, 0, -1);  // 3q^{-1}
    m.at(1, 1) = P(1, 1, 1);   // tq
    auto v = m.eval(2, 3);
    REQUIRE(v.size() == 4);
    CHECK(v[0] == 4);
    CHECK(v[1] == 1);
    CHECK(v[2] == 0);
    CHECK(v[3] == 6);
    LambdaMatrix d = m.derivative(1, 0);
    CHECK(d.at(0, 0) == P(2, 1, 0));
    CHECK(d.at(0, 1).is_zero());
    CHECK(d.at(1, 1) == P(1, 0, 1));
    LambdaMatrix dq = m.derivative(0, 1);
    CHECK(dq.at(0, 1) == P(-3, 0, -2));
}

TEST_CASE("json round trip") {
    std::mt19937_64 rng(53);
    LambdaMatrix m = random_matrix(3, rng);
    CHECK(LambdaMatrix::from_json(m.to_json()) == m);
    CHECK_THROWS(LambdaMatrix::from_json("{\"rows\": 1}"));
}

TEST_CASE("charpoly symmetry comparison") {
    // The comparator tests z^N·f(z^{-1}, t^{-1}, q^{-1}) == unit · g.
    // diag(t, t^{-1}) has the palindromic, bar-invariant charpoly
    // z^2 - (t + t^{-1})z + 1, so it compares equal to itself.
    LambdaMatrix m(2, 2);
    m.at(0, 0) = LaurentPoly::t();
    m.at(1, 1) = LaurentPoly::t(-1);
    CharPoly f = char_poly(m);
    CHECK(charpoly_equal_up_to_units(f, f));

    // A global unit twist of g must still compare equal.
    CharPoly g = f;
    UnitMonomial u{-1, 2, -1};
    for (auto& c : g.coeffs) c = c.times_unit(u);
    CHECK(charpoly_equal_up_to_units(f, g));

    // Perturbing a single coefficient must break the comparison.
    CharPoly bad = f;
    bad.coeffs[1] += LaurentPoly(1);
    CHECK_FALSE(charpoly_equal_up_to_units(f, bad));

    // A generic matrix has no such symmetry.
    std::mt19937_64 rng(59);
    LambdaMatrix r(2, 2);
    r.at(0, 0) = P(2, 1, 0);
    r.at(1, 1) = P(1, 0, 1);
    CharPoly h = char_poly(r);
    CHECK_FALSE(charpoly_equal_up_to_units(h, h));
}
