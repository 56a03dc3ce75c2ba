#include "braidrep/matrix.hpp"

#include <json.hpp>

#include <stdexcept>

namespace braidrep {

LambdaMatrix::LambdaMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols) {}

LambdaMatrix LambdaMatrix::identity(std::size_t n) {
    LambdaMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly(1);
    return m;
}

bool LambdaMatrix::is_zero() const {
    for (const auto& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

LambdaMatrix operator*(const LambdaMatrix& a, const LambdaMatrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product: dimension mismatch");
    LambdaMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const LaurentPoly& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const LaurentPoly& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

LambdaMatrix operator+(const LambdaMatrix& a, const LambdaMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sum: dimension mismatch");
    LambdaMatrix out = a;
    for (std::size_t i = 0; i < out.e_.size(); ++i) out.e_[i] += b.e_[i];
    return out;
}

LambdaMatrix operator-(const LambdaMatrix& a, const LambdaMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix difference: dimension mismatch");
    LambdaMatrix out = a;
    for (std::size_t i = 0; i < out.e_.size(); ++i) out.e_[i] -= b.e_[i];
    return out;
}

LambdaMatrix operator*(const LaurentPoly& s, const LambdaMatrix& a) {
    LambdaMatrix out = a;
    for (auto& p : out.e_) p = s * p;
    return out;
}

LambdaMatrix LambdaMatrix::transpose() const {
    LambdaMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

LambdaMatrix LambdaMatrix::bar() const {
    LambdaMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i].bar();
    return out;
}

namespace {

// Fraction-free Bareiss determinant over an integral domain. Ring needs
// default-construction to zero, is_zero, +,-,*, and an exact_div with
// hard failure on nonzero remainder.
template <typename Ring, typename ExactDiv>
Ring bareiss_det(std::vector<Ring> m, std::size_t n, ExactDiv div) {
    if (n == 0) throw std::invalid_argument("determinant: empty matrix");
    auto at = [&](std::size_t i, std::size_t j) -> Ring& { return m[i * n + j]; };
    int sign = 1;
    Ring prev{};  // previous pivot, the exact divisor; 1 at the start
    bool have_prev = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && at(piv, k).is_zero()) ++piv;
        if (piv == n) return Ring{};  // singular
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Ring num = at(k, k) * at(i, j) - at(i, k) * at(k, j);
                at(i, j) = have_prev ? div(num, prev) : std::move(num);
            }
            at(i, k) = Ring{};
        }
        prev = at(k, k);
        have_prev = true;
    }
    Ring det = at(n - 1, n - 1);
    if (sign < 0) det = Ring{} - det;
    return det;
}

// Dense polynomial in z with Λ coefficients; the scratch ring for char_poly.
struct ZPoly {
    std::vector<LaurentPoly> c;  // c[k] multiplies z^k; trailing zeros trimmed

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }

    friend ZPoly operator+(const ZPoly& a, const ZPoly& b) {
        ZPoly r = a;
        if (r.c.size() < b.c.size()) r.c.resize(b.c.size());
        for (std::size_t k = 0; k < b.c.size(); ++k) r.c[k] += b.c[k];
        r.trim();
        return r;
    }
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b) {
        ZPoly r = a;
        if (r.c.size() < b.c.size()) r.c.resize(b.c.size());
        for (std::size_t k = 0; k < b.c.size(); ++k) r.c[k] -= b.c[k];
        r.trim();
        return r;
    }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        ZPoly r;
        r.c.resize(a.c.size() + b.c.size() - 1);
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j) {
                if (b.c[j].is_zero()) continue;
                r.c[i + j] += a.c[i] * b.c[j];
            }
        }
        r.trim();
        return r;
    }
};

ZPoly zpoly_exact_div(const ZPoly& p, const ZPoly& d) {
    if (d.is_zero()) throw InexactDivisionError("char_poly: division by zero");
    ZPoly r = p;
    ZPoly quot;
    if (p.is_zero()) return quot;
    if (r.c.size() < d.c.size())
        throw InexactDivisionError("char_poly: nonzero remainder (degree)");
    quot.c.resize(r.c.size() - d.c.size() + 1);
    while (!r.is_zero() && r.c.size() >= d.c.size()) {
        std::size_t k = r.c.size() - d.c.size();
        LaurentPoly lead = exact_div(r.c.back(), d.c.back());
        quot.c[k] = lead;
        for (std::size_t j = 0; j < d.c.size(); ++j) r.c[k + j] -= lead * d.c[j];
        r.trim();
    }
    if (!r.is_zero())
        throw InexactDivisionError("char_poly: nonzero remainder");
    quot.trim();
    return quot;
}

}  // namespace

LaurentPoly LambdaMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
    return bareiss_det<LaurentPoly>(
        e_, rows_, [](const LaurentPoly& a, const LaurentPoly& b) { return exact_div(a, b); });
}

CharPoly char_poly(const LambdaMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: matrix not square");
    const std::size_t n = m.rows();
    std::vector<ZPoly> zm(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ZPoly& p = zm[i * n + j];
            p.c.push_back(LaurentPoly() - m.at(i, j));
            if (i == j) p.c.push_back(LaurentPoly(1));
            p.trim();
        }
    ZPoly det = bareiss_det<ZPoly>(std::move(zm), n, zpoly_exact_div);
    CharPoly out;
    out.coeffs.assign(n + 1, LaurentPoly());
    for (std::size_t k = 0; k < det.c.size(); ++k) out.coeffs[k] = det.c[k];
    return out;
}

std::vector<mpq_class> LambdaMatrix::eval(const mpq_class& t0, const mpq_class& q0) const {
    std::vector<mpq_class> out(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) out[i] = e_[i].eval(t0, q0);
    return out;
}

LambdaMatrix LambdaMatrix::derivative(int k, int l) const {
    if (k < 0 || l < 0) throw std::invalid_argument("derivative: negative order");
    LambdaMatrix out = *this;
    for (auto& p : out.e_) {
        for (int r = 0; r < k; ++r) p = p.derivative(Var::t);
        for (int r = 0; r < l; ++r) p = p.derivative(Var::q);
    }
    return out;
}

std::string LambdaMatrix::to_json() const {
    nlohmann::ordered_json j;
    j["rows"] = rows_;
    j["cols"] = cols_;
    auto entries = nlohmann::ordered_json::array();
    for (const auto& p : e_) entries.push_back(p.str());
    j["entries"] = std::move(entries);
    return j.dump();
}

LambdaMatrix LambdaMatrix::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    LambdaMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    const auto& entries = j.at("entries");
    if (entries.size() != m.e_.size())
        throw std::invalid_argument("matrix record: entry count mismatch");
    for (std::size_t i = 0; i < m.e_.size(); ++i)
        m.e_[i] = LaurentPoly::parse(entries[i].get<std::string>());
    return m;
}

std::string CharPoly::to_json() const {
    nlohmann::ordered_json j;
    j["degree"] = degree();
    auto cs = nlohmann::ordered_json::array();
    for (const auto& p : coeffs) cs.push_back(p.str());
    j["coeffs"] = std::move(cs);
    return j.dump();
}

bool charpoly_equal_up_to_units(const CharPoly& f, const CharPoly& g) {
    if (f.coeffs.size() != g.coeffs.size() || f.coeffs.empty())
        throw std::invalid_argument("charpoly_equal_up_to_units: degree mismatch");
    const std::size_t n = f.coeffs.size();
    // h(z) = z^N f(z^{-1}, t^{-1}, q^{-1}): reversed, barred coefficient list.
    std::vector<LaurentPoly> h(n);
    for (std::size_t k = 0; k < n; ++k) h[k] = f.coeffs[n - 1 - k].bar();

    std::size_t ref = 0;
    while (ref < n && g.coeffs[ref].is_zero()) ++ref;
    if (ref == n) {
        for (const auto& p : h)
            if (!p.is_zero()) return false;
        return true;
    }
    if (h[ref].is_zero()) return false;
    auto [gh, ug] = g.coeffs[ref].normalize_up_to_units();
    auto [hh, uh] = h[ref].normalize_up_to_units();
    if (gh != hh) return false;
    // h = u·g with u = uh / ug.
    UnitMonomial u{uh.sign * ug.sign, uh.a - ug.a, uh.b - ug.b};
    for (std::size_t k = 0; k < n; ++k)
        if (h[k] != g.coeffs[k].times_unit(u)) return false;
    return true;
}

}  // namespace braidrep
