#include "braidrep/finite_type.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidrep {

void GroupRingElement::add(const BraidWord& w, const mpz_class& c) {
    if (w.n != n) throw std::invalid_argument("GroupRingElement: strand count mismatch");
    if (c == 0) return;
    auto [it, fresh] = terms.try_emplace(w.letters, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

GroupRingElement group_ring_word(const BraidWord& w) {
    GroupRingElement e{w.n, {}};
    e.add(w, 1);
    return e;
}

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
    if (a.n != b.n) throw std::invalid_argument("group ring sum: strand count mismatch");
    GroupRingElement r = a;
    for (const auto& [w, c] : b.terms) r.add(BraidWord(a.n, w), c);
    return r;
}

GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
    if (a.n != b.n) throw std::invalid_argument("group ring difference: strand count mismatch");
    GroupRingElement r = a;
    for (const auto& [w, c] : b.terms) r.add(BraidWord(a.n, w), -c);
    return r;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    if (a.n != b.n) throw std::invalid_argument("group ring product: strand count mismatch");
    GroupRingElement r{a.n, {}};
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) {
            std::vector<int> w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add(BraidWord(a.n, std::move(w)), ca * cb);
        }
    return r;
}

LambdaMatrix lk_of_group_ring(const LKContext& ctx, const GroupRingElement& e) {
    if (ctx.n() != e.n) throw std::invalid_argument("lk_of_group_ring: strand count mismatch");
    LambdaMatrix sum(ctx.dim(), ctx.dim());
    for (const auto& [w, c] : e.terms)
        sum = sum + (LaurentPoly(c) * ctx.matrix(BraidWord(e.n, w)));
    return sum;
}

IdealSample make_ideal_sample(int n, int depth, int max_sandwich_len, std::mt19937_64& rng) {
    if (depth < 1) throw std::invalid_argument("make_ideal_sample: depth must be >= 1");
    std::uniform_int_distribution<int> gen(1, n - 1);
    std::uniform_int_distribution<int> len(0, max_sandwich_len);
    std::uniform_int_distribution<int> coin(0, 1);
    auto random_word = [&] {
        std::vector<int> ls;
        int k = len(rng);
        for (int x = 0; x < k; ++x) ls.push_back(gen(rng) * (coin(rng) ? 1 : -1));
        return BraidWord(n, std::move(ls));
    };

    GroupRingElement prod = group_ring_word(BraidWord(n, {}));
    for (int d = 0; d < depth; ++d) {
        int m = gen(rng);
        GroupRingElement diff =
            group_ring_word(BraidWord(n, {m})) - group_ring_word(BraidWord(n, {-m}));
        prod = prod * group_ring_word(random_word()) * diff * group_ring_word(random_word());
    }
    return {depth, std::move(prod)};
}

bool IntMatrix::is_zero() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const mpz_class& c) { return c == 0; });
}

namespace {

IntMatrix rational_to_int(std::size_t rows, std::size_t cols, const std::vector<mpq_class>& v) {
    IntMatrix m{rows, cols, {}};
    m.entries.reserve(v.size());
    for (const auto& q : v) {
        if (q.get_den() != 1)
            throw std::logic_error("derivative_invariant: non-integer value at (-1,1)");
        m.entries.push_back(q.get_num());
    }
    return m;
}

}  // namespace

IntMatrix derivative_invariant(const LKContext& ctx, const BraidWord& w, int k, int l) {
    LambdaMatrix d = ctx.matrix(w).derivative(k, l);
    return rational_to_int(ctx.dim(), ctx.dim(), d.eval(-1, 1));
}

IntMatrix derivative_invariant(const LKContext& ctx, const GroupRingElement& e, int k, int l) {
    LambdaMatrix d = lk_of_group_ring(ctx, e).derivative(k, l);
    return rational_to_int(ctx.dim(), ctx.dim(), d.eval(-1, 1));
}

std::optional<long> lowest_degree_at_basepoint(const LaurentPoly& p) {
    if (p.is_zero()) return std::nullopt;
    // Clear negative exponents by t^A q^B, then expand t = -1+u, q = 1+v
    // and take the minimal total (u,v)-degree of the nonzero part.
    long A = 0, B = 0;
    for (const auto& [e, c] : p.terms()) {
        A = std::max(A, -e.a);
        B = std::max(B, -e.b);
    }
    std::map<std::pair<long, long>, mpz_class> uv;
    for (const auto& [e, c] : p.terms()) {
        long a = e.a + A, b = e.b + B;
        // (-1+u)^a = Σ_k C(a,k)(-1)^{a-k} u^k ; (1+v)^b = Σ_m C(b,m) v^m
        std::vector<mpz_class> tu(a + 1), qv(b + 1);
        for (long k = 0; k <= a; ++k) {
            mpz_class bin;
            mpz_bin_uiui(bin.get_mpz_t(), a, k);
            tu[k] = ((a - k) % 2 == 0) ? bin : mpz_class(-bin);
        }
        for (long m = 0; m <= b; ++m)
            mpz_bin_uiui(qv[m].get_mpz_t(), b, m);
        for (long k = 0; k <= a; ++k) {
            if (tu[k] == 0) continue;
            for (long m = 0; m <= b; ++m) {
                if (qv[m] == 0) continue;
                auto [it, fresh] = uv.try_emplace({k, m}, c * tu[k] * qv[m]);
                if (!fresh) it->second += c * tu[k] * qv[m];
            }
        }
    }
    std::optional<long> best;
    for (const auto& [e, c] : uv) {
        if (c == 0) continue;
        long deg = e.first + e.second;
        if (!best || deg < *best) best = deg;
    }
    return best;
}

bool finite_type_check(const LKContext& ctx, const std::vector<IdealSample>& samples,
                       int k, int l) {
    for (const auto& s : samples) {
        if (s.depth < k + l + 1)
            throw std::invalid_argument("finite_type_check: sample depth too small");
        LambdaMatrix m = lk_of_group_ring(ctx, s.element);
        for (std::size_t r = 0; r < ctx.dim(); ++r)
            for (std::size_t c = 0; c < ctx.dim(); ++c) {
                auto deg = lowest_degree_at_basepoint(m.at(r, c));
                if (deg && *deg < s.depth) return false;
            }
        if (!derivative_invariant(ctx, s.element, k, l).is_zero()) return false;
    }
    return true;
}

}  // namespace braidrep
