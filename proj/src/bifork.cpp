#include "braidrep/bifork.hpp"

#include <cstdlib>
#include <random>
#include <stdexcept>

namespace braidrep {

void DualForkCoords::add(int i, int j, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(i, j);
    auto [it, fresh] = coeffs.try_emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

void BiforkCoords::add(int i, int j, int k, int l, const LaurentPoly& c) {
    if (c.is_zero()) return;
    std::array<int, 4> key{i, j, k, l};
    auto [it, fresh] = coeffs.try_emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

DualForkCoords left_act_generator(int sign, int m, const DualForkCoords& d) {
    DualForkCoords out{d.n, {}};
    for (const auto& [ij, c] : d.coeffs)
        for (const auto& t : dual_fork_left_action(d.n, ij.first, ij.second, m, sign))
            out.add(t.i, t.j, c * t.coeff);
    return out;
}

BiforkCoords left_act_generator(int sign, int m, const BiforkCoords& c) {
    BiforkCoords out{c.n, {}};
    for (const auto& [key, coeff] : c.coeffs)
        for (const auto& t : dual_fork_left_action(c.n, key[0], key[1], m, sign))
            out.add(t.i, t.j, key[2], key[3], coeff * t.coeff);
    return out;
}

BiforkCoords right_act_generator(int sign, int m, const BiforkCoords& c) {
    BiforkCoords out{c.n, {}};
    for (const auto& [key, coeff] : c.coeffs)
        for (const auto& t : fork_row_action(c.n, key[2], key[3], m, sign))
            out.add(key[0], key[1], t.i, t.j, coeff * t.coeff);
    return out;
}

BiforkCoords expand(const BraidWord& beta, const BraidWord& gamma) {
    if (beta.n != gamma.n)
        throw std::invalid_argument("expand: strand counts differ");
    BiforkCoords c{beta.n, {}};
    c.add(1, 2, 1, 2, LaurentPoly(1));
    // β·(X*X)·γ: left letters applied innermost-first, right letters in order.
    for (auto it = beta.letters.rbegin(); it != beta.letters.rend(); ++it)
        c = left_act_generator(*it > 0 ? +1 : -1, std::abs(*it), c);
    for (int l : gamma.letters)
        c = right_act_generator(l > 0 ? +1 : -1, std::abs(l), c);
    return c;
}

BiforkCoords multiply(const BiforkCoords& u, const BiforkCoords& v) {
    if (u.n != v.n) throw std::invalid_argument("multiply: strand counts differ");
    BiforkCoords out{u.n, {}};
    for (const auto& [ku, cu] : u.coeffs)
        for (const auto& [kv, cv] : v.coeffs) {
            // (X*_{uv}X_{kl})(X*_{ij}X_{op}) = (X_{kl}X*_{ij})·X*_{uv}X_{op}
            LaurentPoly s = pairing_table_entry(u.n, ku[2], ku[3], kv[0], kv[1]);
            if (s.is_zero()) continue;
            out.add(ku[0], ku[1], kv[2], kv[3], cu * cv * s);
        }
    return out;
}

LambdaMatrix realize(const LKContext& ctx, const DualForkCoords& d) {
    if (ctx.n() != d.n) throw std::invalid_argument("realize: strand count mismatch");
    LambdaMatrix col(ctx.dim(), 1);
    for (const auto& [ij, c] : d.coeffs) {
        LambdaMatrix f = ctx.dual_fork(ij.first, ij.second);
        for (std::size_t r = 0; r < ctx.dim(); ++r) col.at(r, 0) += c * f.at(r, 0);
    }
    return col;
}

LambdaMatrix realize(const LKContext& ctx, const BiforkCoords& c) {
    if (ctx.n() != c.n) throw std::invalid_argument("realize: strand count mismatch");
    LambdaMatrix m(ctx.dim(), ctx.dim());
    for (const auto& [key, coeff] : c.coeffs) {
        LambdaMatrix f = ctx.dual_fork(key[0], key[1]);
        std::size_t colidx = index_bijection(c.n, key[2], key[3]) - 1;
        for (std::size_t r = 0; r < ctx.dim(); ++r)
            m.at(r, colidx) += coeff * f.at(r, 0);
    }
    return m;
}

bool linear_independence_check(int n, unsigned long seed) {
    if (n > 5) throw std::invalid_argument("linear_independence_check: n must be <= 5");
    LKContext ctx(n);
    if (ctx.form_J().determinant().is_zero()) return false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, n), small(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        BiforkCoords c{n, {}};
        for (int term = 0; term < 4; ++term) {
            int i = pick(rng), j = pick(rng), k = pick(rng), l = pick(rng);
            if (i == j || k == l) continue;
            if (i > j) std::swap(i, j);
            if (k > l) std::swap(k, l);
            c.add(i, j, k, l, LaurentPoly::term(small(rng), small(rng), small(rng)));
        }
        if (c.is_zero()) continue;
        if (realize(ctx, c).is_zero()) return false;
    }
    return true;
}

}  // namespace braidrep
