#include "braidrep/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace braidrep {

namespace {

void check_strands(int n) {
    if (n < 2) throw std::invalid_argument("BraidWord: strand count must be >= 2");
}

void check_pair(int n, int i, int j) {
    check_strands(n);
    if (i < 1 || i >= j || j > n)
        throw std::out_of_range("double index out of range: need 1 <= i < j <= n");
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<int> ls) : n(strands), letters(std::move(ls)) {
    check_strands(n);
    for (int l : letters)
        if (l == 0 || std::abs(l) >= n)
            throw std::invalid_argument("braid letter out of range");
}

BraidWord concat(const BraidWord& u, const BraidWord& w) {
    if (u.n != w.n) throw std::invalid_argument("concat: strand counts differ");
    BraidWord r = u;
    r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end());
    return r;
}

BraidWord reverse(const BraidWord& w) {
    BraidWord r = w;
    std::reverse(r.letters.begin(), r.letters.end());
    return r;
}

BraidWord inverse(const BraidWord& w) {
    BraidWord r = w;
    std::reverse(r.letters.begin(), r.letters.end());
    for (int& l : r.letters) l = -l;
    return r;
}

long exponent_sum(const BraidWord& w) {
    long s = 0;
    for (int l : w.letters) s += l > 0 ? 1 : -1;
    return s;
}

std::vector<int> underlying_permutation(const BraidWord& w) {
    std::vector<int> perm(w.n);
    std::iota(perm.begin(), perm.end(), 1);
    // perm[x-1] = image of x; applying letter m post-composes with (m, m+1)
    for (int l : w.letters) {
        int m = std::abs(l);
        for (int& v : perm) {
            if (v == m) v = m + 1;
            else if (v == m + 1) v = m;
        }
    }
    return perm;
}

int index_bijection(int n, int i, int j) {
    check_pair(n, i, j);
    return (2 * n - i) * (i - 1) / 2 + (j - i);
}

std::pair<int, int> index_bijection_inverse(int n, int lambda) {
    check_strands(n);
    if (lambda < 1 || lambda > n * (n - 1) / 2)
        throw std::out_of_range("index_bijection_inverse: lambda out of range");
    for (int i = 1; i < n; ++i) {
        int base = (2 * n - i) * (i - 1) / 2;
        if (lambda - base <= n - i) return {i, i + (lambda - base)};
    }
    throw std::logic_error("index_bijection_inverse: unreachable");
}

BraidWord permutation_braid(int n, int i, int j) {
    check_pair(n, i, j);
    std::vector<int> ls;
    for (int m = i - 1; m >= 1; --m) ls.push_back(m);
    for (int m = j - 1; m >= 2; --m) ls.push_back(m);
    return BraidWord(n, std::move(ls));
}

BraidWord half_twist(int n) {
    check_strands(n);
    std::vector<int> ls;
    for (int k = 1; k < n; ++k)
        for (int m = k; m >= 1; --m) ls.push_back(m);
    return BraidWord(n, std::move(ls));
}

BraidWord band_generator(int n, int i, int j) {
    BraidWord a = permutation_braid(n, i, j);
    return concat(concat(a, BraidWord(n, {1})), inverse(a));
}

BraidWord parse_word(int n, const std::string& text) {
    std::istringstream is(text);
    std::vector<int> ls;
    std::string tok;
    while (is >> tok) {
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_word: bad letter '" + tok + "'");
        }
        if (pos != tok.size())
            throw std::invalid_argument("parse_word: bad letter '" + tok + "'");
        ls.push_back(v);
    }
    return BraidWord(n, std::move(ls));
}

std::string format_word(const BraidWord& w) {
    std::ostringstream os;
    for (std::size_t k = 0; k < w.letters.size(); ++k) {
        if (k) os << ' ';
        os << w.letters[k];
    }
    return os.str();
}

}  // namespace braidrep
