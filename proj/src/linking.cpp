#include "skewlines/linking.hpp"

#include <algorithm>
#include <sstream>

namespace skew {

namespace {

void validate(int n, const std::vector<int8_t>& e) {
    if (n < 1) throw domain_error("matrix order must be positive");
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int v = e[static_cast<size_t>(i) * n + j];
            if (i == j && v != 0)
                throw domain_error("diagonal entries must be 0");
            if (i != j && v != 1 && v != -1)
                throw domain_error("off-diagonal entries must be +1 or -1");
            if (v != e[static_cast<size_t>(j) * n + i])
                throw domain_error("matrix must be symmetric");
        }
    }
}

} // namespace

LinkMatrix matrix_from_entries(int n, const std::vector<int>& entries) {
    if (n < 1) throw domain_error("matrix order must be positive");
    if (entries.size() != static_cast<size_t>(n) * n)
        throw domain_error("entry count does not match order");
    LinkMatrix X;
    X.n = n;
    X.e.reserve(entries.size());
    for (int v : entries) {
        if (v < -1 || v > 1)
            throw domain_error("entries must lie in {-1,0,1}");
        X.e.push_back(static_cast<int8_t>(v));
    }
    validate(n, X.e);
    return X;
}

LinkMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    long long n = 0;
    if (!(in >> n) || n < 1 || n > 10000)
        throw parse_error("matrix input must start with a positive order");
    std::vector<int> entries;
    entries.reserve(static_cast<size_t>(n) * n);
    long long v;
    while (in >> v) entries.push_back(static_cast<int>(v));
    if (!in.eof()) throw parse_error("non-integer token in matrix");
    if (entries.size() != static_cast<size_t>(n) * n)
        throw parse_error("expected " + std::to_string(n * n) + " entries, got " +
                          std::to_string(entries.size()));
    try {
        return matrix_from_entries(static_cast<int>(n), entries);
    } catch (const domain_error& e) {
        throw parse_error(std::string("malformed matrix: ") + e.what());
    }
}

std::string to_string(const LinkMatrix& X) {
    std::string out = std::to_string(X.n);
    out += '\n';
    for (int i = 0; i < X.n; ++i) {
        for (int j = 0; j < X.n; ++j) {
            if (j) out += ' ';
            out += std::to_string(X.at(i, j));
        }
        out += '\n';
    }
    return out;
}

LinkMatrix from_spindle(const Perm& p) {
    const int n = p.n();
    LinkMatrix X;
    X.n = n;
    X.e.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) {
                long long d = static_cast<long long>(i - j) * (p.img[i] - p.img[j]);
                X.set(i, j, d > 0 ? 1 : -1);
            }
    return X;
}

LinkMatrix negate(const LinkMatrix& X) {
    LinkMatrix Y = X;
    for (auto& v : Y.e) v = static_cast<int8_t>(-v);
    return Y;
}

LinkMatrix switch_at(const LinkMatrix& X, const std::vector<int>& v_minus) {
    std::vector<int8_t> s(X.n, 1);
    for (int v : v_minus) {
        if (v < 1 || v > X.n)
            throw domain_error("switching vertex out of range: " + std::to_string(v));
        s[v - 1] = -1;
    }
    LinkMatrix Y = X;
    for (int i = 0; i < X.n; ++i)
        for (int j = 0; j < X.n; ++j)
            Y.set(i, j, X.at(i, j) * s[i] * s[j]);
    return Y;
}

LinkMatrix relabel(const LinkMatrix& X, const Perm& g) {
    if (g.n() != X.n) throw domain_error("relabeling permutation has wrong order");
    LinkMatrix Y = X;
    for (int i = 0; i < X.n; ++i)
        for (int j = 0; j < X.n; ++j)
            Y.set(i, j, X.at(g.img[i], g.img[j]));
    return Y;
}

CharPoly char_poly(const LinkMatrix& X) {
    const int n = X.n;
    if (n > 16) throw domain_error("char_poly supports order <= 16");
    using I128 = __int128;
    // power sums p_k = trace(X^k), then Newton's identities; all exact
    std::vector<I128> pow(static_cast<size_t>(n) * n), nxt(pow.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            pow[static_cast<size_t>(i) * n + j] = X.at(i, j);
    std::vector<I128> P(n + 1, 0);
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    I128 acc = 0;
                    for (int l = 0; l < n; ++l)
                        acc += pow[static_cast<size_t>(i) * n + l] * X.at(l, j);
                    nxt[static_cast<size_t>(i) * n + j] = acc;
                }
            pow.swap(nxt);
        }
        for (int i = 0; i < n; ++i) P[k] += pow[static_cast<size_t>(i) * n + i];
    }
    std::vector<I128> e(n + 1, 0);
    e[0] = 1;
    for (int k = 1; k <= n; ++k) {
        I128 s = 0;
        for (int i = 1; i <= k; ++i) {
            I128 term = e[k - i] * P[i];
            s += (i % 2 == 1) ? term : -term;
        }
        if (s % k != 0) throw std::logic_error("Newton identity division failed");
        e[k] = s / k;
    }
    CharPoly cp;
    cp.coeffs.assign(n + 1, 0);
    for (int k = 0; k <= n; ++k) {
        I128 c = (k % 2 == 0) ? e[k] : -e[k];
        long long cc = static_cast<long long>(c);
        if (static_cast<I128>(cc) != c)
            throw std::logic_error("char_poly coefficient overflow");
        cp.coeffs[n - k] = cc;
    }
    return cp;
}

std::string to_string(const CharPoly& p) {
    // descending powers of t
    std::string out;
    for (size_t k = p.coeffs.size(); k-- > 0;) {
        if (!out.empty()) out += ' ';
        out += std::to_string(p.coeffs[k]);
    }
    return out;
}

Chirality chirality(const LinkMatrix& X) {
    const int n = X.n;
    long long c = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                c += X.at(i, j) * X.at(j, k) * X.at(k, i);
    // cross-checks: trace(X^3)/6 and -coeff(t^{n-3})/2
    long long tr3 = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long dot = 0;
            for (int l = 0; l < n; ++l) dot += X.at(i, l) * X.at(l, j);
            tr3 += dot * X.at(j, i);
        }
    if (tr3 != 6 * c) throw std::logic_error("chirality trace cross-check failed");
    if (n >= 3) {
        CharPoly cp = char_poly(X);
        if (cp.coeffs[n - 3] != -2 * c)
            throw std::logic_error("chirality coefficient cross-check failed");
    }
    long long total = static_cast<long long>(n) * (n - 1) * (n - 2) / 6;
    Chirality ch;
    ch.gamma_plus = (total + c) / 2;
    ch.gamma_minus = (total - c) / 2;
    return ch;
}

int odd_signature(const LinkMatrix& X) {
    if (X.n % 2 == 0) throw domain_error("odd_signature requires odd order");
    int prod = 1;
    for (int i = 0; i < X.n; ++i)
        for (int j = i + 1; j < X.n; ++j) prod *= X.at(i, j);
    return prod;
}

TripleMap triples(const LinkMatrix& X) {
    TripleMap t;
    for (int i = 0; i < X.n; ++i)
        for (int j = i + 1; j < X.n; ++j)
            for (int k = j + 1; k < X.n; ++k)
                t[{i + 1, j + 1, k + 1}] = X.at(i, j) * X.at(j, k) * X.at(k, i);
    return t;
}

LinkMatrix triples_to_matrix(int n, const TripleMap& t) {
    if (n < 1) throw domain_error("matrix order must be positive");
    for (const auto& [key, val] : t) {
        auto [i, j, k] = key;
        if (!(1 <= i && i < j && j < k && k <= n))
            throw domain_error("bad triple index");
        if (val != 1 && val != -1)
            throw domain_error("triple values must be +1 or -1");
    }
    size_t expected = static_cast<size_t>(n) * (n - 1) * (n - 2) / 6;
    if (t.size() != expected)
        throw domain_error("triple map has wrong cardinality");
    LinkMatrix X;
    X.n = n;
    X.e.assign(static_cast<size_t>(n) * n, 0);
    for (int a = 1; a < n; ++a) {
        X.set(0, a, 1);
        X.set(a, 0, 1);
    }
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            int v = t.at({1, a + 1, b + 1});
            X.set(a, b, v);
            X.set(b, a, v);
        }
    if (triples(X) != t)
        throw domain_error("inconsistent triple map: no realizing matrix");
    return X;
}

std::vector<int> pair_invariants(const LinkMatrix& X) {
    std::vector<int> out;
    for (int i = 0; i < X.n; ++i)
        for (int j = i + 1; j < X.n; ++j) {
            int s = 0;
            for (int k = 0; k < X.n; ++k) s += X.at(i, k) * X.at(j, k);
            out.push_back(s < 0 ? -s : s);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> quad_invariants(const LinkMatrix& X) {
    std::vector<int> out;
    for (int a = 0; a < X.n; ++a)
        for (int b = a + 1; b < X.n; ++b)
            for (int c = b + 1; c < X.n; ++c)
                for (int d = c + 1; d < X.n; ++d) {
                    int s = 0;
                    for (int k = 0; k < X.n; ++k)
                        s += X.at(a, k) * X.at(b, k) * X.at(c, k) * X.at(d, k);
                    out.push_back(s < 0 ? -s : s);
                }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> pair_triple_products(const LinkMatrix& X) {
    const int n = X.n;
    std::vector<long long> alpha(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long s = 0;
            for (int k = 0; k < n; ++k) s += X.at(i, k) * X.at(j, k);
            alpha[static_cast<size_t>(i) * n + j] = s;
        }
    std::vector<long long> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                out.push_back(alpha[static_cast<size_t>(i) * n + j] *
                              alpha[static_cast<size_t>(i) * n + k] *
                              alpha[static_cast<size_t>(j) * n + k]);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace skew
