#include "skewlines/surface.hpp"

#include <numeric>
#include <stdexcept>

namespace skew {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[a] = b;
    }

    int components() {
        int c = 0;
        for (size_t i = 0; i < parent.size(); ++i)
            if (find(static_cast<int>(i)) == static_cast<int>(i)) ++c;
        return c;
    }
};

} // namespace

GluedSurface glue(const SignedPerm& sp) {
    const int n = sp.n();
    // bottom points 0..n, top points n+1 .. 2n+1
    UnionFind uf(2 * (n + 1));
    auto top = [&](int j) { return n + 1 + j; };
    uf.unite(0, n);
    uf.unite(top(0), top(n));
    int sign_sum = 0;
    for (int i = 1; i <= n; ++i) {
        int m = sp.magnitude(i);
        int e = sp.sign(i);
        sign_sum += e;
        if (e > 0) {
            uf.unite(i - 1, top(m - 1));
            uf.unite(i, top(m));
        } else {
            uf.unite(i - 1, top(m));
            uf.unite(i, top(m - 1));
        }
    }
    GluedSurface s;
    s.n = n;
    s.v = uf.components();
    s.euler_char = 2 - n + s.v;
    s.orientable = (sign_sum == n || sign_sum == -n);
    if (s.orientable) {
        if ((n - s.v) % 2 != 0) throw std::logic_error("orientable gluing with odd n - v");
        s.genus = (n - s.v) / 2;
    } else {
        s.genus = n - s.v;
    }
    return s;
}

int spindle_genus(const Perm& p) {
    GluedSurface s = glue(with_all_plus(p));
    if (!s.orientable) throw std::logic_error("all-plus gluing must be orientable");
    return s.genus;
}

VPoly v_polynomial(const Perm& p) {
    const int n = p.n();
    if (n > 24) throw domain_error("v_polynomial supports order <= 24");
    VPoly out;
    out.n = n;
    SignedPerm sp = with_all_plus(p);
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        int sum = 0;
        for (int i = 0; i < n; ++i) {
            int v = p.at0(i) + 1;
            sp.simg[i] = (mask >> i) & 1 ? -v : v;
            sum += (mask >> i) & 1 ? -1 : 1;
        }
        ++out.terms[{sum, glue(sp).v}];
    }
    return out;
}

std::string to_string(const VPoly& vp) {
    std::string out;
    for (const auto& [key, count] : vp.terms) {
        if (!out.empty()) out += " + ";
        out += std::to_string(count);
        out += " z^";
        out += std::to_string(key.second);
        out += " t^";
        out += std::to_string(key.first);
    }
    return out;
}

} // namespace skew
