#include "skewlines/canon.hpp"

#include <array>
#include <bit>

#include "skewlines/euler.hpp"

namespace skew {

namespace {

// Canonical labeling of a graph on m <= 16 vertices: the labeling whose
// row-major strictly-upper-triangular adjacency bit string (1 = edge) is
// lexicographically minimal.  Classic individualization with one twist:
// cells are split only by adjacency to already-fixed vertices, never by
// mutual degree refinement — equitable refinement could reorder positions
// away from the row-major minimum.
//
// At each depth the next vertex must come from the leftmost cell; its row
// against every remaining cell is minimized by listing non-neighbors
// before neighbors, which is exactly how the cell splits.  Candidates
// whose emitted row exceeds the sibling minimum cannot reach the minimal
// string (shared prefix, larger next row) and are pruned.  When every cell
// is internally and pairwise homogeneous the completion no longer depends
// on the order within cells, so the leaf string is computed directly.
using Bits = unsigned __int128;

struct Labeler {
    int m = 0;
    std::array<uint32_t, 16> adj{};
    Bits best = ~static_cast<Bits>(0);

    struct State {
        std::array<uint32_t, 17> cell{};
        int ncells = 0;
        std::array<int, 16> order{};
        int fixed = 0;
    };

    static void push_run(Bits& v, int& len, int zeros, int ones) {
        len += zeros;
        if (ones) {
            Bits mask = (static_cast<Bits>(1) << ones) - 1;
            v |= mask << (128 - len - ones);
            len += ones;
        }
    }

    bool homogeneous(const State& st) const {
        for (int a = 0; a < st.ncells; ++a) {
            uint32_t ca = st.cell[a];
            int sz = std::popcount(ca);
            if (sz > 1) {
                int first = -1;
                for (uint32_t rest = ca; rest;) {
                    int v = std::countr_zero(rest);
                    rest &= rest - 1;
                    int d = std::popcount(adj[v] & ca);
                    if (first < 0) {
                        first = d;
                        if (d != 0 && d != sz - 1) return false;
                    } else if (d != first) {
                        return false;
                    }
                }
            }
            for (int b = a + 1; b < st.ncells; ++b) {
                uint32_t cb = st.cell[b];
                int szb = std::popcount(cb);
                int first = -1;
                for (uint32_t rest = ca; rest;) {
                    int v = std::countr_zero(rest);
                    rest &= rest - 1;
                    int d = std::popcount(adj[v] & cb);
                    if (first < 0) {
                        first = d;
                        if (d != 0 && d != szb) return false;
                    } else if (d != first) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    void complete(const State& st) {
        std::array<int, 16> ord{};
        int w = 0;
        for (int i = 0; i < st.fixed; ++i) ord[w++] = st.order[i];
        for (int a = 0; a < st.ncells; ++a)
            for (uint32_t rest = st.cell[a]; rest;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                ord[w++] = v;
            }
        Bits bits = 0;
        int len = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                if ((adj[ord[i]] >> ord[j]) & 1)
                    push_run(bits, len, 0, 1);
                else
                    push_run(bits, len, 1, 0);
            }
        if (bits < best) best = bits;
    }

    Bits row_of(int v, const State& st) const {
        Bits bits = 0;
        int len = 0;
        uint32_t own = st.cell[0] & ~(1u << v);
        push_run(bits, len, std::popcount(own & ~adj[v]), std::popcount(own & adj[v]));
        for (int b = 1; b < st.ncells; ++b)
            push_run(bits, len, std::popcount(st.cell[b] & ~adj[v]),
                     std::popcount(st.cell[b] & adj[v]));
        return bits;
    }

    void dfs(const State& st) {
        if (st.fixed == m || homogeneous(st)) {
            complete(st);
            return;
        }
        uint32_t head = st.cell[0];
        Bits best_row = ~static_cast<Bits>(0);
        std::array<int, 16> cands{};
        int ncand = 0;
        for (uint32_t rest = head; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            Bits row = row_of(v, st);
            if (row < best_row) {
                best_row = row;
                cands[0] = v;
                ncand = 1;
            } else if (row == best_row) {
                cands[ncand++] = v;
            }
        }
        for (int ci = 0; ci < ncand; ++ci) {
            int v = cands[ci];
            State nxt;
            nxt.fixed = st.fixed + 1;
            nxt.order = st.order;
            nxt.order[st.fixed] = v;
            nxt.ncells = 0;
            uint32_t own = st.cell[0] & ~(1u << v);
            auto push_cell = [&](uint32_t c) {
                if (c) nxt.cell[nxt.ncells++] = c;
            };
            push_cell(own & ~adj[v]);
            push_cell(own & adj[v]);
            for (int b = 1; b < st.ncells; ++b) {
                push_cell(st.cell[b] & ~adj[v]);
                push_cell(st.cell[b] & adj[v]);
            }
            dfs(nxt);
        }
    }

    // minimal C(m,2)-bit string over all labelings; seed carries the best
    // found so far when minimizing across several graphs
    Bits run(Bits seed) {
        best = seed;
        if (m <= 1) {
            best = 0;
            return best;
        }
        State st;
        st.cell[0] = (m == 32 ? ~0u : ((1u << m) - 1));
        st.ncells = 1;
        dfs(st);
        return best;
    }
};

std::string pack_bits(Bits bits, int nbits) {
    std::string out;
    int nbytes = (nbits + 7) / 8;
    for (int b = 0; b < nbytes; ++b)
        out.push_back(static_cast<char>(static_cast<uint8_t>(bits >> (120 - 8 * b))));
    return out;
}

} // namespace

std::string CanonKey::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

CanonKey canon(const LinkMatrix& X) {
    const int n = X.n;
    if (n > 16) throw domain_error("canon supports order <= 16");
    CanonKey key;
    key.n = n;
    if (n == 1) return key;
    Labeler lab;
    lab.m = n - 1;
    Bits best_cousin = ~static_cast<Bits>(0);
    for (int r = 0; r < n; ++r) {
        // switch row r positive, delete it; edge = +1 in the result
        std::array<int, 16> verts{};
        int w = 0;
        for (int i = 0; i < n; ++i)
            if (i != r) verts[w++] = i;
        lab.adj.fill(0);
        for (int a = 0; a < lab.m; ++a)
            for (int b = a + 1; b < lab.m; ++b) {
                int i = verts[a], j = verts[b];
                if (X.at(i, j) * X.at(r, i) * X.at(r, j) > 0) {
                    lab.adj[a] |= 1u << b;
                    lab.adj[b] |= 1u << a;
                }
            }
        best_cousin = lab.run(best_cousin);
    }
    // full string: n-1 ones (the root row), then the cousin bits
    Bits bits = 0;
    int len = 0;
    Labeler::push_run(bits, len, 0, n - 1);
    bits |= best_cousin >> len;
    key.bytes = pack_bits(bits, n * (n - 1) / 2);
    return key;
}

bool equivalent(const LinkMatrix& X, const LinkMatrix& Y) {
    if (X.n != Y.n) throw domain_error("equivalent requires matrices of the same order");
    return canon(X) == canon(Y);
}

bool spindle_equivalent(const Perm& p, const Perm& q) {
    if (p.n() != q.n()) throw domain_error("spindle_equivalent requires equal orders");
    return canon(from_spindle(p)) == canon(from_spindle(q));
}

CanonKey eulerian_key(const LinkMatrix& X) {
    if (X.n % 2 == 0) throw domain_error("eulerian_key requires odd order");
    if (X.n > 16) throw domain_error("eulerian_key supports order <= 16");
    LinkMatrix M = euler_orient(X).matrix;
    Labeler lab;
    lab.m = X.n;
    lab.adj.fill(0);
    for (int i = 0; i < X.n; ++i)
        for (int j = i + 1; j < X.n; ++j)
            if (M.at(i, j) > 0) {
                lab.adj[i] |= 1u << j;
                lab.adj[j] |= 1u << i;
            }
    Bits bits = lab.run(~static_cast<Bits>(0));
    CanonKey key;
    key.n = X.n;
    key.bytes = pack_bits(bits, X.n * (X.n - 1) / 2);
    return key;
}

} // namespace skew
