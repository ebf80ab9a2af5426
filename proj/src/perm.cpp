#include "skewlines/perm.hpp"

#include <algorithm>
#include <sstream>

namespace skew {

namespace {

std::vector<int> parse_int_line(const std::string& text, const char* what) {
    std::istringstream in(text);
    std::vector<int> out;
    std::string tok;
    while (in >> tok) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw parse_error(std::string("bad ") + what + " token: " + tok);
        }
        if (pos != tok.size())
            throw parse_error(std::string("bad ") + what + " token: " + tok);
        out.push_back(v);
    }
    if (out.empty())
        throw parse_error(std::string("empty ") + what);
    return out;
}

void check_bijection(const std::vector<int>& magnitudes) {
    const int n = static_cast<int>(magnitudes.size());
    std::vector<char> seen(n, 0);
    for (int v : magnitudes) {
        if (v < 1 || v > n)
            throw domain_error("image out of range: " + std::to_string(v));
        if (seen[v - 1])
            throw domain_error("repeated image: " + std::to_string(v));
        seen[v - 1] = 1;
    }
}

} // namespace

Perm identity_perm(int n) {
    if (n < 1) throw domain_error("permutation order must be positive");
    Perm p;
    p.img.resize(n);
    for (int i = 0; i < n; ++i) p.img[i] = i;
    return p;
}

Perm perm_from_images(const std::vector<int>& images) {
    if (images.empty()) throw domain_error("permutation order must be positive");
    check_bijection(images);
    Perm p;
    p.img.reserve(images.size());
    for (int v : images) p.img.push_back(v - 1);
    return p;
}

Perm parse_perm(const std::string& text) {
    return perm_from_images(parse_int_line(text, "permutation"));
}

std::string to_string(const Perm& p) {
    std::string out;
    for (int i = 0; i < p.n(); ++i) {
        if (i) out += ' ';
        out += std::to_string(p.img[i] + 1);
    }
    return out;
}

Perm inverse(const Perm& p) {
    Perm q;
    q.img.resize(p.n());
    for (int i = 0; i < p.n(); ++i) q.img[p.img[i]] = i;
    return q;
}

int perm_sign(const Perm& p) {
    int inv = 0;
    for (int i = 0; i < p.n(); ++i)
        for (int j = i + 1; j < p.n(); ++j)
            if (p.img[i] > p.img[j]) ++inv;
    return (inv & 1) ? -1 : 1;
}

Perm SignedPerm::underlying() const {
    std::vector<int> mags;
    mags.reserve(simg.size());
    for (int v : simg) mags.push_back(v < 0 ? -v : v);
    return perm_from_images(mags);
}

SignedPerm signed_from_images(const std::vector<int>& images) {
    if (images.empty()) throw domain_error("permutation order must be positive");
    std::vector<int> mags;
    mags.reserve(images.size());
    for (int v : images) {
        if (v == 0) throw domain_error("signed image cannot be 0");
        mags.push_back(v < 0 ? -v : v);
    }
    check_bijection(mags);
    SignedPerm p;
    p.simg = images;
    return p;
}

SignedPerm parse_signed_perm(const std::string& text) {
    return signed_from_images(parse_int_line(text, "signed permutation"));
}

std::string to_string(const SignedPerm& p) {
    std::string out;
    for (int i = 0; i < p.n(); ++i) {
        if (i) out += ' ';
        out += std::to_string(p.simg[i]);
    }
    return out;
}

SignedPerm with_all_plus(const Perm& p) {
    SignedPerm s;
    s.simg.reserve(p.n());
    for (int v : p.img) s.simg.push_back(v + 1);
    return s;
}

Perm circular_move(const Perm& p, int s, int t) {
    const int n = p.n();
    if (s < 0 || s >= n || t < 0 || t >= n)
        throw domain_error("circular move parameters must lie in {0..n-1}");
    Perm q;
    q.img.resize(n);
    for (int i = 0; i < n; ++i) q.img[i] = (p.img[(i + t) % n] + s) % n;
    return q;
}

namespace {

void check_initial_block(const Perm& p, int k) {
    const int n = p.n();
    if (k < 1 || k > n)
        throw domain_error("reflection block size out of range");
    for (int i = 0; i < k; ++i)
        if (p.img[i] >= k)
            throw domain_error("[1,k] is not a block of the permutation");
}

} // namespace

Perm vertical_reflection(const Perm& p, int k) {
    check_initial_block(p, k);
    Perm q = p;
    for (int i = 0; i < k; ++i) q.img[i] = (k - 1) - p.img[(k - 1) - i];
    return q;
}

Perm horizontal_reflection(const Perm& p, int k) {
    check_initial_block(p, k);
    Perm q = p;
    for (int i = 0; i < k; ++i) q.img[p.img[i]] = i;
    return q;
}

Perm mirror(const Perm& p) {
    const int n = p.n();
    Perm q;
    q.img.resize(n);
    for (int i = 0; i < n; ++i) q.img[i] = (n - 1) - p.img[i];
    return q;
}

namespace {

// values (0-based) of a window form a set of cyclically consecutive
// residues mod n iff the indicator has exactly one 0->1 transition
bool cyclically_consecutive(const std::vector<char>& present, int n) {
    int transitions = 0;
    for (int i = 0; i < n; ++i)
        if (present[i] != present[(i + 1) % n]) ++transitions;
    return transitions == 2;
}

} // namespace

std::vector<CyclicBlock> find_blocks(const Perm& p) {
    const int n = p.n();
    std::vector<CyclicBlock> out;
    std::vector<char> present(n, 0);
    for (int len = 2; len <= n - 2; ++len) {
        for (int start = 0; start < n; ++start) {
            std::fill(present.begin(), present.end(), 0);
            for (int j = 0; j < len; ++j) present[p.img[(start + j) % n]] = 1;
            if (!cyclically_consecutive(present, n)) continue;
            CyclicBlock b;
            for (int j = 0; j < len; ++j) b.positions.push_back((start + j) % n + 1);
            for (int v = 0; v < n; ++v)
                if (present[v]) b.values.push_back(v + 1);
            std::sort(b.positions.begin(), b.positions.end());
            out.push_back(std::move(b));
        }
    }
    return out;
}

bool is_irreducible(const Perm& p) { return find_blocks(p).empty(); }

bool is_exceptional(const Perm& p) {
    const int n = p.n();
    if (n < 4) throw domain_error("is_exceptional requires n >= 4");
    if (!is_irreducible(p)) return false;
    const int m = n - 1;
    std::vector<int> q(m);
    for (int d = 0; d < n; ++d) {
        // delete line (d+1, p(d+1)), renumber order-preservingly
        int w = 0;
        for (int i = 0; i < n; ++i) {
            if (i == d) continue;
            q[w++] = p.img[i] - (p.img[i] > p.img[d] ? 1 : 0);
        }
        bool has2block = false;
        for (int a = 0; a < m && !has2block; ++a) {
            int diff = q[(a + 1) % m] - q[a];
            if (diff < 0) diff += m;
            if (diff == 1 || diff == m - 1) has2block = true;
        }
        if (!has2block) return false;
    }
    return true;
}

namespace {

Perm doubling_perm(int n, int step) {
    if (n < 5 || n % 2 == 0)
        throw domain_error("tau requires odd n >= 5");
    Perm p;
    p.img.resize(n);
    // i -> step*i mod n on {0..n-1}, shifted to 1-based on both axes
    for (int i = 0; i < n; ++i) p.img[i] = ((i * step) % n + n) % n;
    return p;
}

} // namespace

Perm tau(int n) { return doubling_perm(n, 2); }
Perm tau_bar(int n) { return doubling_perm(n, -2); }

} // namespace skew
