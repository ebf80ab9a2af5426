#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "helpers.hpp"
#include "skewlines/errors.hpp"
#include "skewlines/surface.hpp"

using namespace skew;
using namespace testutil;

namespace {

// the spindle moves extended to signed permutations: a sign travels with
// the line segment it decorates
SignedPerm signed_circular(const SignedPerm& sp, int s, int t) {
    int n = sp.n();
    Perm q = circular_move(sp.underlying(), s, t);
    std::vector<int> img(n);
    for (int i = 1; i <= n; ++i) {
        int src = (i - 1 + t) % n + 1;
        img[i - 1] = sp.sign(src) * q(i);
    }
    return signed_from_images(img);
}

SignedPerm signed_vertical(const SignedPerm& sp, int k) {
    int n = sp.n();
    Perm q = vertical_reflection(sp.underlying(), k);
    std::vector<int> img(n);
    for (int i = 1; i <= n; ++i) {
        int src = i <= k ? k + 1 - i : i;
        img[i - 1] = sp.sign(src) * q(i);
    }
    return signed_from_images(img);
}

SignedPerm signed_horizontal(const SignedPerm& sp, int k) {
    int n = sp.n();
    Perm p = sp.underlying();
    Perm q = horizontal_reflection(p, k);
    std::vector<int> img(n);
    for (int i = 1; i <= n; ++i) img[i - 1] = q(i);
    for (int i = 1; i <= k; ++i) {
        if (sp.sign(i) < 0) img[p(i) - 1] = -img[p(i) - 1];
    }
    for (int i = k + 1; i <= n; ++i) {
        if (sp.sign(i) < 0) img[i - 1] = -img[i - 1];
    }
    return signed_from_images(img);
}

SignedPerm random_signed(int n) {
    Perm p = random_perm(n);
    std::vector<int> img(n);
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < n; ++i) img[i] = coin(rng()) ? p(i + 1) : -p(i + 1);
    return signed_from_images(img);
}

// independent component count for the all-plus gluing: follow the seam
// identifications around the two polygons
int cycle_count(const Perm& p) {
    int n = p.n();
    std::vector<int> psi(n, -1);
    for (int j = 1; j <= n; ++j) {
        int from = p(j) % n;
        int to = (p(j % n + 1) - 1) % n;
        psi[from] = to;
    }
    std::vector<char> seen(n, 0);
    int cycles = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (int c = s; !seen[c]; c = psi[c]) seen[c] = 1;
    }
    return cycles;
}

} // namespace

TEST_CASE("small gluings") {
    GluedSurface s = glue(parse_signed_perm("-2 3 1"));
    CHECK(s.n == 3);
    CHECK(s.v == 2);
    CHECK(!s.orientable);
    CHECK(s.euler_char == 1);
    CHECK(s.genus == 1); // one crosscap
    GluedSurface sphere = glue(with_all_plus(identity_perm(3)));
    CHECK(sphere.orientable);
    CHECK(sphere.genus == 0);
    CHECK(sphere.euler_char == 2);
    GluedSurface mono = glue(with_all_plus(identity_perm(1)));
    CHECK(mono.v == 1);
    CHECK(mono.euler_char == 2);
    CHECK(mono.orientable);
    CHECK(mono.genus == 0);
    for (int n = 1; n <= 8; ++n) CHECK(spindle_genus(identity_perm(n)) == 0);
    CHECK(spindle_genus(parse_perm("1 3 2")) == 1);
}

TEST_CASE("orientable exactly for constant signs") {
    // every signed permutation of order up to 4
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        do {
            Perm p = perm_from_images(img);
            for (unsigned m = 0; m < (1u << n); ++m) {
                std::vector<int> images(n);
                int sum = 0;
                for (int i = 0; i < n; ++i) {
                    int sg = (m >> i) & 1 ? 1 : -1;
                    images[i] = sg * p(i + 1);
                    sum += sg;
                }
                GluedSurface s = glue(signed_from_images(images));
                CHECK(s.orientable == (sum == n || sum == -n));
                CHECK(s.genus >= 0);
                if (s.orientable) CHECK(s.genus <= (n - 1) / 2);
            }
        } while (std::next_permutation(img.begin(), img.end()));
    }
}

TEST_CASE("euler characteristic bookkeeping") {
    for (int t = 0; t < 60; ++t) {
        int n = 1 + t % 9;
        SignedPerm sp = random_signed(n);
        GluedSurface s = glue(sp);
        CHECK(s.euler_char == 2 - s.n + s.v);
        if (s.orientable)
            CHECK(s.euler_char == 2 - 2 * s.genus);
        else
            CHECK(s.euler_char == 2 - s.genus);
        int sum = 0;
        for (int i = 1; i <= n; ++i) sum += sp.sign(i);
        CHECK(s.orientable == (sum == n || sum == -n));
    }
}

TEST_CASE("all-plus gluing matches the seam cycle oracle") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        do {
            Perm p = perm_from_images(img);
            CHECK(glue(with_all_plus(p)).v == cycle_count(p));
            CHECK(spindle_genus(p) == (p.n() - cycle_count(p)) / 2);
        } while (std::next_permutation(img.begin(), img.end()));
    }
    for (int t = 0; t < 50; ++t) {
        Perm p = random_perm(7 + t % 3);
        CHECK(glue(with_all_plus(p)).v == cycle_count(p));
    }
}

TEST_CASE("moves preserve the glued surface") {
    for (int t = 0; t < 60; ++t) {
        int n = 3 + t % 6;
        SignedPerm sp = random_signed(n);
        GluedSurface base = glue(sp);
        GluedSurface c = glue(signed_circular(sp, t % n, (t / 3) % n));
        CHECK(c.v == base.v);
        CHECK(c.orientable == base.orientable);
        CHECK(c.genus == base.genus);
        GluedSurface v = glue(signed_vertical(sp, n));
        CHECK(v.v == base.v);
        CHECK(v.orientable == base.orientable);
        GluedSurface h = glue(signed_horizontal(sp, n));
        CHECK(h.v == base.v);
        CHECK(h.orientable == base.orientable);
    }
}

TEST_CASE("signing polynomial") {
    VPoly one = v_polynomial(identity_perm(1));
    std::map<std::pair<int, int>, long long> want1{{{-1, 1}, 1}, {{1, 1}, 1}};
    CHECK(one.terms == want1);
    VPoly vp = v_polynomial(parse_perm("1 2"));
    std::map<std::pair<int, int>, long long> want{{{-2, 2}, 1}, {{0, 1}, 2}, {{2, 2}, 1}};
    CHECK(vp.terms == want);
    long long mass = 0;
    for (const auto& [key, cnt] : vp.terms) mass += cnt;
    CHECK(mass == 4);
    // t exponents have the parity of n and range in [-n, n]
    for (int t = 0; t < 10; ++t) {
        int n = 2 + t % 5;
        VPoly v = v_polynomial(random_perm(n));
        long long total = 0;
        for (const auto& [key, cnt] : v.terms) {
            total += cnt;
            CHECK(((key.first - n) % 2 + 2) % 2 == 0);
            CHECK(key.first >= -n);
            CHECK(key.first <= n);
            CHECK(key.second >= 1);
        }
        CHECK(total == (1LL << n));
    }
    CHECK_THROWS_AS(v_polynomial(identity_perm(25)), domain_error);
}

TEST_CASE("mirror swaps the sign variable") {
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        do {
            Perm p = perm_from_images(img);
            VPoly a = v_polynomial(p);
            VPoly b = v_polynomial(mirror(p));
            REQUIRE(a.terms.size() == b.terms.size());
            for (const auto& [key, cnt] : a.terms) {
                auto it = b.terms.find({-key.first, key.second});
                REQUIRE(it != b.terms.end());
                CHECK(it->second == cnt);
            }
        } while (std::next_permutation(img.begin() + 1, img.end()));
    }
}
