#include <doctest.h>

#include <random>
#include <vector>

#include "helpers.hpp"
#include "skewlines/errors.hpp"
#include "skewlines/family.hpp"

using namespace skew;
using namespace testutil;

namespace {

Perm random_equivalent(const Perm& p) {
    int n = p.n();
    Perm q = p;
    std::uniform_int_distribution<int> kind(0, 2), shift(0, n - 1);
    int steps = 1 + kind(rng());
    for (int s = 0; s < steps; ++s) {
        switch (kind(rng())) {
            case 0: q = circular_move(q, shift(rng()), shift(rng())); break;
            case 1: q = vertical_reflection(q, n); break;
            default: q = horizontal_reflection(q, n); break;
        }
    }
    return q;
}

} // namespace

TEST_CASE("family of a permutation with itself") {
    for (int n : {1, 2, 3, 5, 8}) {
        Perm p = random_perm(n);
        LineFamily f = build_family(p, p);
        CHECK(f.corr == identity_perm(n));
        CHECK(f.sigma(1) == 1);
        CHECK(f.mu(1) == 1);
        SkewCertificate cert = certify_skew(f);
        CHECK(cert.pass);
    }
}

TEST_CASE("endpoint formulas") {
    Perm p = parse_perm("1 4 2 5 3");
    LineFamily f = build_family(p, p);
    for (int i = 1; i <= 5; ++i) {
        int ip = f.corr(i);
        const AffinePoint& a = f.p_alpha[i - 1];
        CHECK(a.at(0) == std::array<long long, 3>{i, 1, 0});
        CHECK(a.at(1) == std::array<long long, 3>{0, 1, ip});
        const AffinePoint& w = f.p_omega[i - 1];
        CHECK(w.at(0) == std::array<long long, 3>{0, -1, f.sigma(i)});
        CHECK(w.at(1) == std::array<long long, 3>{-f.mu(ip), -1, 0});
    }
}

TEST_CASE("certificates across the move orbit") {
    for (int t = 0; t < 30; ++t) {
        int n = 3 + t % 6;
        Perm p = random_perm(n);
        Perm q = random_equivalent(p);
        LineFamily f = build_family(p, q);
        SkewCertificate cert = certify_skew(f);
        REQUIRE(cert.pass);
        CHECK(cert.pairs.size() == static_cast<size_t>(n) * (n - 1) / 2);
        for (const auto& pc : cert.pairs) {
            CHECK(pc.disc < 0);
            CHECK(pc.disc == -16 * pc.A * pc.B);
        }
        // p(0) = 2A and p(1) = 2B reproduce the two linking matrices
        LinkMatrix Xs = from_spindle(f.sigma);
        LinkMatrix Xm = from_spindle(f.mu);
        for (const auto& pc : cert.pairs) {
            CHECK((pc.A > 0 ? 1 : -1) == Xs.at(pc.i - 1, pc.j - 1));
            CHECK((pc.B > 0 ? 1 : -1) == Xm.at(f.corr(pc.i) - 1, f.corr(pc.j) - 1));
        }
    }
}

TEST_CASE("inequivalent spindles are rejected") {
    try {
        build_family(tau(7), tau_bar(7));
        FAIL("expected rejection");
    } catch (const domain_error& e) {
        CHECK(std::string(e.what()).find("not switching-equivalent") != std::string::npos);
    }
    CHECK_THROWS_AS(build_family(identity_perm(4), identity_perm(5)), domain_error);
}
