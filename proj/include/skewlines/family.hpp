#pragma once
#include <array>
#include <vector>

#include "skewlines/perm.hpp"

namespace skew {

// Endpoint of a moving line: c0 + t*c1, integer coordinates.
struct AffinePoint {
    std::array<long long, 3> c0{};
    std::array<long long, 3> c1{};

    std::array<long long, 3> at(long long t) const {
        return {c0[0] + t * c1[0], c0[1] + t * c1[1], c0[2] + t * c1[2]};
    }
};

// The explicit isotopy between two spindles with a common switching class:
// line i runs from p_alpha[i-1](t) to p_omega[i-1](t), with
//   P_alpha^i(t) = (1-t)(i,1,0)     + t(0,1,i')
//   P_omega^i(t) = (1-t)(0,-1,s(i)) + t(-m(i'),-1,0)
// where i' = corr(i).  sigma and mu are stored normalized (first image 1,
// reached by circular moves from the inputs, class-preserving) and corr
// sends line 1 to line 1.
struct LineFamily {
    Perm sigma;
    Perm mu;
    Perm corr;
    std::vector<AffinePoint> p_alpha;
    std::vector<AffinePoint> p_omega;
};

// Requires equal canon keys; the rejection message carries both keys.
// The correspondence is found by a detect-style backtracking of mu's
// matrix against sigma's, over circular shifts of mu.
LineFamily build_family(const Perm& sigma, const Perm& mu);

// Per-pair data: A = (i-j)(sigma(i)-sigma(j)), B with the corresponding
// primed indices, p(t) = 2(A+B)t^2 - 4At + 2A, disc = -16AB.
struct PairCert {
    int i = 0, j = 0;
    long long A = 0, B = 0;
    long long disc = 0;
};

struct SkewCertificate {
    bool pass = false;
    std::vector<PairCert> pairs;
};

// For every pair: disc < 0; the closed-form p agrees with the direct 3x3
// integer determinant of (P_w^i - P_a^i; P_a^j - P_w^i; P_w^j - P_a^j) at
// t in {0,1,2}; sign(p(0)) and sign(p(1)) reproduce the two linking
// matrices.  pass = all checks hold.
SkewCertificate certify_skew(const LineFamily& f);

} // namespace skew
