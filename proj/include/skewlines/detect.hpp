#pragma once
#include <functional>
#include <vector>

#include "skewlines/linking.hpp"

namespace skew {

struct DetectOptions {
    bool use_condition3 = true;         // look-ahead pruning; verdict-neutral
    unsigned long long node_limit = 0;  // 0 = unlimited
    // optional extra pruning hook; return true to reject the current
    // partial assignment (gamma/sigma are 1-based with [0] unused)
    std::function<bool(int k, const std::vector<int>& gamma, const std::vector<int>& sigma)> prune;
};

struct DetectResult {
    bool found = false;
    Perm sigma; // spindle permutation, on Found
    Perm gamma; // row assignment: position i holds row gamma(i) of the normalized matrix
    unsigned long long nodes = 0;
};

inline constexpr const char* no_spindle_message =
    "no spindle structure exists for this switching class";

// Backtracking search for a spindle structure in the switching class of X.
// Normalizes X so its first row is all +1, then extends a row assignment
// gamma with values sigma(k) forced by
//   sigma(k) = 1 + #{j : x_{gamma(k),j} = -1} + sum_{s<k} x_{gamma(s),gamma(k)}
// subject to: (1) gamma(k) unused, (2) x_{gamma(k),gamma(s)} =
// sign(sigma(k)-sigma(s)) for s < k, (3) for unused j and s < k,
// x_{j,gamma(s)} x_{gamma(s),gamma(k)} = -1 implies x_{j,gamma(k)} =
// x_{j,gamma(s)}.
DetectResult detect(const LinkMatrix& X, const DetectOptions& opt = {});

// Checks x_{gamma(i),gamma(j)} = sign((i-j)(sigma(i)-sigma(j))) on the
// normalized matrix and canon(X) = canon(from_spindle(sigma)).
bool verify_found(const LinkMatrix& X, const DetectResult& r);

} // namespace skew
