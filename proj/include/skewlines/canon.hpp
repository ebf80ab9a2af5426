#pragma once
#include <compare>
#include <string>

#include "skewlines/linking.hpp"

namespace skew {

// Canonical byte string identifying a switching class: two matrices get
// equal keys iff one is D P^t X P D for a permutation matrix P and a
// diagonal +-1 matrix D.
struct CanonKey {
    int n = 0;
    std::string bytes;

    std::string hex() const;
    auto operator<=>(const CanonKey&) const = default;
};

// Minimal byte encoding over all base vertices r (switch row r to all +1,
// delete it, canonically label the remaining "cousin" graph) with the
// row-major strictly-upper-triangular packing {-1 -> 0, +1 -> 1},
// big-endian.  Supports n <= 16.
CanonKey canon(const LinkMatrix& X);

bool equivalent(const LinkMatrix& X, const LinkMatrix& Y);
bool spindle_equivalent(const Perm& p, const Perm& q);

// Alternative key for odd order through the Eulerian representative:
// canonical labeling of the even graph produced by euler_orient, no root.
// Cross-checked against canon in tests; canon stays authoritative.
CanonKey eulerian_key(const LinkMatrix& X);

} // namespace skew
