#pragma once
#include <map>
#include <string>
#include <utility>

#include "skewlines/perm.hpp"

namespace skew {

// Closed surface obtained by gluing two n-gons edge-to-edge along a signed
// permutation.  genus holds the orientable genus, or the crosscap count
// when orientable is false.
struct GluedSurface {
    int n = 0;
    int v = 0;
    bool orientable = false;
    int euler_char = 0;
    int genus = 0;
};

// Identification graph on the 2(n+1) boundary points b_0..b_n, t_0..t_n:
// wraparound unions b_0~b_n, t_0~t_n; each i with m = |s(i)| contributes
// b_{i-1}~t_{m-1}, b_i~t_m when s(i) > 0 and b_{i-1}~t_m, b_i~t_{m-1}
// when s(i) < 0.  v = number of connected components.
GluedSurface glue(const SignedPerm& sp);

// g = (n - v)/2 for an ordinary permutation (all signs +).
int spindle_genus(const Perm& p);

// V_p(t,z) = sum over all 2^n signings of z^{v} t^{sum of signs}.
// terms[(t_exp, z_exp)] = count; total mass 2^n.
struct VPoly {
    int n = 0;
    std::map<std::pair<int, int>, long long> terms;

    bool operator==(const VPoly&) const = default;
};
VPoly v_polynomial(const Perm& p); // guarded: n <= 24
std::string to_string(const VPoly& v);

} // namespace skew
