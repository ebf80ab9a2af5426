#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "skewlines/perm.hpp"

namespace skew {

// Symmetric n x n matrix with zero diagonal and off-diagonal entries in
// {-1,+1}: the pairwise linking signs of n oriented labeled lines.
// Text format: first line "n", then n rows of space-separated entries.
struct LinkMatrix {
    int n = 0;
    std::vector<int8_t> e; // row-major

    int at(int i, int j) const { return e[static_cast<size_t>(i) * n + j]; } // 0-based
    void set(int i, int j, int v) { e[static_cast<size_t>(i) * n + j] = static_cast<int8_t>(v); }

    bool operator==(const LinkMatrix&) const = default;
};

// validated constructors / IO
LinkMatrix matrix_from_entries(int n, const std::vector<int>& entries);
LinkMatrix parse_matrix(const std::string& text);
std::string to_string(const LinkMatrix& X);

// x_{i,j} = sign((i-j)(p(i)-p(j)))
LinkMatrix from_spindle(const Perm& p);

LinkMatrix negate(const LinkMatrix& X);
// negates every entry with exactly one endpoint in v_minus (1-based set)
LinkMatrix switch_at(const LinkMatrix& X, const std::vector<int>& v_minus);
// Y[i][j] = X[g(i)][g(j)]
LinkMatrix relabel(const LinkMatrix& X, const Perm& g);

// det(tI - X), exact integer coefficients; coeffs[i] multiplies t^i.
struct CharPoly {
    std::vector<long long> coeffs;

    bool operator==(const CharPoly&) const = default;
};
CharPoly char_poly(const LinkMatrix& X);
std::string to_string(const CharPoly& p);

// gamma_plus / gamma_minus: counts of line triples with triple linking
// number +1 / -1; c = gamma_plus - gamma_minus.
struct Chirality {
    long long gamma_plus = 0;
    long long gamma_minus = 0;
    long long c() const { return gamma_plus - gamma_minus; }
};
// Computes c by direct triple summation and cross-checks trace(X^3)/6 and
// -coeff(t^{n-3})/2 against it; disagreement would be a programming error.
Chirality chirality(const LinkMatrix& X);

// Product of all strictly-upper entries; odd order only.
int odd_signature(const LinkMatrix& X);

// Triple linking numbers lk(i,j,k) = x_ij x_jk x_ki, indexed by 1-based
// triples i<j<k.
using TripleMap = std::map<std::tuple<int, int, int>, int>;
TripleMap triples(const LinkMatrix& X);
// Reconstructs a matrix with first row +1 and x_{a,b} = lk(1,a,b), then
// verifies the input map is exactly the triple map of the reconstruction;
// inconsistent maps are rejected.
LinkMatrix triples_to_matrix(int n, const TripleMap& t);

// Sorted multiset of |sum_k x_ik x_jk| over pairs i<j (diagonal zeros
// included in the sum).
std::vector<int> pair_invariants(const LinkMatrix& X);
// Same with 4-index products: |sum_k x_{a,k} x_{b,k} x_{c,k} x_{d,k}|
// over quadruples a<b<c<d.
std::vector<int> quad_invariants(const LinkMatrix& X);
// Sorted multiset of the products a_ij a_ik a_jk over triples i<j<k where
// a_ij = sum_k x_ik x_jk; invariant without absolute values.
std::vector<long long> pair_triple_products(const LinkMatrix& X);

} // namespace skew
