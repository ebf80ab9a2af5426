#pragma once
#include <string>
#include <vector>

#include "skewlines/errors.hpp"

namespace skew {

// Permutation of {1..n}.  Stored 0-based: img[i] = p(i+1) - 1.
// Text format is 1-based, space separated: "1 4 2 5 3".
struct Perm {
    std::vector<int> img;

    int n() const { return static_cast<int>(img.size()); }
    // 1-based application
    int operator()(int i) const { return img[i - 1] + 1; }
    // 0-based application
    int at0(int i) const { return img[i]; }

    bool operator==(const Perm&) const = default;
};

Perm identity_perm(int n);
// one-based images, validated as a bijection of {1..n}
Perm perm_from_images(const std::vector<int>& images);
Perm parse_perm(const std::string& text);
std::string to_string(const Perm& p);

Perm inverse(const Perm& p);
int perm_sign(const Perm& p);

// Signed permutation of {±1..±n} with s(-i) = -s(i), determined by the
// images of 1..n.  simg[i] = s(i+1), a value in ±{1..n}.
// Text format: "-2 3 1".
struct SignedPerm {
    std::vector<int> simg;

    int n() const { return static_cast<int>(simg.size()); }
    int magnitude(int i) const { return simg[i - 1] < 0 ? -simg[i - 1] : simg[i - 1]; }
    int sign(int i) const { return simg[i - 1] < 0 ? -1 : 1; }
    Perm underlying() const;

    bool operator==(const SignedPerm&) const = default;
};

SignedPerm signed_from_images(const std::vector<int>& images);
SignedPerm parse_signed_perm(const std::string& text);
std::string to_string(const SignedPerm& p);
SignedPerm with_all_plus(const Perm& p);

// The three spindle moves, in their anchored form.
// circular_move: result(i) = s + p((i + t) mod n) mod n, representatives
// taken in {1..n}; s and t range over {0..n-1}.
Perm circular_move(const Perm& p, int s, int t);
// vertical_reflection: requires p([1,k]) = [1,k]; reflects the block
// through its horizontal midline: result(i) = k+1-p(k+1-i) for i <= k.
Perm vertical_reflection(const Perm& p, int k);
// horizontal_reflection: requires p([1,k]) = [1,k]; inverts the block:
// result(i) = p^{-1}(i) for i <= k.
Perm horizontal_reflection(const Perm& p, int k);
// mirror: result(i) = n+1-p(i).
Perm mirror(const Perm& p);

// A cyclic block: cyclically consecutive positions mapped onto cyclically
// consecutive values.  Both sets reported sorted ascending, 1-based.
struct CyclicBlock {
    std::vector<int> positions;
    std::vector<int> values;

    bool operator==(const CyclicBlock&) const = default;
};

// All non-trivial cyclic blocks (2 <= size <= n-2), ordered by size then by
// window start.  Empty iff p is irreducible.
std::vector<CyclicBlock> find_blocks(const Perm& p);
bool is_irreducible(const Perm& p);

// true iff p is irreducible and deleting any single line leaves a
// permutation with a cyclic 2-block.  Requires n >= 4.
bool is_exceptional(const Perm& p);

// The exceptional permutations i -> 2i mod n and i -> -2i mod n on
// {0..n-1}, shifted to the 1-based convention.  Requires odd n >= 5.
Perm tau(int n);
Perm tau_bar(int n);

} // namespace skew
