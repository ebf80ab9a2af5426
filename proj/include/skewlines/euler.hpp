#pragma once
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "skewlines/linking.hpp"

namespace skew {

using BigInt = boost::multiprecision::cpp_int;

// Odd-order representative with an even number of +1 entries in every row,
// produced by switching at the rows whose +1 count is odd.
struct EulerOrientation {
    LinkMatrix matrix;
    std::vector<int> flips; // 1-based, sorted
};
EulerOrientation euler_orient(const LinkMatrix& X);

// Rows of the Eulerian representative grouped by half their +1 count,
// ascending; empty classes omitted.  Pairs (k, rows), rows 1-based sorted.
std::vector<std::pair<int, std::vector<int>>> euler_partition_odd(const LinkMatrix& X);

// Recursive row partition of an even-order matrix by the signs
// eps_i = prod_{j != i} x_ij * prod_{s<t} x_st: internal nodes split into
// the -1 part and the +1 part (children in that planar order); a node whose
// partition is trivial is a leaf carrying the common sign as signature.
struct EulerTree {
    struct Node {
        std::vector<int> rows; // 1-based, sorted
        int signature = 0;     // +-1 on leaves, 0 on internal nodes
        std::unique_ptr<Node> minus, plus;

        bool leaf() const { return !minus; }
        int weight() const { return static_cast<int>(rows.size()); }
    };
    int n = 0;
    std::unique_ptr<Node> root;
};
EulerTree euler_tree(const LinkMatrix& X);
// Serialization grammar (ASCII, documented in README):
//   tree     := node node | "(" leafbody ")"
//   node     := "(" node node ")" | "(" leafbody ")"
//   leafbody := word ":{" rows "}" (":" sig)?
// word is the -/+ path from the root (empty when the whole matrix is
// Eulerian); sig is "+1" or "-1", omitted for 2-row leaves where it is
// identically +1; a root with two children prints them juxtaposed without
// an outer wrapper.
std::string to_string(const EulerTree& t);
// Leaves of the tree in planar order (all-minus path first).
std::vector<const EulerTree::Node*> tree_leaves(const EulerTree& t);

// Refinement invariants a_{i,j} of a switching class.
// Even order: over Euler-tree leaves R_1..R_r in planar order,
//   a_ij = prod_{s in R_i, t in R_j} x_st for i != j, a_ii = signature.
// Odd order: over the degree classes A_1..A_r of the Euler partition,
//   a_ij = sum_{s in A_i, t in A_j} x_st (ordered pairs, diagonal zeros).
struct RefineInvariants {
    bool even_order = false;
    std::vector<std::vector<int>> parts;  // 1-based rows per class
    std::vector<int> part_keys;           // degree/2 per class (odd case only)
    std::vector<std::vector<long long>> a;
};
RefineInvariants refine_invariants(const LinkMatrix& X);

// Coefficients 0..N of the two tree-counting series:
//   alpha: F = 1/(1-z) + (F-1)^2          (unsigned trees)
//   beta:  G = (1+z^2)/(1-z) + (G-1)^2    (signed trees)
struct SeriesTable {
    std::vector<BigInt> alpha;
    std::vector<BigInt> beta;
};
SeriesTable tree_series(int N);

} // namespace skew
