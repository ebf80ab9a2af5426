#pragma once
#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "skewlines/linking.hpp"
#include "skewlines/perm.hpp"

namespace testutil {

inline std::mt19937& rng() {
    static std::mt19937 gen(20240917u);
    return gen;
}

inline skew::Perm random_perm(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng());
    return skew::perm_from_images(img);
}

// random symmetric sign matrix, zero diagonal
inline skew::LinkMatrix random_matrix(int n) {
    std::vector<int> e(static_cast<size_t>(n) * n, 0);
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int v = coin(rng()) ? 1 : -1;
            e[static_cast<size_t>(i) * n + j] = v;
            e[static_cast<size_t>(j) * n + i] = v;
        }
    return skew::matrix_from_entries(n, e);
}

inline std::vector<int> random_subset(int n) {
    std::vector<int> s;
    std::bernoulli_distribution coin(0.5);
    for (int v = 1; v <= n; ++v)
        if (coin(rng())) s.push_back(v);
    return s;
}

inline skew::LinkMatrix random_switch(const skew::LinkMatrix& X) {
    return skew::switch_at(X, random_subset(X.n));
}

inline skew::LinkMatrix random_relabel(const skew::LinkMatrix& X) {
    return skew::relabel(X, random_perm(X.n));
}

inline skew::LinkMatrix scramble(const skew::LinkMatrix& X) {
    return random_relabel(random_switch(X));
}

// the two order-8 matrices sharing a characteristic polynomial
inline skew::LinkMatrix character_a() {
    return skew::parse_matrix(
        "8\n"
        "0 1 1 1 1 1 1 1\n"
        "1 0 -1 1 -1 1 -1 1\n"
        "1 -1 0 1 1 1 1 -1\n"
        "1 1 1 0 -1 1 1 -1\n"
        "1 -1 1 -1 0 1 1 -1\n"
        "1 1 1 1 1 0 -1 -1\n"
        "1 -1 1 1 1 -1 0 -1\n"
        "1 1 -1 -1 -1 -1 -1 0\n");
}

inline skew::LinkMatrix character_b() {
    return skew::parse_matrix(
        "8\n"
        "0 1 1 1 1 1 1 1\n"
        "1 0 1 1 -1 1 -1 1\n"
        "1 1 0 1 -1 1 -1 1\n"
        "1 1 1 0 -1 1 1 -1\n"
        "1 -1 -1 -1 0 1 1 -1\n"
        "1 1 1 1 1 0 -1 -1\n"
        "1 -1 -1 1 1 -1 0 -1\n"
        "1 1 1 -1 -1 -1 -1 0\n");
}

// order-10 matrix whose Euler tree has three leaves
inline skew::LinkMatrix tree_example() {
    return skew::parse_matrix(
        "10\n"
        "0 -1 1 -1 1 1 1 1 1 -1\n"
        "-1 0 -1 1 -1 1 1 1 -1 -1\n"
        "1 -1 0 -1 1 1 1 -1 -1 1\n"
        "-1 1 -1 0 -1 1 1 -1 1 -1\n"
        "1 -1 1 -1 0 1 -1 -1 1 1\n"
        "1 1 1 1 1 0 1 -1 1 -1\n"
        "1 1 1 1 -1 1 0 -1 -1 1\n"
        "1 1 -1 -1 -1 -1 -1 0 1 1\n"
        "1 -1 -1 1 1 1 -1 1 0 1\n"
        "-1 -1 1 -1 1 -1 1 1 1 0\n");
}

// order-5 spindle matrix of 1 4 2 5 3, used across the suite
inline skew::LinkMatrix pentagon() {
    return skew::from_spindle(skew::parse_perm("1 4 2 5 3"));
}

} // namespace testutil
