#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "skewlines/canon.hpp"
#include "skewlines/errors.hpp"

using namespace skew;
using namespace testutil;

namespace {

// all sign matrices of order n, 2^C(n,2) of them
std::vector<LinkMatrix> all_matrices(int n) {
    int bits = n * (n - 1) / 2;
    std::vector<LinkMatrix> out;
    out.reserve(1u << bits);
    for (unsigned m = 0; m < (1u << bits); ++m) {
        std::vector<int> e(static_cast<size_t>(n) * n, 0);
        int b = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++b) {
                int v = (m >> b) & 1 ? 1 : -1;
                e[static_cast<size_t>(i) * n + j] = v;
                e[static_cast<size_t>(j) * n + i] = v;
            }
        out.push_back(matrix_from_entries(n, e));
    }
    return out;
}

// brute canonical form: minimum of the entry string over every relabeling
// and every switching, a slow but independent class invariant
std::string brute_form(const LinkMatrix& X) {
    int n = X.n;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::string best;
    do {
        for (unsigned s = 0; s < (1u << n); ++s) {
            std::string cur;
            cur.reserve(static_cast<size_t>(n) * (n - 1) / 2);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    int v = X.at(perm[i], perm[j]);
                    if (((s >> i) ^ (s >> j)) & 1) v = -v;
                    cur.push_back(v > 0 ? '1' : '0');
                }
            if (best.empty() || cur < best) best = std::move(cur);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace

TEST_CASE("canon is invariant and complete on order 5") {
    // partition of all 1024 matrices by canon must match the brute partition
    std::map<std::string, std::set<std::string>> groups;
    for (const auto& X : all_matrices(5)) groups[brute_form(X)].insert(canon(X).hex());
    CHECK(groups.size() == 7); // switching classes of order 5
    std::set<std::string> keys;
    for (const auto& [bf, ks] : groups) {
        CHECK(ks.size() == 1); // invariance
        keys.insert(*ks.begin());
    }
    CHECK(keys.size() == 7); // completeness
}

TEST_CASE("brute agreement through order six") {
    // canonical key and brute minimum must induce the same classification
    std::map<std::string, std::string> brute_of_key, key_of_brute;
    int cases = 0;
    for (int t = 0; t < 130; ++t) {
        for (int n = 2; n <= 6; ++n) {
            if (n == 6 && t >= 60) continue; // keep the slow order bounded
            LinkMatrix X = random_matrix(n);
            std::string bf = std::to_string(n) + "|" + brute_form(X);
            std::string ck = std::to_string(n) + "|" + canon(X).hex();
            auto [i1, fresh1] = brute_of_key.emplace(ck, bf);
            CHECK(i1->second == bf);
            auto [i2, fresh2] = key_of_brute.emplace(bf, ck);
            CHECK(i2->second == ck);
            ++cases;
        }
    }
    CHECK(cases >= 500);
}

TEST_CASE("negation against the brute oracle") {
    // the order-5 spindle matrix of (1,4,2,5,3) and its negation
    LinkMatrix X = pentagon();
    bool brute_same = brute_form(X) == brute_form(negate(X));
    CHECK(equivalent(X, negate(X)) == brute_same);
    CHECK(brute_same); // this class coincides with its negative
}

TEST_CASE("order-6 matrix carrying two configurations") {
    // shared representative of two distinct mirror configurations
    LinkMatrix M = parse_matrix(
        "6\n"
        "0 1 1 1 1 1\n"
        "1 0 1 -1 -1 1\n"
        "1 1 0 1 -1 -1\n"
        "1 -1 1 0 1 -1\n"
        "1 -1 -1 1 0 1\n"
        "1 1 -1 -1 1 0\n");
    CanonKey k = canon(M);
    for (int t = 0; t < 10; ++t) CHECK(canon(random_switch(M)) == k);
    CHECK(canon(scramble(M)) == k);
    // the two configurations are mirrors of one another, so the class
    // contains the negated matrix as well
    CHECK(equivalent(M, negate(M)));
}

TEST_CASE("canon under random scrambling") {
    for (int t = 0; t < 40; ++t) {
        int n = 2 + t % 9;
        LinkMatrix X = random_matrix(n);
        CanonKey k = canon(X);
        CHECK(canon(scramble(X)) == k);
        CHECK(canon(scramble(scramble(X))) == k);
        CHECK(equivalent(X, scramble(X)));
    }
}

TEST_CASE("canon separates the order-8 pair") {
    CHECK(canon(character_a()) != canon(character_b()));
    CHECK(!equivalent(character_a(), character_b()));
}

TEST_CASE("key format") {
    CanonKey k = canon(pentagon());
    CHECK(k.n == 5);
    CHECK(k.bytes.size() == 2); // 10 bits packed into 2 bytes
    CHECK(k.hex().size() == 4);
    CHECK(k.hex().find_first_not_of("0123456789abcdef") == std::string::npos);
    // first row of the key is all ones, so the top nibble is f
    CHECK(k.hex()[0] == 'f');
    CHECK_THROWS_AS(canon(random_matrix(17)), domain_error);
}

TEST_CASE("spindle equivalence under moves") {
    for (int t = 0; t < 40; ++t) {
        int n = 4 + t % 6;
        Perm p = random_perm(n);
        CHECK(spindle_equivalent(p, circular_move(p, t % n, (t / 2) % n)));
        CHECK(spindle_equivalent(p, vertical_reflection(p, n)));
        CHECK(spindle_equivalent(p, horizontal_reflection(p, n)));
    }
    CHECK(spindle_equivalent(tau(5), tau_bar(5)));
    CHECK(!spindle_equivalent(tau(7), tau_bar(7)));
    // mirrors of equivalent spindles stay equivalent
    for (int t = 0; t < 20; ++t) {
        int n = 4 + t % 5;
        Perm p = random_perm(n);
        CHECK(spindle_equivalent(mirror(circular_move(p, t % n, (t / 3) % n)), mirror(p)));
        CHECK(spindle_equivalent(mirror(vertical_reflection(p, n)), mirror(p)));
    }
}

TEST_CASE("key classes are exactly the move orbits") {
    // breadth-first closure under the moves, compared with the key
    // partition over the whole symmetric group, orders 4 through 7
    for (int n = 4; n <= 7; ++n) {
        std::vector<Perm> all;
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i) img[i] = i + 1;
        do {
            all.push_back(perm_from_images(img));
        } while (std::next_permutation(img.begin(), img.end()));

        auto successors = [n](const Perm& p) {
            std::vector<Perm> out;
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t)
                    if (s || t) out.push_back(circular_move(p, s, t));
            for (int k = 1, hi = 0; k <= n; ++k) {
                hi = std::max(hi, p(k));
                if (hi == k) {
                    out.push_back(vertical_reflection(p, k));
                    out.push_back(horizontal_reflection(p, k));
                }
            }
            return out;
        };

        std::map<std::string, int> orbit_of;
        int orbits = 0;
        for (const auto& seed : all) {
            if (orbit_of.count(to_string(seed))) continue;
            int id = orbits++;
            std::vector<Perm> frontier{seed};
            orbit_of[to_string(seed)] = id;
            while (!frontier.empty()) {
                Perm cur = frontier.back();
                frontier.pop_back();
                for (const auto& nx : successors(cur)) {
                    auto [it, fresh] = orbit_of.emplace(to_string(nx), id);
                    if (fresh) frontier.push_back(nx);
                    CHECK(it->second == id);
                }
            }
        }

        std::map<int, std::set<std::string>> keys_by_orbit;
        std::map<std::string, std::set<int>> orbits_by_key;
        for (const auto& p : all) {
            std::string k = canon(from_spindle(p)).hex();
            int o = orbit_of.at(to_string(p));
            keys_by_orbit[o].insert(k);
            orbits_by_key[k].insert(o);
        }
        for (const auto& [o, ks] : keys_by_orbit) CHECK(ks.size() == 1);
        for (const auto& [k, os] : orbits_by_key) CHECK(os.size() == 1);
    }
}

TEST_CASE("eulerian key agrees with canon on odd orders") {
    // full agreement of the induced partitions on order 5
    std::map<std::string, std::set<std::string>> by_canon;
    for (const auto& X : all_matrices(5)) by_canon[canon(X).hex()].insert(eulerian_key(X).hex());
    CHECK(by_canon.size() == 7);
    std::set<std::string> ekeys;
    for (const auto& [ck, eks] : by_canon) {
        CHECK(eks.size() == 1);
        ekeys.insert(*eks.begin());
    }
    CHECK(ekeys.size() == 7);
    // spot checks on order 7
    for (int t = 0; t < 25; ++t) {
        LinkMatrix X = random_matrix(7);
        CHECK(eulerian_key(scramble(X)) == eulerian_key(X));
    }
    CHECK_THROWS_AS(eulerian_key(random_matrix(4)), domain_error);
}
