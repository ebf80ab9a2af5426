#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "skewlines/canon.hpp"
#include "skewlines/detect.hpp"
#include "skewlines/enumerate.hpp"
#include "skewlines/errors.hpp"

using namespace skew;
using namespace testutil;

TEST_CASE("worked example") {
    DetectResult r = detect(pentagon());
    REQUIRE(r.found);
    CHECK(r.sigma == parse_perm("1 4 2 5 3"));
    CHECK(r.gamma == identity_perm(5));
    CHECK(verify_found(pentagon(), r));
}

TEST_CASE("round trip through scrambling") {
    for (int t = 0; t < 60; ++t) {
        int n = 4 + t % 7;
        Perm p = random_perm(n);
        LinkMatrix X = scramble(from_spindle(p));
        DetectResult r = detect(X);
        REQUIRE(r.found);
        CHECK(verify_found(X, r));
        CHECK(spindle_equivalent(r.sigma, p));
    }
}

TEST_CASE("order six class without a spindle") {
    auto reps = switching_class_reps(6);
    REQUIRE(reps.size() == 16);
    int misses = 0;
    for (const auto& [key, X] : reps) {
        DetectResult r = detect(X);
        if (!r.found) {
            ++misses;
            CHECK(r.sigma.n() == 0);
        } else {
            CHECK(verify_found(X, r));
        }
    }
    CHECK(misses == 1);
    CHECK(std::string(no_spindle_message) == "no spindle structure exists for this switching class");
}

TEST_CASE("every class of order up to five has a spindle") {
    for (int n = 2; n <= 5; ++n) {
        auto reps = switching_class_reps(n);
        for (const auto& [key, X] : reps) {
            DetectResult r = detect(X);
            REQUIRE(r.found);
            CHECK(verify_found(X, r));
        }
    }
}

TEST_CASE("look-ahead pruning never changes the verdict") {
    DetectOptions plain, noprune;
    noprune.use_condition3 = false;
    for (int t = 0; t < 40; ++t) {
        LinkMatrix X = random_matrix(4 + t % 4);
        DetectResult a = detect(X, plain);
        DetectResult b = detect(X, noprune);
        CHECK(a.found == b.found);
        if (a.found) {
            CHECK(a.sigma == b.sigma);
            CHECK(b.nodes >= a.nodes);
        }
    }
}

TEST_CASE("node limit and custom pruning") {
    LinkMatrix X = scramble(from_spindle(random_perm(8)));
    DetectOptions tiny;
    tiny.node_limit = 2;
    CHECK_THROWS_AS(detect(X, tiny), std::runtime_error);
    DetectOptions vac;
    vac.prune = [](int, const std::vector<int>&, const std::vector<int>&) { return false; };
    CHECK(detect(X, vac).found);
    DetectOptions never;
    never.prune = [](int k, const std::vector<int>&, const std::vector<int>&) { return k > 1; };
    CHECK(!detect(X, never).found);
}

TEST_CASE("tiny orders") {
    DetectResult r1 = detect(from_spindle(identity_perm(1)));
    REQUIRE(r1.found);
    CHECK(r1.sigma == identity_perm(1));
    DetectResult r2 = detect(from_spindle(identity_perm(2)));
    REQUIRE(r2.found);
    CHECK(verify_found(from_spindle(identity_perm(2)), r2));
}
