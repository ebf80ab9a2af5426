#pragma once
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewlines/canon.hpp"

namespace skew {

struct EnumerateOptions {
    int workers = 0;            // 0: SKEWLINES_WORKERS env, else hardware
    bool extended = false;      // unlock the large-n paths
    std::string checkpoint_dir; // per-shard key files for resumable runs
};

int default_workers();

struct CountReport {
    int n = 0;
    long long spindle_classes = 0;
    long long amphicheiral = 0;
    std::optional<long long> switching_classes;
    std::optional<long long> distinct_charpolys;
    double runtime_seconds = 0.0;
};

// Iterates all (n-1)! permutations with p(1)=1 (circular value shifts make
// this normalization class-safe), deduplicates canon keys of the linking
// matrices, and counts keys with canon(X) = canon(-X) as amphicheiral.
// n <= 10 by default; 11 <= n <= 13 behind extended.
CountReport count_spindle_classes(int n, const EnumerateOptions& opt = {});

// Distinct canon keys with one witness permutation per key.
std::vector<std::pair<CanonKey, Perm>> spindle_class_reps(int n, const EnumerateOptions& opt = {});

// n <= 8: direct enumeration of all 2^C(n-1,2) cousin graphs with key
// dedup; n = 9: Burnside count of even graphs up to isomorphism.
long long count_switching_classes(int n);

// One representative matrix per switching class via the direct cousin
// scan; n <= 8 by default, n = 9 behind extended (2^28 cousins).
std::vector<std::pair<CanonKey, LinkMatrix>> switching_class_reps(int n, const EnumerateOptions& opt = {});

// Even graphs on n vertices up to isomorphism, by Burnside over the
// conjugacy classes of S_n: per class, fixed even graphs =
// 2^(edge orbits - GF(2) rank of the even-degree system on orbit
// indicators).  Odd n <= 15.
long long burnside_even_graph_count(int n);

// Distinct characteristic polynomials over switching-class
// representatives; n <= 8 default, n = 9 behind extended.
long long count_charpolys(int n, const EnumerateOptions& opt = {});

// Histogram of the spindle genus over all (n-1)! normalized permutations.
std::map<int, long long> genus_histogram(int n, const EnumerateOptions& opt = {});

struct CensusResult {
    long long with_spindle = 0;
    long long without = 0;
};

// Runs detect on one representative per switching class; every Found is
// checked with verify_found.  n <= 8.
CensusResult spindle_structure_census(int n, const EnumerateOptions& opt = {});

} // namespace skew
