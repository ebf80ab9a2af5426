#include "skewlines/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

#include "skewlines/detect.hpp"
#include "skewlines/surface.hpp"

namespace skew {

namespace {

using boost::multiprecision::cpp_int;

// shard ids 0..nshards-1 distributed round-robin over the workers; the
// first exception wins and is rethrown after the join
void parallel_shards(int workers, int nshards, const std::function<void(int)>& fn) {
    workers = std::max(1, std::min(workers, nshards));
    if (workers == 1) {
        for (int i = 0; i < nshards; ++i) fn(i);
        return;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errs(workers);
    for (int w = 0; w < workers; ++w)
        threads.emplace_back([&, w] {
            try {
                for (int i = w; i < nshards; i += workers) fn(i);
            } catch (...) {
                errs[w] = std::current_exception();
            }
        });
    for (auto& t : threads) t.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw parse_error("bad hex digit in checkpoint file");
}

CanonKey key_from_hex(int n, const std::string& hex) {
    if (hex.size() % 2 != 0) throw parse_error("odd hex length in checkpoint file");
    CanonKey k;
    k.n = n;
    for (size_t i = 0; i < hex.size(); i += 2)
        k.bytes.push_back(static_cast<char>(hex_nibble(hex[i]) * 16 + hex_nibble(hex[i + 1])));
    return k;
}

} // namespace

int default_workers() {
    if (const char* env = std::getenv("SKEWLINES_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace {

int resolve_workers(const EnumerateOptions& opt) {
    return opt.workers > 0 ? opt.workers : default_workers();
}

void spindle_guard(int n, const EnumerateOptions& opt) {
    if (n < 1) throw domain_error("order must be at least 1");
    if (n > 13) throw domain_error("spindle enumeration supports order <= 13");
    if (n > 10 && !opt.extended)
        throw domain_error("order > 10 requires the extended flag");
}

using RepMap = std::map<CanonKey, Perm>;

void merge_witness(RepMap& into, const CanonKey& k, const Perm& p) {
    auto [it, fresh] = into.try_emplace(k, p);
    if (!fresh && p.img < it->second.img) it->second = p;
}

// one bucket of the normalized-permutation scan: sigma(1)=1, sigma(2)=v
RepMap spindle_bucket(int n, int v) {
    RepMap local;
    std::vector<int> tail;
    for (int x = 2; x <= n; ++x)
        if (x != v) tail.push_back(x);
    std::vector<int> img(n);
    img[0] = 1;
    img[1] = v;
    do {
        for (size_t i = 0; i < tail.size(); ++i) img[i + 2] = tail[i];
        Perm p = perm_from_images(img);
        merge_witness(local, canon(from_spindle(p)), p);
    } while (std::next_permutation(tail.begin(), tail.end()));
    return local;
}

std::string perm_text(const Perm& p) {
    std::string s;
    for (int i = 0; i < p.n(); ++i) {
        if (i) s += ' ';
        s += std::to_string(p.img[i] + 1);
    }
    return s;
}

RepMap load_rep_checkpoint(int n, const std::filesystem::path& file) {
    RepMap out;
    std::ifstream in(file);
    std::string hex, rest;
    while (in >> hex) {
        std::getline(in, rest);
        out.emplace(key_from_hex(n, hex), parse_perm(rest));
    }
    return out;
}

void store_rep_checkpoint(const RepMap& reps, const std::filesystem::path& file) {
    std::filesystem::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        for (const auto& [k, p] : reps) out << k.hex() << ' ' << perm_text(p) << '\n';
    }
    std::filesystem::rename(tmp, file);
}

} // namespace

std::vector<std::pair<CanonKey, Perm>> spindle_class_reps(int n, const EnumerateOptions& opt) {
    spindle_guard(n, opt);
    if (n == 1) return {{canon(from_spindle(identity_perm(1))), identity_perm(1)}};
    int buckets = n - 1;
    std::vector<RepMap> partial(buckets);
    parallel_shards(resolve_workers(opt), buckets, [&](int b) {
        int v = b + 2;
        if (!opt.checkpoint_dir.empty()) {
            auto file = std::filesystem::path(opt.checkpoint_dir) /
                        ("spindles_" + std::to_string(n) + "_" + std::to_string(v) + ".txt");
            if (std::filesystem::exists(file)) {
                partial[b] = load_rep_checkpoint(n, file);
                return;
            }
            partial[b] = spindle_bucket(n, v);
            store_rep_checkpoint(partial[b], file);
            return;
        }
        partial[b] = spindle_bucket(n, v);
    });
    RepMap merged;
    for (auto& m : partial)
        for (auto& [k, p] : m) merge_witness(merged, k, p);
    return {merged.begin(), merged.end()};
}

CountReport count_spindle_classes(int n, const EnumerateOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    CountReport rep;
    rep.n = n;
    auto reps = spindle_class_reps(n, opt);
    rep.spindle_classes = static_cast<long long>(reps.size());
    std::vector<long long> amphi(reps.size(), 0);
    parallel_shards(resolve_workers(opt), static_cast<int>(reps.size()), [&](int i) {
        if (canon(negate(from_spindle(reps[i].second))) == reps[i].first) amphi[i] = 1;
    });
    rep.amphicheiral = std::accumulate(amphi.begin(), amphi.end(), 0ll);
    rep.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

namespace {

// cousin graph -> full matrix: root row +1, edge bit -> +1 entry
LinkMatrix cousin_matrix(int n, unsigned long long mask) {
    std::vector<int> entries(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int v;
            if (i == 0) {
                v = 1;
            } else {
                int a = i - 1, b = j - 1, m = n - 1;
                int bit = a * (2 * m - a - 1) / 2 + (b - a - 1);
                v = (mask >> bit) & 1 ? 1 : -1;
            }
            entries[static_cast<size_t>(i) * n + j] = v;
            entries[static_cast<size_t>(j) * n + i] = v;
        }
    return matrix_from_entries(n, entries);
}

using MaskMap = std::map<CanonKey, unsigned long long>;

void merge_mask(MaskMap& into, const CanonKey& k, unsigned long long mask) {
    auto [it, fresh] = into.try_emplace(k, mask);
    if (!fresh && mask < it->second) it->second = mask;
}

MaskMap load_mask_checkpoint(int n, const std::filesystem::path& file) {
    MaskMap out;
    std::ifstream in(file);
    std::string hex;
    unsigned long long mask;
    while (in >> hex >> mask) out.emplace(key_from_hex(n, hex), mask);
    return out;
}

void store_mask_checkpoint(const MaskMap& m, const std::filesystem::path& file) {
    std::filesystem::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        for (const auto& [k, mask] : m) out << k.hex() << ' ' << mask << '\n';
    }
    std::filesystem::rename(tmp, file);
}

} // namespace

std::vector<std::pair<CanonKey, LinkMatrix>> switching_class_reps(int n,
                                                                  const EnumerateOptions& opt) {
    if (n < 2) throw domain_error("switching enumeration requires order >= 2");
    if (n > 9) throw domain_error("switching enumeration supports order <= 9");
    if (n == 9 && !opt.extended)
        throw domain_error("order 9 switching scan requires the extended flag");
    int edges = (n - 1) * (n - 2) / 2;
    unsigned long long total = 1ull << edges;
    int shard_bits = std::min(edges, 6);
    int nshards = 1 << shard_bits;
    unsigned long long per = total >> shard_bits;
    std::vector<MaskMap> partial(nshards);
    parallel_shards(resolve_workers(opt), nshards, [&](int s) {
        if (!opt.checkpoint_dir.empty()) {
            auto file = std::filesystem::path(opt.checkpoint_dir) /
                        ("swclasses_" + std::to_string(n) + "_" + std::to_string(s) + ".txt");
            if (std::filesystem::exists(file)) {
                partial[s] = load_mask_checkpoint(n, file);
                return;
            }
        }
        MaskMap local;
        for (unsigned long long mask = per * s; mask < per * (s + 1); ++mask)
            merge_mask(local, canon(cousin_matrix(n, mask)), mask);
        if (!opt.checkpoint_dir.empty()) {
            auto file = std::filesystem::path(opt.checkpoint_dir) /
                        ("swclasses_" + std::to_string(n) + "_" + std::to_string(s) + ".txt");
            store_mask_checkpoint(local, file);
        }
        partial[s] = std::move(local);
    });
    MaskMap merged;
    for (auto& m : partial)
        for (auto& [k, mask] : m) merge_mask(merged, k, mask);
    std::vector<std::pair<CanonKey, LinkMatrix>> out;
    out.reserve(merged.size());
    for (auto& [k, mask] : merged) out.emplace_back(k, cousin_matrix(n, mask));
    return out;
}

long long burnside_even_graph_count(int n) {
    if (n < 1 || n % 2 == 0 || n > 15)
        throw domain_error("Burnside even-graph count requires odd order <= 15");
    if (n == 1) return 1;
    const int E = n * (n - 1) / 2;
    std::vector<std::vector<int>> eid(n, std::vector<int>(n, -1));
    {
        int e = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                eid[i][j] = eid[j][i] = e;
                ++e;
            }
    }
    cpp_int nfact = 1;
    for (int i = 2; i <= n; ++i) nfact *= i;

    cpp_int total = 0;
    std::vector<int> parts;
    auto process = [&]() {
        // permutation with consecutive cycles of the given lengths
        std::vector<int> g(n);
        std::vector<int> cycle_start;
        int pos = 0;
        for (int len : parts) {
            cycle_start.push_back(pos);
            for (int i = 0; i < len; ++i) g[pos + i] = pos + (i + 1) % len;
            pos += len;
        }
        // edge orbits
        std::vector<int> orbit(E, -1);
        int norbits = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int e = eid[i][j];
                if (orbit[e] >= 0) continue;
                int a = i, b = j;
                do {
                    orbit[eid[a][b]] = norbits;
                    a = g[a];
                    b = g[b];
                } while (orbit[eid[a][b]] < 0);
                ++norbits;
            }
        // even-degree constraints, one row per vertex cycle
        std::vector<unsigned __int128> rows;
        for (int v : cycle_start) {
            unsigned __int128 row = 0;
            for (int u = 0; u < n; ++u)
                if (u != v) row ^= static_cast<unsigned __int128>(1) << orbit[eid[v][u]];
            if (row) rows.push_back(row);
        }
        int rank = 0;
        for (int bit = 0; bit < norbits && rank < static_cast<int>(rows.size()); ++bit) {
            unsigned __int128 probe = static_cast<unsigned __int128>(1) << bit;
            int pivot = -1;
            for (int r = rank; r < static_cast<int>(rows.size()); ++r)
                if (rows[r] & probe) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) continue;
            std::swap(rows[rank], rows[pivot]);
            for (int r = 0; r < static_cast<int>(rows.size()); ++r)
                if (r != rank && (rows[r] & probe)) rows[r] ^= rows[rank];
            ++rank;
        }
        // class size = n! / (prod k^{m_k} m_k!)
        cpp_int z = 1;
        int run = 1;
        for (size_t i = 0; i < parts.size(); ++i) {
            z *= parts[i];
            if (i + 1 < parts.size() && parts[i + 1] == parts[i]) {
                ++run;
                z *= run;
            } else {
                run = 1;
            }
        }
        total += (nfact / z) * (cpp_int(1) << (norbits - rank));
    };
    std::function<void(int, int)> gen = [&](int remaining, int maxpart) {
        if (remaining == 0) {
            process();
            return;
        }
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            parts.push_back(p);
            gen(remaining - p, p);
            parts.pop_back();
        }
    };
    gen(n, n);
    if (total % nfact != 0) throw std::logic_error("Burnside sum not divisible by n!");
    cpp_int classes = total / nfact;
    return classes.convert_to<long long>();
}

long long count_switching_classes(int n) {
    if (n >= 2 && n <= 8) return static_cast<long long>(switching_class_reps(n).size());
    if (n % 2 == 1 && n <= 15) return burnside_even_graph_count(n);
    throw domain_error("switching-class count supports 2 <= n <= 8 and odd n <= 15");
}

long long count_charpolys(int n, const EnumerateOptions& opt) {
    auto reps = switching_class_reps(n, opt);
    std::set<std::vector<long long>> polys;
    for (auto& [k, X] : reps) polys.insert(char_poly(X).coeffs);
    return static_cast<long long>(polys.size());
}

std::map<int, long long> genus_histogram(int n, const EnumerateOptions& opt) {
    if (n < 1) throw domain_error("order must be at least 1");
    if (n > 13) throw domain_error("genus histogram supports order <= 13");
    if (n > 12 && !opt.extended)
        throw domain_error("order 13 histogram requires the extended flag");
    if (n == 1) return {{0, 1}};
    int buckets = n - 1;
    std::vector<std::map<int, long long>> partial(buckets);
    parallel_shards(resolve_workers(opt), buckets, [&](int b) {
        int v = b + 2;
        std::vector<int> tail;
        for (int x = 2; x <= n; ++x)
            if (x != v) tail.push_back(x);
        std::vector<int> img(n);
        img[0] = 1;
        img[1] = v;
        auto& hist = partial[b];
        do {
            for (size_t i = 0; i < tail.size(); ++i) img[i + 2] = tail[i];
            ++hist[spindle_genus(perm_from_images(img))];
        } while (std::next_permutation(tail.begin(), tail.end()));
    });
    std::map<int, long long> merged;
    for (auto& h : partial)
        for (auto& [g, c] : h) merged[g] += c;
    return merged;
}

CensusResult spindle_structure_census(int n, const EnumerateOptions& opt) {
    if (n > 8) throw domain_error("census supports order <= 8");
    auto reps = switching_class_reps(n, opt);
    std::vector<int> found(reps.size(), 0);
    parallel_shards(resolve_workers(opt), static_cast<int>(reps.size()), [&](int i) {
        DetectResult r = detect(reps[i].second);
        if (r.found) {
            if (!verify_found(reps[i].second, r))
                throw std::logic_error("detect witness failed verification");
            found[i] = 1;
        }
    });
    CensusResult out;
    for (int f : found) f ? ++out.with_spindle : ++out.without;
    return out;
}

} // namespace skew
