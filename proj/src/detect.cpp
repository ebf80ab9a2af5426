#include "skewlines/detect.hpp"

#include <stdexcept>

#include "skewlines/canon.hpp"

namespace skew {

namespace {

LinkMatrix normalize_first_row(const LinkMatrix& X) {
    std::vector<int> flip;
    for (int i = 1; i < X.n; ++i)
        if (X.at(0, i) < 0) flip.push_back(i + 1);
    return switch_at(X, flip);
}

int sign_of(int v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

} // namespace

DetectResult detect(const LinkMatrix& X, const DetectOptions& opt) {
    const int n = X.n;
    DetectResult res;
    if (n == 1) {
        res.found = true;
        res.sigma = identity_perm(1);
        res.gamma = identity_perm(1);
        return res;
    }
    LinkMatrix Y = normalize_first_row(X);
    std::vector<int> minus_count(n + 1, 0);
    for (int r = 1; r <= n; ++r)
        for (int j = 1; j <= n; ++j)
            if (j != r && Y.at(r - 1, j - 1) < 0) ++minus_count[r];

    std::vector<int> gamma(n + 1, 0), sigma(n + 1, 0);
    std::vector<char> used(n + 1, 0);
    gamma[1] = 1;
    sigma[1] = 1;
    used[1] = 1;
    int k = 2;
    gamma[2] = 1;

    while (true) {
        ++res.nodes;
        if (opt.node_limit && res.nodes > opt.node_limit)
            throw std::runtime_error("detect: node limit exceeded");
        ++gamma[k];
        const int g = gamma[k];
        bool ok = !used[g];
        if (ok) {
            int sum = 0;
            for (int s = 1; s < k; ++s) sum += Y.at(gamma[s] - 1, g - 1);
            sigma[k] = 1 + minus_count[g] + sum;
            for (int s = 1; s < k && ok; ++s)
                if (Y.at(g - 1, gamma[s] - 1) != sign_of(sigma[k] - sigma[s])) ok = false;
        }
        if (ok && opt.use_condition3) {
            for (int j = 1; j <= n && ok; ++j) {
                if (used[j] || j == g) continue;
                for (int s = 1; s < k && ok; ++s)
                    if (Y.at(j - 1, gamma[s] - 1) * Y.at(gamma[s] - 1, g - 1) == -1 &&
                        Y.at(j - 1, g - 1) != Y.at(j - 1, gamma[s] - 1))
                        ok = false;
            }
        }
        if (ok && opt.prune && opt.prune(k, gamma, sigma)) ok = false;

        if (ok) {
            if (k == n) {
                std::vector<int> simg(n), gimg(n);
                for (int i = 1; i <= n; ++i) {
                    simg[i - 1] = sigma[i];
                    gimg[i - 1] = gamma[i];
                }
                res.found = true;
                res.sigma = perm_from_images(simg);
                res.gamma = perm_from_images(gimg);
                return res;
            }
            used[g] = 1;
            ++k;
            gamma[k] = 1;
        } else {
            while (gamma[k] == n) {
                --k;
                if (k == 1) return res;
                used[gamma[k]] = 0;
            }
        }
    }
}

bool verify_found(const LinkMatrix& X, const DetectResult& r) {
    if (!r.found) return false;
    const int n = X.n;
    if (r.sigma.n() != n || r.gamma.n() != n) return false;
    LinkMatrix Y = normalize_first_row(X);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int want = sign_of((i - j) * (r.sigma(i) - r.sigma(j)));
            if (Y.at(r.gamma(i) - 1, r.gamma(j) - 1) != want) return false;
        }
    return canon(X) == canon(from_spindle(r.sigma));
}

} // namespace skew
