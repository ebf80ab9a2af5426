#include "skewlines/family.hpp"

#include <stdexcept>

#include "skewlines/canon.hpp"
#include "skewlines/linking.hpp"

namespace skew {

namespace {

Perm normalize_first_image(const Perm& p) {
    int n = p.n();
    int s = (1 - p(1) % n + n) % n;
    return circular_move(p, s, 0);
}

int sign_of(long long v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

// ordinary bijection c with c(1)=1 and Xs_{ij} = Xm_{c(i),c(j)}, or empty
std::vector<int> match_labels(const LinkMatrix& Xs, const LinkMatrix& Xm) {
    const int n = Xs.n;
    if (n == 1) return {1};
    std::vector<int> c(n + 1, 0);
    std::vector<char> used(n + 1, 0);
    c[1] = 1;
    used[1] = 1;
    int k = 2;
    while (k >= 2) {
        int cand = c[k] + 1;
        c[k] = 0;
        bool placed = false;
        for (; cand <= n && !placed; ++cand) {
            if (used[cand]) continue;
            bool ok = true;
            for (int s = 1; s < k && ok; ++s)
                if (Xm.at(cand - 1, c[s] - 1) != Xs.at(k - 1, s - 1)) ok = false;
            if (ok) {
                c[k] = cand;
                used[cand] = 1;
                placed = true;
            }
        }
        if (!placed) {
            --k;
            if (k >= 2 && c[k]) used[c[k]] = 0;
            continue;
        }
        if (k == n) {
            std::vector<int> out(n);
            for (int i = 1; i <= n; ++i) out[i - 1] = c[i];
            return out;
        }
        ++k;
    }
    return {};
}

} // namespace

LineFamily build_family(const Perm& sigma, const Perm& mu) {
    if (sigma.n() != mu.n()) throw domain_error("build_family requires equal orders");
    const int n = sigma.n();
    Perm s = normalize_first_image(sigma);
    LinkMatrix Xs = from_spindle(s);
    CanonKey ks = canon(Xs);
    CanonKey km = canon(from_spindle(mu));
    if (!(ks == km))
        throw domain_error("not switching-equivalent: canon keys " + ks.hex() + " vs " +
                           km.hex());

    for (int t = 0; t < n; ++t) {
        int shift = (1 - mu((t % n) + 1) % n + n) % n;
        Perm m = circular_move(mu, shift, t);
        if (m(1) != 1) throw std::logic_error("circular normalization failed");
        std::vector<int> corr = match_labels(Xs, from_spindle(m));
        if (corr.empty()) continue;

        LineFamily f;
        f.sigma = s;
        f.mu = m;
        f.corr = perm_from_images(corr);
        f.p_alpha.resize(n);
        f.p_omega.resize(n);
        for (int i = 1; i <= n; ++i) {
            int ip = f.corr(i);
            AffinePoint& a = f.p_alpha[i - 1];
            a.c0 = {i, 1, 0};
            a.c1 = {-i, 0, ip};
            AffinePoint& w = f.p_omega[i - 1];
            w.c0 = {0, -1, s(i)};
            w.c1 = {static_cast<long long>(-m(ip)), 0, static_cast<long long>(-s(i))};
        }
        return f;
    }
    throw std::logic_error("equal canon keys but no line correspondence found");
}

namespace {

long long det3(const std::array<std::array<long long, 3>, 3>& r) {
    return r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) -
           r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
           r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
}

} // namespace

SkewCertificate certify_skew(const LineFamily& f) {
    const int n = f.sigma.n();
    SkewCertificate cert;
    cert.pass = true;
    LinkMatrix Xs = from_spindle(f.sigma);
    LinkMatrix Xm = from_spindle(f.mu);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            PairCert pc;
            pc.i = i;
            pc.j = j;
            int ip = f.corr(i), jp = f.corr(j);
            pc.A = static_cast<long long>(i - j) * (f.sigma(i) - f.sigma(j));
            pc.B = static_cast<long long>(ip - jp) * (f.mu(ip) - f.mu(jp));
            pc.disc = -16 * pc.A * pc.B;
            if (pc.disc >= 0) cert.pass = false;
            for (long long t = 0; t <= 2; ++t) {
                long long closed = 2 * (pc.A + pc.B) * t * t - 4 * pc.A * t + 2 * pc.A;
                auto ai = f.p_alpha[i - 1].at(t), wi = f.p_omega[i - 1].at(t);
                auto aj = f.p_alpha[j - 1].at(t), wj = f.p_omega[j - 1].at(t);
                std::array<std::array<long long, 3>, 3> rows{};
                for (int c = 0; c < 3; ++c) {
                    rows[0][c] = wi[c] - ai[c];
                    rows[1][c] = aj[c] - wi[c];
                    rows[2][c] = wj[c] - aj[c];
                }
                if (det3(rows) != closed) cert.pass = false;
            }
            if (sign_of(pc.A) != Xs.at(i - 1, j - 1)) cert.pass = false;
            if (sign_of(pc.B) != Xm.at(ip - 1, jp - 1)) cert.pass = false;
            cert.pairs.push_back(pc);
        }
    return cert;
}

} // namespace skew
