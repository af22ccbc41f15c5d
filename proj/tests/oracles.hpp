// SPDX-License-Identifier: Apache-2.0
// Brute-force reference computations used by the unit tests and the acceptance run.
// Written separately from the library algorithms on purpose.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "apk/types.hpp"

namespace oracle {

using apk::ArthurParameter;
using apk::DiscreteBlock;
using apk::UnipotentBlock;

// Values contributed by a block to the infinitesimal character.
inline std::vector<int> unip_values(int dim) {
    std::vector<int> v;
    for (int x = -(dim - 1) / 2; x <= (dim - 1) / 2; ++x) v.push_back(x);
    return v;
}
inline std::vector<int> disc_values(int t, int a) {
    std::vector<int> v;
    for (int j = 0; j < a; ++j) {
        const int x = (t + a - 1) / 2 - j;
        v.push_back(x);
        v.push_back(-x);
    }
    return v;
}

inline std::vector<int> inf_char(const ArthurParameter& psi) {
    std::vector<int> v;
    for (auto& u : psi.unipotent)
        for (int x : unip_values(u.dim)) v.push_back(x);
    for (auto& d : psi.discrete)
        for (int x : disc_values(d.t, d.a)) v.push_back(x);
    std::sort(v.rbegin(), v.rend());
    return v;
}

inline std::string key(const ArthurParameter& psi) {
    auto u = psi.unipotent;
    auto d = psi.discrete;
    std::sort(u.begin(), u.end());
    std::sort(d.begin(), d.end());
    std::string s = std::to_string(psi.n) + "|";
    for (auto& b : u) s += std::to_string(b.chr) + "x" + std::to_string(b.dim) + ",";
    s += "|";
    for (auto& b : d) s += std::to_string(b.t) + "/" + std::to_string(b.a) + ",";
    return s;
}

// Every multiset of blocks whose values exhaust chi, plus the sign parity rule.
// Returned as order-independent keys.
inline std::set<std::string> brute_params(const std::vector<int>& chi, int n) {
    int M = 0;
    for (int x : chi) M = std::max(M, std::abs(x));
    struct Cand {
        bool disc;
        int c, d;  // (chr, dim) or (t, a)
        std::vector<int> vals;
    };
    std::vector<Cand> cands;
    for (int dim = 1; dim <= 2 * n + 1; dim += 2)
        if ((dim - 1) / 2 <= M)
            for (int c = 0; c < 2; ++c) cands.push_back({false, c, dim, unip_values(dim)});
    for (int a = 1; 2 * a <= 2 * n + 1; ++a)
        for (int t = 1; (t + a - 1) / 2 <= M; ++t)
            if ((t + a) % 2 == 1) cands.push_back({true, t, a, disc_values(t, a)});

    std::map<int, int> rest;
    for (int x : chi) ++rest[x];
    int left = static_cast<int>(chi.size());
    std::set<std::string> out;
    std::vector<int> picked;

    auto fits = [&](const Cand& c) {
        std::map<int, int> need;
        for (int x : c.vals) ++need[x];
        for (auto [x, k] : need) {
            auto it = rest.find(x);
            if (it == rest.end() || it->second < k) return false;
        }
        return true;
    };
    auto take = [&](const Cand& c, int s) {
        for (int x : c.vals) rest[x] -= s;
        left -= s * static_cast<int>(c.vals.size());
    };
    auto rec = [&](auto&& self, size_t from) -> void {
        if (left == 0) {
            ArthurParameter psi;
            psi.n = n;
            int sgn = 0, odd = 0;
            for (int i : picked) {
                auto& c = cands[i];
                if (c.disc) {
                    psi.discrete.push_back({c.c, c.d});
                    odd += c.d % 2;
                } else {
                    psi.unipotent.push_back({c.c, c.d});
                    sgn += c.c;
                }
            }
            if ((sgn + odd) % 2 == 0) out.insert(key(psi));
            return;
        }
        for (size_t i = from; i < cands.size(); ++i) {
            if (!fits(cands[i])) continue;
            take(cands[i], 1);
            picked.push_back(static_cast<int>(i));
            self(self, i);
            picked.pop_back();
            take(cands[i], -1);
        }
    };
    rec(rec, 0);
    return out;
}

// Hasse invariant, normalized, from a diagonal form with every pair multiplied out.
inline int hilbert(int a, int b) { return (a < 0 && b < 0) ? -1 : 1; }
inline int hasse_pairs(const std::vector<int>& diag, int delta) {
    const long long N = static_cast<long long>(diag.size());
    int D = 1;
    for (int x : diag) D *= x;
    int E = 1;
    for (size_t i = 0; i < diag.size(); ++i)
        for (size_t j = i + 1; j < diag.size(); ++j) E *= hilbert(diag[i], diag[j]);
    const int eta = ((N * (N - 1) / 2) % 2 == 0 ? 1 : -1) * D;
    int r = hilbert(-delta, eta);
    if ((N * (N - 1) / 2) % 2) r *= hilbert(-1, D);
    if (((N / 2 + 1) / 2) % 2) r *= hilbert(-1, -1);
    return r * E;
}

// Unitary highest weights with regular character chi_plus, found by trying every sign pattern.
inline bool unitary(const std::vector<int>& m) {
    const int n = static_cast<int>(m.size()), mn = m.back();
    int u = 0, v = 0;
    for (int x : m) {
        u += x == mn;
        v += x == mn + 1;
    }
    return 2 * mn >= 2 * n - 2 * u - v;
}
inline std::set<std::vector<int>> unitary_weights_regular(const std::vector<int>& chi_plus) {
    const int n = static_cast<int>(chi_plus.size());
    std::set<std::vector<int>> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> v;
        for (int i = 0; i < n; ++i) v.push_back((mask >> i & 1) ? -chi_plus[i] : chi_plus[i]);
        std::sort(v.rbegin(), v.rend());
        std::vector<int> m(n);
        for (int i = 0; i < n; ++i) m[i] = v[i] + i + 1;
        if (unitary(m)) out.insert(m);
    }
    return out;
}

// Root data of the parabolic defined by H = (1^p, 0^{n-p-q}, (-1)^q), with a
// generic perturbation picking the positive system of the Levi. Doubled half sums.
struct RootSums {
    std::vector<long long> l, up, uk;
    long long S = 0;
};
inline RootSums root_sums(int n, int p, int q) {
    std::vector<long long> H(n, 0), G(n, 0);
    for (int i = 0; i < n; ++i) {
        if (i < p) {
            H[i] = 1;
            G[i] = -3 * n + i;
        } else if (i >= n - q) {
            H[i] = -1;
            G[i] = 2 * n - (i - (n - q));
        } else {
            G[i] = -(i - p + 1);
        }
    }
    RootSums r;
    r.l.assign(n, 0);
    r.up.assign(n, 0);
    r.uk.assign(n, 0);
    // (coeffs, compact)
    std::vector<std::pair<std::vector<int>, bool>> roots;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            std::vector<int> a(n, 0);
            a[i] = 1;
            a[j] = -1;
            roots.push_back({a, true});
            if (i < j) {
                std::vector<int> b(n, 0), c(n, 0);
                b[i] = b[j] = 1;
                c[i] = c[j] = -1;
                roots.push_back({b, false});
                roots.push_back({c, false});
            }
        }
    for (int i = 0; i < n; ++i) {
        std::vector<int> b(n, 0), c(n, 0);
        b[i] = 2;
        c[i] = -2;
        roots.push_back({b, false});
        roots.push_back({c, false});
    }
    for (auto& [a, compact] : roots) {
        long long h = 0, g = 0;
        for (int i = 0; i < n; ++i) {
            h += a[i] * H[i];
            g += a[i] * G[i];
        }
        std::vector<long long>* dst = nullptr;
        if (h > 0) {
            dst = compact ? &r.uk : &r.up;
            if (compact) ++r.S;
        } else if (h == 0 && g > 0) {
            dst = &r.l;
        }
        if (dst)
            for (int i = 0; i < n; ++i) (*dst)[i] += a[i];
    }
    return r;
}

}  // namespace oracle
