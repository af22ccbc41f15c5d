// SPDX-License-Identifier: Apache-2.0
#include "apk/cohind.hpp"

#include "apk/params.hpp"
#include "apk/weights.hpp"

namespace apk {

namespace {

void check_pq(int n, int p, int q) {
    if (n < 1 || p < 0 || q < 0 || p + q > n) fail(ErrorKind::InvalidArgument, "need n >= 1, p, q >= 0, p + q <= n");
}

}  // namespace

RhoVectors rho_vectors(int n, int p, int q) {
    check_pq(n, p, q);
    const int mid = n - p - q;
    RhoVectors r;
    for (int i = 0; i < p; ++i) r.delta_l.push_back(-q - p + 1 + 2 * i);
    for (int i = 1; i <= mid; ++i) r.delta_l.push_back(-2 * i);
    for (int i = 0; i < q; ++i) r.delta_l.push_back(-p + q - 1 - 2 * i);

    auto block = [&](HalfVec& v, long long a, long long b, long long c) {
        v.insert(v.end(), p, a);
        v.insert(v.end(), mid, b);
        v.insert(v.end(), q, c);
    };
    block(r.delta_u_p, n - q + 1, p - q, -n + p - 1);
    block(r.delta_u_k, n - p, -p + q, -(n - q));
    const long long s = 2LL * n - p - q + 1;
    block(r.delta_u, s, 0, -s);
    for (int i = 1; i <= p; ++i) r.delta_pq.push_back(2LL * (n - p - q + i));
    for (int i = 1; i <= mid; ++i) r.delta_pq.push_back(-2LL * i);
    for (int i = 1; i <= q; ++i) r.delta_pq.push_back(-2LL * (n - q + i));
    r.S = 1LL * p * (n - p) + 1LL * mid * q;
    return r;
}

RhoVectors rho_vectors_from_roots(int n, int p, int q) {
    check_pq(n, p, q);
    // coordinates 0-based; P = [0,p), M = [p, n-q), Q = [n-q, n)
    auto inP = [&](int i) { return i < p; };
    auto inM = [&](int i) { return i >= p && i < n - q; };
    auto inQ = [&](int i) { return i >= n - q; };
    RhoVectors r;
    r.delta_l.assign(n, 0);
    r.delta_u_p.assign(n, 0);
    r.delta_u_k.assign(n, 0);
    // summing roots gives 2*rho directly, i.e. the doubled half-sum
    auto add = [](HalfVec& v, int i, int ci, int j, int cj) {
        v[i] += ci;
        if (j >= 0) v[j] += cj;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // Levi positive roots
            if (inP(i) && inP(j)) add(r.delta_l, i, -1, j, +1);
            if (inQ(i) && inQ(j)) add(r.delta_l, i, +1, j, -1);
            if (inM(i) && inM(j)) {
                add(r.delta_l, i, +1, j, -1);
                add(r.delta_l, i, -1, j, -1);
            }
            if (inP(i) && inQ(j)) add(r.delta_l, i, -1, j, -1);
            // u cap p
            if (inP(i) && inP(j)) add(r.delta_u_p, i, +1, j, +1);
            if (inQ(i) && inQ(j)) add(r.delta_u_p, i, -1, j, -1);
            if (inP(i) && inM(j)) add(r.delta_u_p, i, +1, j, +1);
            if (inM(i) && inQ(j)) add(r.delta_u_p, i, -1, j, -1);
            // u cap k
            if ((inP(i) && !inP(j)) || (inM(i) && inQ(j))) {
                add(r.delta_u_k, i, +1, j, -1);
                ++r.S;
            }
        }
        if (inM(i)) add(r.delta_l, i, -2, -1, 0);
        if (inP(i)) add(r.delta_u_p, i, +2, -1, 0);
        if (inQ(i)) add(r.delta_u_p, i, -2, -1, 0);
    }
    r.delta_u.assign(n, 0);
    r.delta_pq.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        r.delta_u[i] = r.delta_u_p[i] + r.delta_u_k[i];
        r.delta_pq[i] = r.delta_l[i] + r.delta_u[i];
    }
    return r;
}

HalfVec lambda_of(int n, int p, int q, int t) {
    check_pq(n, p, q);
    const long long y2 = static_cast<long long>(t) + p + q - 1 - 2LL * n;  // doubled
    HalfVec v;
    v.insert(v.end(), p, y2);
    v.insert(v.end(), n - p - q, 0);
    v.insert(v.end(), q, -y2);
    return v;
}

bool weakly_fair(int t) { return t >= 0; }

bool ktype_inequality_scalar(long long m, int p, int q, int t) {
    // doubled: 2m(q-p) >= (p+q)(t+p+q+1) - 4pq
    const long long lhs = 2 * m * (q - p);
    const long long rhs = static_cast<long long>(p + q) * (t + p + q + 1) - 4LL * p * q;
    return lhs >= rhs;
}

bool ktype_inequality_general(const HighestWeight& mu, int p, int q, int t) {
    const int n = mu.n;
    check_pq(n, p, q);
    long long lhs = 0;
    for (int i = 1; i <= p; ++i) lhs -= mu.m[n - i];
    for (int j = 1; j <= q; ++j) lhs += mu.m[j - 1];
    // doubled right side before simplification
    const long long rhs2 = static_cast<long long>(p + q) * (t + p + q - 1 - 2LL * n) +
                           2LL * (1LL * p * (n - q + 1) + 1LL * q * (n - p + 1));
    return 2 * lhs >= rhs2;
}

InductionWeights induction_weights(const ArthurParameter& psi) {
    require_valid(psi);
    InductionWeights w;
    long long before = 0;
    for (auto& d : psi.discrete) {
        const long long base = 2LL * (psi.n - before);
        w.lambda_shift_low.push_back(HalfVec(d.a, base - (d.t - d.a + 1)));
        w.lambda_shift_high.push_back(HalfVec(d.a, base - (d.t + d.a - 1)));
        before += d.a;
    }
    return w;
}

RegularLambda aqlambda_regular(const std::vector<int>& chi_plus, int a) {
    const auto mu = regular_module_weight(chi_plus, a);
    const int n = mu.n, ell = n - a;
    // mu_a = (-m_n, ..., -m_1); 2 rho(u cap p) = (-l^a, -(n+1)^l)
    HalfVec mu_a, two_rho_up, rho, lam, lpr, expected;
    for (int i = n; i >= 1; --i) mu_a.push_back(-2LL * mu.m[i - 1]);
    for (int i = 0; i < n; ++i) two_rho_up.push_back(i < a ? -2LL * ell : -2LL * (n + 1));
    for (int i = 1; i <= n; ++i) rho.push_back(-2LL * i);
    for (int i = 0; i < n; ++i) {
        lam.push_back(mu_a[i] - two_rho_up[i]);
        lpr.push_back(lam[i] + rho[i]);
    }
    for (int i = 1; i <= a; ++i) expected.push_back(-2LL * i);
    for (int j = ell; j >= 1; --j) expected.push_back(2LL * (-mu.m[j - 1] + j));
    return RegularLambda{lam, lpr, expected};
}

}  // namespace apk
