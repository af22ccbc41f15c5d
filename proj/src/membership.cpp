// SPDX-License-Identifier: Apache-2.0
#include "apk/membership.hpp"

#include <algorithm>

#include "apk/weights.hpp"

namespace apk {

std::string to_string(Route r) {
    switch (r) {
        case Route::None: return "NONE";
        case Route::Trivial: return "TRIVIAL";
        case Route::Thm71I: return "THM71_I";
        case Route::Thm71IIA1: return "THM71_II_A1";
        case Route::Thm71IIA3: return "THM71_II_A3";
        case Route::Unipotent: return "UNIPOTENT";
        case Route::Regular: return "REGULAR";
        case Route::Sigma: return "SIGMA";
    }
    return "?";
}

namespace {

Verdict yes(Route r) { return Verdict{true, r, 1}; }
Verdict no() { return Verdict{}; }

void check_pi_args(const ArthurParameter& psi, int n, int m) {
    require_valid(psi);
    if (psi.n != n) fail(ErrorKind::InvalidArgument, "parameter rank differs from n");
    if (m < 0 || m > n) fail(ErrorKind::InvalidArgument, "need 0 <= m <= n");
}

bool segments_disjoint(const std::vector<DiscreteBlock>& d) {
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = i + 1; j < d.size(); ++j)
            if (std::max(seg_lo(d[i]), seg_lo(d[j])) <= std::min(seg_hi(d[i]), seg_hi(d[j]))) return false;
    return true;
}

// pi_n(m) character, usable for n = 0 inside the recursion
InfChar pi_char(int n, int m) {
    if (n == 0) return InfChar{0};
    return inf_char_of_weight(HighestWeight{n, std::vector<int>(n, m)});
}

}  // namespace

Verdict decide_pi(const ArthurParameter& psi, int n, int m) {
    check_pi_args(psi, n, m);
    if (inf_char_of_param(psi) != pi_char(n, m)) return no();

    if (m == 0 && psi.discrete.empty() && psi.unipotent.size() == 1 && psi.unipotent[0] == UnipotentBlock{0, 2 * n + 1})
        return yes(Route::Trivial);

    if (dim_unipotent(psi) == 1 && 2 * m > n + 1 && segments_disjoint(psi.discrete)) return yes(Route::Thm71I);

    // (ii): the largest unipotent block splits off with character sgn^{(2n+1-a)/2}
    const int au = a_psi_u(psi);
    const int a1 = 2 * (n - m) + 1;
    if (au == a1 && contains_block(psi, UnipotentBlock{m % 2, a1})) return yes(Route::Thm71IIA1);
    const int a3 = 2 * (n - m) + 3;
    if (2 * m >= n + 2 && au == a3 && contains_block(psi, UnipotentBlock{(m - 1) % 2, a3}))
        return yes(Route::Thm71IIA3);
    return no();
}

ArthurParameter sigma_reference_param(int n, int k) {
    if (k < 1 || 2 * k > n) fail(ErrorKind::InvalidArgument, "need 1 <= k and 2k <= n");
    ArthurParameter psi;
    psi.n = n;
    psi.unipotent.push_back({k % 2, 2 * (n - k) + 1});
    if (k == 1) {
        psi.unipotent.push_back({0, 1});
        psi.unipotent.push_back({1, 1});
    } else {
        psi.discrete.push_back({k - 1, k});
    }
    return canonicalize(psi);
}

Verdict decide_sigma(const ArthurParameter& psi, int n, int k) {
    require_valid(psi);
    if (psi.n != n) fail(ErrorKind::InvalidArgument, "parameter rank differs from n");
    if (k < 1 || 2 * k > n) fail(ErrorKind::InvalidArgument, "need 1 <= k and 2k <= n");
    if (n == 2 * k) {
        // sigma_{2k,k} is pi_{2k}(k+1)
        return decide_pi(psi, n, k + 1);
    }
    if (inf_char_of_param(psi) != inf_char_of_weight(sigma_nk(n, k))) return no();
    const int big = 2 * (n - k) + 1;
    if (a_psi_u(psi) == big && contains_block(psi, UnipotentBlock{k % 2, big})) return yes(Route::Sigma);
    return no();
}

bool decide_regular(const ArthurParameter& psi, int a) {
    require_valid(psi);
    const auto chi = inf_char_of_param(psi);
    const int amax = regular_a_max(chi);  // throws unless regular
    if (a < 0 || a > amax) fail(ErrorKind::InvalidArgument, "a out of range [0, a_max]");
    if (psi.unipotent.size() != 1) fail(ErrorKind::Internal, "regular character with reducible unipotent part");
    return psi.unipotent[0].dim == 2 * a + 1;
}

UnipotentMembers decide_unipotent(const ArthurParameter& psi) {
    require_valid(psi);
    if (!psi.discrete.empty()) fail(ErrorKind::InvalidArgument, "parameter has a discrete part");
    UnipotentMembers r;
    const int n = psi.n;
    const auto& u = psi.unipotent;
    if (u.size() == 1) {
        r.trivial = (u[0] == UnipotentBlock{0, 2 * n + 1});
        return r;
    }
    if (u.size() != 3 || u[2].dim != 1) return r;
    const int a = u[0].dim, b = u[1].dim;
    if (a + b != 2 * n) return r;
    const int mm = (b + 1) / 2;
    const QChar need = mm % 2;
    const bool ok = (u[0].chr == need) || (a == b && u[1].chr == need);
    if (!ok) return r;
    r.pi_m = mm;
    if (b + 1 <= n) r.sigma_k = mm;
    return r;
}

PeelResult peel_step(const ArthurParameter& psi, int n, int m) {
    PeelResult r;
    for (size_t j = 0; j < psi.discrete.size(); ++j) {
        const auto& d = psi.discrete[j];
        if (seg_hi(d) >= m - 1 && d.t - d.a + 1 >= 0) {
            r.j0 = j;
            if (seg_hi(d) == m - 1) {
                r.kind = PeelResult::Peel;
                r.reduced = remove_block(psi, j);
                r.n2 = n - d.a;
                r.m2 = m - d.a;
            } else {
                r.kind = PeelResult::Reject;
            }
            return r;
        }
    }
    return r;
}

namespace {

bool recursive_core(const ArthurParameter& psi, int n, int m) {
    auto step = peel_step(psi, n, m);
    if (step.kind == PeelResult::Reject) return false;
    if (step.kind == PeelResult::Peel) return recursive_core(step.reduced, step.n2, step.m2);

    if (psi.discrete.empty()) {
        auto u = decide_unipotent(psi);
        if (m == 0) return u.trivial;
        if (u.pi_m && *u.pi_m == m) return true;
        // sigma_{2k,k} = pi_{2k}(k+1)
        if (u.sigma_k && n == 2 * *u.sigma_k && m == *u.sigma_k + 1) return true;
        return false;
    }
    if (m == 0) return false;
    if (dim_unipotent(psi) == 1) {
        int top = seg_hi(psi.discrete.front());
        for (auto& d : psi.discrete) top = std::max(top, seg_hi(d));
        return 2 * m > n + 1 && segments_disjoint(psi.discrete) && top == m - 1;
    }
    // long unipotent part next to a discrete part that did not peel
    return n == 2 * (m - 1) && a_psi_u(psi) == n + 1 && contains_block(psi, UnipotentBlock{(n / 2) % 2, n + 1});
}

}  // namespace

bool decide_pi_recursive(const ArthurParameter& psi, int n, int m) {
    check_pi_args(psi, n, m);
    if (inf_char_of_param(psi) != pi_char(n, m)) return false;
    return recursive_core(psi, n, m);
}

bool necessary_cor93(const ArthurParameter& psi, int n, int m) {
    if (m < 1 || m >= n) return true;
    const int need = 2 * (n - m) + 1;
    const int a = a_psi(psi);
    const bool strict = a > a_psi_u(psi) || !contains_block(psi, UnipotentBlock{m % 2, need});
    return strict ? a > need : a >= need;
}

bool unipotent_leading_block_rule(const ArthurParameter& psi, int n, int m) {
    if (!psi.discrete.empty() || psi.unipotent.size() != 3) return true;
    const auto& u = psi.unipotent;
    const int a1 = u[0].dim, a2 = u[1].dim;
    if (a1 != 2 * (n - m) + 1 && a1 != 2 * (n - m) + 3) return false;
    const QChar need = ((a2 + 1) / 2) % 2;
    return u[0].chr == need || (a1 == a2 && u[1].chr == need);
}

std::vector<PacketEntry> enumerate_packets_pi(int n, int m, const EnumerationLimits& lim) {
    const auto chi = inf_char_of_weight(pi_nm(n, m));
    std::vector<PacketEntry> out;
    for (auto& psi : enumerate_params(chi, n, lim)) {
        auto v = decide_pi(psi, n, m);
        if (v.member) out.push_back({psi, v});
    }
    return out;
}

std::vector<PacketEntry> enumerate_packets_sigma(int n, int k, const EnumerationLimits& lim) {
    const auto chi = inf_char_of_weight(sigma_nk(n, k));
    std::vector<PacketEntry> out;
    for (auto& psi : enumerate_params(chi, n, lim)) {
        auto v = decide_sigma(psi, n, k);
        if (v.member) out.push_back({psi, v});
    }
    return out;
}

}  // namespace apk
