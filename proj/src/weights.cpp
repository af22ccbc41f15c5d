// SPDX-License-Identifier: Apache-2.0
#include "apk/weights.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace apk {

HighestWeight make_weight(std::vector<int> entries) {
    if (entries.empty()) fail(ErrorKind::Validation, "weight must have at least one entry");
    for (size_t i = 1; i < entries.size(); ++i)
        if (entries[i] > entries[i - 1]) fail(ErrorKind::Validation, "weight entries must be weakly decreasing");
    HighestWeight mu;
    mu.n = static_cast<int>(entries.size());
    mu.m = std::move(entries);
    return mu;
}

Unitarity classify_unitary(const HighestWeight& mu) {
    Unitarity r;
    const int mn = mu.m.back();
    for (int x : mu.m) {
        if (x == mn) ++r.u;
        if (x == mn + 1) ++r.v;
    }
    // m_n >= n - (u + v/2), doubled
    r.unitary = 2 * mn >= 2 * mu.n - 2 * r.u - r.v;
    return r;
}

InfChar inf_char_of_weight(const HighestWeight& mu) {
    InfChar chi;
    chi.reserve(2 * mu.n + 1);
    for (int i = 1; i <= mu.n; ++i) {
        chi.push_back(mu.m[i - 1] - i);
        chi.push_back(-(mu.m[i - 1] - i));
    }
    chi.push_back(0);
    std::sort(chi.begin(), chi.end(), std::greater<>());
    return chi;
}

bool is_valid_inf_char(const InfChar& chi) {
    if (chi.size() % 2 == 0) return false;
    if (!std::is_sorted(chi.begin(), chi.end(), std::greater<>())) return false;
    std::map<int, int> mult;
    for (int x : chi) ++mult[x];
    for (auto [v, c] : mult)
        if (mult.count(-v) == 0 || mult.at(-v) != c) return false;
    return mult.count(0) != 0 && mult.at(0) % 2 == 1;
}

HighestWeight pi_nm(int n, int m) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "rank n must be >= 1");
    if (m < 0 || m > n) fail(ErrorKind::InvalidArgument, "pi_n(m) needs 0 <= m <= n (m > n is discrete series, not handled)");
    return HighestWeight{n, std::vector<int>(n, m)};
}

HighestWeight sigma_nk(int n, int k) {
    if (k < 1 || 2 * k > n) fail(ErrorKind::InvalidArgument, "sigma_{n,k} needs 1 <= k and 2k <= n");
    std::vector<int> m(n, k);
    std::fill(m.begin(), m.begin() + 2 * k, k + 1);
    return HighestWeight{n, m};
}

std::string to_string(const OrthRepLabel& l) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < l.nu.size(); ++i) os << (i ? "," : "") << l.nu[i];
    os << "]_" << (l.sign > 0 ? '+' : '-');
    return os.str();
}

std::string to_string(HoweCase c) {
    switch (c) {
        case HoweCase::A: return "a";
        case HoweCase::BPrime: return "b'";
        case HoweCase::BDoublePrime: return "b''";
        case HoweCase::D: return "d";
        case HoweCase::C: return "c";
    }
    return "?";
}

HoweSource howe_source(const HighestWeight& mu) {
    const auto un = classify_unitary(mu);
    if (!un.unitary) fail(ErrorKind::InvalidArgument, "howe_source needs a unitary weight");
    const int n = mu.n, u = un.u, v = un.v, mn = mu.m.back();
    auto m = [&](int i) { return mu.m[i - 1]; };  // 1-based
    HoweSource r;

    if (mn > n) {
        r.kase = HoweCase::A;
        r.ell = n;
        for (int i = 1; i <= n; ++i) r.label.nu.push_back(m(i) - n);
        r.label.sign = +1;
        return r;
    }
    const int a = n - mn;
    if (a >= 0 && a <= u) {
        r.ell = mn;
        for (int i = 1; i <= r.ell; ++i) r.label.nu.push_back(m(i) - r.ell);
        r.label.sign = +1;
        if (a == u) {
            r.kase = HoweCase::BPrime;
        } else if (2 * a >= u - 1) {
            r.kase = HoweCase::BDoublePrime;
        } else {
            // a <= u/2 - 1: second model on O(0, 2(m_n - 1))
            r.kase = HoweCase::D;
            const int l2 = mn - 1;
            OrthRepLabel alt;
            for (int i = 1; i <= 2 * l2 - n; ++i) alt.nu.push_back(m(i) - l2);
            alt.nu.insert(alt.nu.end(), n - l2, 0);
            alt.sign = -1;
            r.alt_ell = l2;
            r.alt_label = alt;
        }
        return r;
    }
    const int b = n - u - mn;
    if (b >= 1 && 2 * b <= v) {
        r.kase = HoweCase::C;
        r.ell = mn;
        for (int i = 1; i <= n - u - 2 * b; ++i) r.label.nu.push_back(m(i) - r.ell);
        r.label.nu.insert(r.label.nu.end(), b, 0);
        r.label.sign = -1;
        return r;
    }
    fail(ErrorKind::Internal, "unitary weight not covered by any theta case");
}

int regular_a_max_positive(const std::vector<int>& c) {
    const int n = static_cast<int>(c.size());
    for (int i = 0; i < n; ++i) {
        if (c[i] <= 0) fail(ErrorKind::InvalidArgument, "regular character needs positive entries");
        if (i && c[i] >= c[i - 1]) fail(ErrorKind::InvalidArgument, "regular character needs strictly decreasing entries");
    }
    if (n == 0 || c[n - 1] != 1) return 0;
    int a = 0;
    while (a < n && c[n - 1 - a] == a + 1) ++a;
    // a is now maximal with tail (a,...,1); the gap condition holds automatically
    return a;
}

int regular_a_max(const InfChar& chi) {
    if (!is_valid_inf_char(chi)) fail(ErrorKind::InvalidArgument, "not an infinitesimal character");
    std::vector<int> pos;
    for (int x : chi)
        if (x > 0) pos.push_back(x);
    const int n = static_cast<int>(chi.size() / 2);
    if (static_cast<int>(pos.size()) != n) fail(ErrorKind::InvalidArgument, "character is not regular");
    return regular_a_max_positive(pos);
}

HighestWeight regular_module_weight(const std::vector<int>& chi_plus, int a) {
    const int amax = regular_a_max_positive(chi_plus);
    if (a < 0 || a > amax) fail(ErrorKind::InvalidArgument, "a out of range [0, a_max]");
    const int n = static_cast<int>(chi_plus.size());
    const int ell = n - a;
    std::vector<int> m(n, ell);
    for (int i = 1; i <= ell; ++i) m[i - 1] = chi_plus[i - 1] + i;
    return make_weight(m);
}

}  // namespace apk
