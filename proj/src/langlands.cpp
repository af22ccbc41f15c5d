// SPDX-License-Identifier: Apache-2.0
#include "apk/langlands.hpp"

#include "apk/params.hpp"

namespace apk {

std::string StandardModule::base_label() const {
    return "pi_" + std::to_string(base_rank) + "(" + std::to_string(base_rank) + ")";
}

StandardModule standard_pi(int n, int m) {
    if (m < 1 || m >= n) fail(ErrorKind::InvalidArgument, "standard_pi needs 1 <= m < n");
    StandardModule sm;
    sm.kind = StandardModule::Pi;
    sm.n = n;
    sm.index = m;
    for (int e = n - m; e >= 1; --e) sm.exponents.push_back({m % 2, e});
    sm.base_rank = m;
    return sm;
}

StandardModule standard_sigma(int n, int k) {
    if (k < 1 || 2 * k > n) fail(ErrorKind::InvalidArgument, "standard_sigma needs 2 <= 2k <= n");
    StandardModule sm;
    sm.kind = StandardModule::Sigma;
    sm.n = n;
    sm.index = k;
    for (int e = n - k; e >= k + 1; --e) sm.exponents.push_back({k % 2, e});
    for (int e = k - 1; e >= 1; --e) sm.exponents.push_back({k % 2, e});
    sm.base_rank = k + 1;
    return sm;
}

int max_exponent(const StandardModule& sm) { return sm.exponents.empty() ? 0 : sm.exponents.front().exponent; }

bool cor93_filter(const ArthurParameter& psi, const StandardModule& sm) {
    require_valid(psi);
    const int e = max_exponent(sm);
    const int a = a_psi(psi);
    if (sm.kind == StandardModule::Sigma) return (a - 1) / 2 >= e;
    // pi_n(m): strict unless the big block is present and is the largest block overall
    const int need = 2 * e + 1;
    const bool strict = a > a_psi_u(psi) || !contains_block(psi, UnipotentBlock{sm.index % 2, need});
    return strict ? a > need : a >= need;
}

}  // namespace apk
