// SPDX-License-Identifier: Apache-2.0
// Standard-module data of pi_n(m) and sigma_{n,k}.
#pragma once

#include <string>
#include <vector>

#include "apk/types.hpp"

namespace apk {

struct GL1Exponent {
    int sgn = 0;  // power of sgn, reduced mod 2
    int exponent = 1;
    bool operator==(const GL1Exponent&) const = default;
};

struct StandardModule {
    enum Kind { Pi, Sigma } kind = Pi;
    int n = 0, index = 0;  // m for pi, k for sigma
    std::vector<GL1Exponent> exponents;  // strictly decreasing
    int base_rank = 0;                   // tempered anchor pi_r(r)
    std::string base_label() const;
};

StandardModule standard_pi(int n, int m);     // 1 <= m < n
StandardModule standard_sigma(int n, int k);  // 2 <= 2k <= n
int max_exponent(const StandardModule& sm);
bool cor93_filter(const ArthurParameter& psi, const StandardModule& sm);

}  // namespace apk
