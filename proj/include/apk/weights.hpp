// SPDX-License-Identifier: Apache-2.0
// Holomorphic highest weights: unitarity, infinitesimal characters, theta sources.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apk/types.hpp"

namespace apk {

HighestWeight make_weight(std::vector<int> entries);  // throws Validation unless weakly decreasing, n >= 1

struct Unitarity {
    bool unitary = false;
    int u = 0;  // #{i : m_i = m_n}
    int v = 0;  // #{i : m_i = m_n + 1}
};
Unitarity classify_unitary(const HighestWeight& mu);

InfChar inf_char_of_weight(const HighestWeight& mu);
bool is_valid_inf_char(const InfChar& chi);

HighestWeight pi_nm(int n, int m);     // scalar weight (m,...,m), 0 <= m <= n
HighestWeight sigma_nk(int n, int k);  // ((k+1)^{2k}, k^{n-2k}), 1 <= k, 2k <= n

// Label [nu_1,...,nu_l]_{sign} of a representation of the compact group O(0,2l).
struct OrthRepLabel {
    std::vector<int> nu;
    int sign = +1;
    bool operator==(const OrthRepLabel&) const = default;
};
std::string to_string(const OrthRepLabel& l);

enum class HoweCase { A, BPrime, BDoublePrime, D, C };
std::string to_string(HoweCase c);

struct HoweSource {
    HoweCase kase = HoweCase::A;
    int ell = 0;
    OrthRepLabel label;
    // second description when the (d) shape applies on top of (b)
    std::optional<int> alt_ell;
    std::optional<OrthRepLabel> alt_label;
};
HoweSource howe_source(const HighestWeight& mu);

// Largest a with unit tail (a,...,1) on the positive part of a regular character.
int regular_a_max(const InfChar& chi);
int regular_a_max_positive(const std::vector<int>& chi_plus);  // chi_1 > ... > chi_n > 0

// The highest weight of the module pi_a sharing the regular character chi.
HighestWeight regular_module_weight(const std::vector<int>& chi_plus, int a);

}  // namespace apk
