// SPDX-License-Identifier: Apache-2.0
// Component groups A(psi) and the sign characters attached to packet members.
#pragma once

#include <string>
#include <vector>

#include "apk/types.hpp"

namespace apk {

struct ComponentGroup {
    std::vector<Block> distinct;
    std::vector<int> multiplicity;
    // w_d = multiplicity_d mod 2
    std::vector<int> relation() const;
    long long order() const;
};
ComponentGroup component_group(const std::vector<Block>& blocks);
ComponentGroup component_group(const ArthurParameter& psi);

// Discrete blocks in canonical order, then unipotent blocks in canonical order.
std::vector<Block> listed_blocks(const ArthurParameter& psi);

struct PacketCharacter {
    int whittaker = 1;
    std::vector<Block> blocks;
    std::vector<int> signs;  // aligned with blocks
};

bool constant_on_equal_blocks(const PacketCharacter& c);
// Same block multiset, both constant on equal blocks, and signs equal up to
// flipping every odd-multiplicity block at once.
bool char_equivalent(const PacketCharacter& c1, const PacketCharacter& c2);
PacketCharacter normalize_representative(PacketCharacter c);

enum class Side { Positive /* O(2m,0) */, Negative /* O(0,2m) */ };
std::string to_string(Side s);

struct ThetaCharacter {
    PacketCharacter chr;
    bool constant = true;  // false when equal blocks receive different signs
};
// Image of det^tau under theta, parameter with sgn^{tau'} on R[1].
ThetaCharacter rho_theta(int n, int m, int tau_prime, int tau, int delta, Side side);

enum class CorForm { First, Second };
enum class CorRow { Pi, Sigma, PiStar, SigmaStar };
std::string to_string(CorForm f);
std::string to_string(CorRow r);

ArthurParameter cor_param(CorForm form, int n, int m);
// Triples exactly as tabulated, blocks R[1], R[2m-1], R[2(n-m)+1].
PacketCharacter rho_unipotent_table(CorForm form, int n, int m, CorRow row, int delta);

// Signs on the discrete blocks, in canonical order, before any normalization.
std::vector<int> rho_discrete_signs(const ArthurParameter& psi, int delta, int* sum_a = nullptr);
PacketCharacter rho_pi_general(const ArthurParameter& psi, int n, int m, int delta);
PacketCharacter rho_sigma_general(const ArthurParameter& psi, int n, int k, int delta);

// Same as the general formulas but with the two R[1]-type blocks labelled the
// other way round when both have dimension 1; used to test labelling coherence.
PacketCharacter rho_pi_general_swapped(const ArthurParameter& psi, int n, int m, int delta);
PacketCharacter rho_sigma_general_swapped(const ArthurParameter& psi, int n, int k, int delta);

struct TableCheck {
    CorForm form;
    CorRow row;
    int table_m;  // m used in the table lookup
    PacketCharacter table;
    bool equivalent;
    bool documented_discrepancy;  // table row known to disagree with the theta formula
};
// Compares a general character on a unipotent parameter with every table row
// that describes the same parameter and module.
std::vector<TableCheck> cross_check_unipotent(const ArthurParameter& psi, int n, int index, bool sigma, int delta);

// Rows of the table that disagree with the theta formula; see README.
bool is_documented_table_discrepancy(CorForm form, CorRow row);

}  // namespace apk
