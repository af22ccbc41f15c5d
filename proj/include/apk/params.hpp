// SPDX-License-Identifier: Apache-2.0
// Arthur parameters as block multisets.
#pragma once

#include <string>
#include <vector>

#include "apk/types.hpp"

namespace apk {

enum class Violation { DimSum, ParityProduct, BlockShape, Order };
std::string to_string(Violation v);

// Empty result means the parameter is well formed.
std::vector<Violation> validate(const ArthurParameter& psi);
void require_valid(const ArthurParameter& psi);  // throws Validation listing codes

ArthurParameter canonicalize(ArthurParameter psi);

InfChar inf_char_of_param(const ArthurParameter& psi);
int a_psi(const ArthurParameter& psi);
int a_psi_u(const ArthurParameter& psi);
int dim_unipotent(const ArthurParameter& psi);
int dim_discrete(const ArthurParameter& psi);  // 2 * sum of a_j

// Multiply every character by sgn^{dim_d / 2}.
std::vector<UnipotentBlock> twist_sgn(std::vector<UnipotentBlock> blocks, int dim_discrete);

bool lemma43_check(const ArthurParameter& psi);
bool lemma43_check(const ArthurParameter& psi, const InfChar& target);

bool contains_block(const ArthurParameter& psi, const UnipotentBlock& b);
bool contains_block(const ArthurParameter& psi, const DiscreteBlock& b);

// Drop discrete block j (canonical index) and twist by sgn^{a_j}; rank drops by a_j.
ArthurParameter remove_block(const ArthurParameter& psi, size_t j);

// Segment [(t-a+1)/2, (t+a-1)/2] of a discrete block.
inline int seg_lo(const DiscreteBlock& d) { return (d.t - d.a + 1) / 2; }
inline int seg_hi(const DiscreteBlock& d) { return (d.t + d.a - 1) / 2; }

struct EnumerationLimits {
    int max_rank = 12;
};

// All valid parameters with the given infinitesimal character, canonical and duplicate free.
std::vector<ArthurParameter> enumerate_params(const InfChar& chi, int n, const EnumerationLimits& lim = {});

}  // namespace apk
