// SPDX-License-Identifier: Apache-2.0
// Combinatorial data of maximal theta-stable parabolics of Sp(2n,R).
// Half-integer vectors are stored doubled.
#pragma once

#include <vector>

#include "apk/types.hpp"

namespace apk {

using HalfVec = std::vector<long long>;  // value = stored / 2

struct RhoVectors {
    HalfVec delta_l, delta_u_p, delta_u_k, delta_u, delta_pq;
    long long S = 0;  // dim(u cap k)
};

// Printed closed forms.
RhoVectors rho_vectors(int n, int p, int q);
// Half sums over explicitly generated positive root lists.
RhoVectors rho_vectors_from_roots(int n, int p, int q);

HalfVec lambda_of(int n, int p, int q, int t);
bool weakly_fair(int t);

// m(q-p) >= (p+q)(t+p+q+1)/2 - 2pq
bool ktype_inequality_scalar(long long m, int p, int q, int t);
// -sum_{i<=p} m_{n-i+1} + sum_{j<=q} m_j >= (p+q)((t+p+q-1)/2 - n) + p(n-q+1) + q(n-p+1)
bool ktype_inequality_general(const HighestWeight& mu, int p, int q, int t);

struct InductionWeights {
    std::vector<HalfVec> lambda_shift_low;   // uses (t_j - a_j + 1)/2
    std::vector<HalfVec> lambda_shift_high;  // uses (t_j + a_j - 1)/2
};
InductionWeights induction_weights(const ArthurParameter& psi);

struct RegularLambda {
    HalfVec lambda;       // mu_a - 2 rho(u cap p)
    HalfVec lambda_plus_rho;
    HalfVec expected;     // (-1,...,-a, -m_l + l, ..., -m_1 + 1)
};
RegularLambda aqlambda_regular(const std::vector<int>& chi_plus, int a);

}  // namespace apk
