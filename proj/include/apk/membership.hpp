// SPDX-License-Identifier: Apache-2.0
// Which packets contain the scalar modules pi_n(m), the modules sigma_{n,k},
// and the modules pi_a of a regular character.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apk/params.hpp"
#include "apk/types.hpp"

namespace apk {

enum class Route { None, Trivial, Thm71I, Thm71IIA1, Thm71IIA3, Unipotent, Regular, Sigma };
std::string to_string(Route r);

struct Verdict {
    bool member = false;
    Route route = Route::None;
    int multiplicity = 0;  // 1 for members, 0 otherwise
};

Verdict decide_pi(const ArthurParameter& psi, int n, int m);
Verdict decide_sigma(const ArthurParameter& psi, int n, int k);
bool decide_regular(const ArthurParameter& psi, int a);

// Purely unipotent parameters (no discrete part).
struct UnipotentMembers {
    bool trivial = false;           // the trivial representation (pi_n(0))
    std::optional<int> pi_m;        // pi_n(m) with m = (b+1)/2
    std::optional<int> sigma_k;     // sigma_{n,k} with k = (b+1)/2, when b+1 <= n
};
UnipotentMembers decide_unipotent(const ArthurParameter& psi);

struct PeelResult {
    enum Kind { None, Peel, Reject } kind = None;
    size_t j0 = 0;
    ArthurParameter reduced;  // only for Peel
    int n2 = 0, m2 = 0;
};
PeelResult peel_step(const ArthurParameter& psi, int n, int m);

// Independent reduction oracle: peel discrete blocks, then decide a base case.
bool decide_pi_recursive(const ArthurParameter& psi, int n, int m);

bool necessary_cor93(const ArthurParameter& psi, int n, int m);

// Largest unipotent block dimension and its character must follow the (a_1, eta_1) rule.
bool unipotent_leading_block_rule(const ArthurParameter& psi, int n, int m);

struct PacketEntry {
    ArthurParameter psi;
    Verdict verdict;
};
std::vector<PacketEntry> enumerate_packets_pi(int n, int m, const EnumerationLimits& lim = {});
std::vector<PacketEntry> enumerate_packets_sigma(int n, int k, const EnumerationLimits& lim = {});

// The parameter sgn^k R[2(n-k)+1] + delta_{k-1} R[k]; for k = 1 the
// degenerate delta_0 is read as triv + sgn on R[1].
ArthurParameter sigma_reference_param(int n, int k);

}  // namespace apk
