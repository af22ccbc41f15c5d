// SPDX-License-Identifier: Apache-2.0
// Signed Young tableaux for K_C-orbits of Sp(2n,R) and the chain of orbits in p^-.
#pragma once

#include <string>
#include <vector>

namespace apk {

struct SignedRow {
    int length = 1;
    int lead = +1;  // sign of the first box
    bool operator==(const SignedRow&) const = default;
};

struct SignedTableau {
    std::vector<SignedRow> rows;
    int boxes() const;
    std::vector<std::string> render() const;  // "+-+", ...
};

enum class TableauViolation { BoxCount, OddRowBalance, BadRow };
std::string to_string(TableauViolation v);

std::vector<TableauViolation> validate_tableau(const SignedTableau& T, int n);

// r rows "+-", then n-r rows "+" and n-r rows "-".
SignedTableau pminus_orbit(int n, int r);
std::vector<SignedTableau> pminus_orbits(int n);
// r if T lies in the p^- chain, else -1 (e.g. any 2-row starting with -).
int pminus_rank(const SignedTableau& T, int n);

SignedTableau av_scalar(int n, int m);
bool closure_leq(const SignedTableau& T1, const SignedTableau& T2, int n);

}  // namespace apk
