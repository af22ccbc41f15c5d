// SPDX-License-Identifier: Apache-2.0
#include "apk/tableaux.hpp"

#include <algorithm>
#include <map>

#include "apk/types.hpp"

namespace apk {

int SignedTableau::boxes() const {
    int s = 0;
    for (auto& r : rows) s += r.length;
    return s;
}

std::vector<std::string> SignedTableau::render() const {
    std::vector<std::string> out;
    for (auto& r : rows) {
        std::string s;
        int sg = r.lead;
        for (int i = 0; i < r.length; ++i, sg = -sg) s += (sg > 0 ? '+' : '-');
        out.push_back(s);
    }
    return out;
}

std::string to_string(TableauViolation v) {
    switch (v) {
        case TableauViolation::BoxCount: return "BOX_COUNT";
        case TableauViolation::OddRowBalance: return "ODD_ROW_BALANCE";
        case TableauViolation::BadRow: return "BAD_ROW";
    }
    return "?";
}

std::vector<TableauViolation> validate_tableau(const SignedTableau& T, int n) {
    std::vector<TableauViolation> out;
    bool rows_ok = true;
    for (auto& r : T.rows)
        if (r.length < 1 || (r.lead != 1 && r.lead != -1)) rows_ok = false;
    if (!rows_ok) out.push_back(TableauViolation::BadRow);
    if (T.boxes() != 2 * n) out.push_back(TableauViolation::BoxCount);
    // odd lengths: even count, half leading with each sign
    std::map<int, std::pair<int, int>> odd;
    for (auto& r : T.rows)
        if (r.length % 2 == 1) (r.lead > 0 ? odd[r.length].first : odd[r.length].second)++;
    for (auto& [len, c] : odd)
        if (c.first != c.second) {
            out.push_back(TableauViolation::OddRowBalance);
            break;
        }
    return out;
}

SignedTableau pminus_orbit(int n, int r) {
    if (n < 0 || r < 0 || r > n) fail(ErrorKind::InvalidArgument, "need 0 <= r <= n");
    SignedTableau T;
    T.rows.insert(T.rows.end(), r, SignedRow{2, +1});
    T.rows.insert(T.rows.end(), n - r, SignedRow{1, +1});
    T.rows.insert(T.rows.end(), n - r, SignedRow{1, -1});
    return T;
}

std::vector<SignedTableau> pminus_orbits(int n) {
    std::vector<SignedTableau> out;
    for (int r = 0; r <= n; ++r) out.push_back(pminus_orbit(n, r));
    return out;
}

int pminus_rank(const SignedTableau& T, int n) {
    if (!validate_tableau(T, n).empty()) return -1;
    int r = 0, plus1 = 0, minus1 = 0;
    for (auto& row : T.rows) {
        if (row.length == 2 && row.lead > 0)
            ++r;
        else if (row.length == 1)
            (row.lead > 0 ? plus1 : minus1)++;
        else
            return -1;
    }
    if (plus1 != n - r || minus1 != n - r) return -1;
    return r;
}

SignedTableau av_scalar(int n, int m) {
    if (n < 1 || m < 0 || m > n) fail(ErrorKind::InvalidArgument, "need n >= 1 and 0 <= m <= n");
    return pminus_orbit(n, std::min(2 * m, n));
}

bool closure_leq(const SignedTableau& T1, const SignedTableau& T2, int n) {
    const int r1 = pminus_rank(T1, n), r2 = pminus_rank(T2, n);
    if (r1 < 0 || r2 < 0) fail(ErrorKind::Validation, "closure order is only defined on the p^- chain");
    return r1 <= r2;
}

}  // namespace apk
