// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "apk/cohind.hpp"
#include "apk/params.hpp"
#include "apk/weights.hpp"
#include "oracles.hpp"

using namespace apk;

TEST_CASE("half sums match explicit root lists") {
    for (int n = 1; n <= 10; ++n)
        for (int p = 0; p <= n; ++p)
            for (int q = 0; p + q <= n; ++q) {
                auto r = rho_vectors(n, p, q);
                auto o = oracle::root_sums(n, p, q);
                CHECK(r.delta_l == o.l);
                CHECK(r.delta_u_p == o.up);
                CHECK(r.delta_u_k == o.uk);
                CHECK(r.S == o.S);
                for (int i = 0; i < n; ++i) {
                    CHECK(r.delta_u[i] == r.delta_u_p[i] + r.delta_u_k[i]);
                    CHECK(r.delta_pq[i] == r.delta_l[i] + r.delta_u[i]);
                }
                auto f = rho_vectors_from_roots(n, p, q);
                CHECK(f.delta_l == r.delta_l);
                CHECK(f.delta_u == r.delta_u);
            }
}

TEST_CASE("the scalar inequality never holds with p >= 1") {
    for (int n = 1; n <= 12; ++n)
        for (int m = 1; m <= n; ++m)
            for (int a = 1; a <= m; ++a)
                for (int p = 1; p <= a; ++p) CHECK_FALSE(ktype_inequality_scalar(m, p, a - p, 2 * m - a - 1));
}

TEST_CASE("the general inequality specializes to the scalar one") {
    for (int n = 1; n <= 8; ++n)
        for (int m = 0; m <= n; ++m)
            for (int p = 0; p <= n; ++p)
                for (int q = 0; p + q <= n; ++q)
                    for (int t = 0; t <= 6; ++t)
                        CHECK(ktype_inequality_general(pi_nm(n, m), p, q, t) == ktype_inequality_scalar(m, p, q, t));
}

TEST_CASE("lambda and fairness") {
    auto l = lambda_of(3, 1, 1, 2);
    CHECK(l == HalfVec{-3, 0, 3});
    CHECK(weakly_fair(0));
    CHECK_FALSE(weakly_fair(-1));
}

TEST_CASE("regular modules: lambda + rho is the stated vector and conjugate to the character") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> sel(n);
        auto rec = [&](auto&& self, int i, int hi) -> void {
            if (i == n) {
                for (int a = 0; a <= regular_a_max_positive(sel); ++a) {
                    auto r = aqlambda_regular(sel, a);
                    CHECK(r.lambda_plus_rho == r.expected);
                    std::vector<long long> absd, ch;
                    for (auto x : r.lambda_plus_rho) absd.push_back(std::llabs(x));
                    for (int x : sel) ch.push_back(2LL * x);
                    std::sort(absd.rbegin(), absd.rend());
                    CHECK(absd == ch);
                }
                return;
            }
            for (int x = hi; x >= n - i; --x) {
                sel[i] = x;
                self(self, i + 1, x - 1);
            }
        };
        rec(rec, 0, n + 2);
    }
}

TEST_CASE("induction shifts use both segment ends") {
    ArthurParameter p{2, {{0, 1}}, {{1, 2}}};
    auto w = induction_weights(p);
    REQUIRE(w.lambda_shift_low.size() == 1);
    CHECK(w.lambda_shift_low[0].size() == 2);
    CHECK(w.lambda_shift_high[0][0] - w.lambda_shift_low[0][0] == -2);
}
