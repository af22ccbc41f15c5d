// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "apk/weights.hpp"
#include "oracles.hpp"

using namespace apk;

TEST_CASE("make_weight rejects increasing entries and empty input") {
    CHECK_THROWS_AS(make_weight({1, 2}), Error);
    CHECK_THROWS_AS(make_weight({}), Error);
    CHECK(make_weight({3, 3, 1}).n == 3);
}

TEST_CASE("unitarity counts u and v and compares exactly") {
    auto r = classify_unitary(make_weight({3, 2, 2, 2}));
    CHECK(r.unitary);
    CHECK(r.u == 3);
    CHECK(r.v == 1);
    // boundary: 2 m_n == 2n - 2u - v
    CHECK(classify_unitary(make_weight({1, 1})).unitary);
    CHECK_FALSE(classify_unitary(make_weight({1, 0, 0, 0})).unitary);
}

TEST_CASE("scalar and near-scalar weights are unitary, sigma on the boundary") {
    for (int n = 1; n <= 8; ++n) {
        for (int m = 0; m <= n; ++m) CHECK(classify_unitary(pi_nm(n, m)).unitary);
        for (int k = 1; 2 * k <= n; ++k) {
            auto mu = sigma_nk(n, k);
            auto r = classify_unitary(mu);
            CHECK(r.unitary);
            if (2 * k == n) continue;  // scalar weight, handled above
            CHECK(r.u == n - 2 * k);
            CHECK(r.v == 2 * k);
            CHECK(2 * mu.m.back() == 2 * n - 2 * r.u - r.v);
        }
    }
    CHECK_THROWS_AS(pi_nm(3, 4), Error);
    CHECK_THROWS_AS(sigma_nk(3, 2), Error);
}

TEST_CASE("infinitesimal characters of unitary weights are well formed") {
    for (int n = 1; n <= 6; ++n)
        for (int m = 0; m <= n; ++m) {
            auto chi = inf_char_of_weight(pi_nm(n, m));
            CHECK(chi.size() == static_cast<size_t>(2 * n + 1));
            CHECK(is_valid_inf_char(chi));
        }
    CHECK(inf_char_of_weight(pi_nm(2, 1)) == InfChar{1, 0, 0, 0, -1});
    CHECK_FALSE(is_valid_inf_char({1, 0}));
    CHECK_FALSE(is_valid_inf_char({2, 0, -1}));
}

TEST_CASE("theta source of scalar weights") {
    for (int n = 1; n <= 8; ++n)
        for (int m = 1; 2 * m <= n + 1 && m <= n; ++m) {
            auto s = howe_source(pi_nm(n, m));
            CHECK(s.ell == m);
            CHECK(s.label.sign == +1);
            CHECK(s.label.nu == std::vector<int>(m, 0));
            CHECK(s.kase == HoweCase::BDoublePrime);
        }
    auto a = howe_source(make_weight({7, 7}));
    CHECK(a.kase == HoweCase::A);
    CHECK(a.ell == 2);
}

TEST_CASE("theta source of sigma is a det-type label") {
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; 2 * k <= n; ++k) {
            auto s = howe_source(sigma_nk(n, k));
            if (2 * k < n) {
                CHECK(s.kase == HoweCase::C);
                CHECK(s.ell == k);
                CHECK(s.label.sign == -1);
                CHECK(s.label.nu == std::vector<int>(k, 0));
            }
        }
    CHECK(to_string(howe_source(make_weight({3, 3, 3, 3, 2})).label) == "[0,0]_-");
}

TEST_CASE("regular modules are exactly the unitary weights of a regular character") {
    for (int n = 1; n <= 5; ++n) {
        // all strictly decreasing positive characters with entries <= n + 3
        std::vector<int> sel(n);
        auto rec = [&](auto&& self, int i, int hi) -> void {
            if (i == n) {
                const int amax = regular_a_max_positive(sel);
                std::set<std::vector<int>> mine;
                for (int a = 0; a <= amax; ++a) mine.insert(regular_module_weight(sel, a).m);
                CHECK(mine == oracle::unitary_weights_regular(sel));
                return;
            }
            for (int x = hi; x >= n - i; --x) {
                sel[i] = x;
                self(self, i + 1, x - 1);
            }
        };
        rec(rec, 0, n + 3);
    }
    CHECK_THROWS_AS(regular_a_max_positive({2, 2}), Error);
}
