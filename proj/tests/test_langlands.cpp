// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "apk/langlands.hpp"
#include "apk/membership.hpp"

using namespace apk;

TEST_CASE("standard data of pi_n(m)") {
    auto s = standard_pi(5, 2);
    REQUIRE(s.exponents.size() == 3);
    CHECK(s.exponents.front().exponent == 3);
    CHECK(s.exponents.back().exponent == 1);
    for (auto& e : s.exponents) CHECK(e.sgn == 0);
    CHECK(s.base_label() == "pi_2(2)");
    CHECK_THROWS_AS(standard_pi(3, 3), Error);
}

TEST_CASE("standard data of sigma skips the exponent k") {
    auto s = standard_sigma(6, 2);
    std::vector<int> ex;
    for (auto& e : s.exponents) ex.push_back(e.exponent);
    CHECK(ex == std::vector<int>{4, 3, 1});
    CHECK(s.base_rank == 3);
    CHECK(max_exponent(standard_sigma(2, 1)) == 0);
}

TEST_CASE("every member clears the exponent bound") {
    for (int n = 2; n <= 8; ++n) {
        for (int m = 1; m < n; ++m) {
            auto sm = standard_pi(n, m);
            for (auto& e : enumerate_packets_pi(n, m))
                if (e.verdict.member) CHECK(cor93_filter(e.psi, sm));
        }
        for (int k = 1; 2 * k <= n; ++k) {
            auto sm = standard_sigma(n, k);
            for (auto& e : enumerate_packets_sigma(n, k))
                if (e.verdict.member) CHECK(cor93_filter(e.psi, sm));
        }
    }
}

TEST_CASE("the bound rejects small parameters") {
    // triv x R[1] + d1 x R[2] has a(psi) = 2, too small next to exponent 2
    ArthurParameter p{2, {{0, 1}}, {{1, 2}}};
    CHECK_FALSE(cor93_filter({3, {{0, 3}, {0, 1}, {0, 1}, {0, 1}, {0, 1}}, {}}, standard_pi(3, 1)));
    CHECK(cor93_filter(p, standard_pi(2, 1)) == false);
}
