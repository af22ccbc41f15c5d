// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>

#include "apk/tableaux.hpp"
#include "apk/types.hpp"

using namespace apk;

TEST_CASE("the p-minus chain") {
    for (int n = 1; n <= 8; ++n) {
        auto all = pminus_orbits(n);
        REQUIRE(all.size() == static_cast<size_t>(n + 1));
        for (int r = 0; r <= n; ++r) {
            CHECK(validate_tableau(all[r], n).empty());
            CHECK(pminus_rank(all[r], n) == r);
        }
    }
}

TEST_CASE("associated varieties of scalar modules") {
    for (int n = 1; n <= 10; ++n)
        for (int m = 0; m <= n; ++m) {
            auto T = av_scalar(n, m);
            CHECK(validate_tableau(T, n).empty());
            CHECK(T.boxes() == 2 * n);
            CHECK(pminus_rank(T, n) == std::min(2 * m, n));
            for (int m2 = m; m2 <= n; ++m2) CHECK(closure_leq(T, av_scalar(n, m2), n));
        }
}

TEST_CASE("tableau validation") {
    SignedTableau bad{{{2, -1}, {1, 1}, {1, -1}}};
    CHECK(validate_tableau(bad, 2).empty());
    CHECK(pminus_rank(bad, 2) == -1);
    CHECK_THROWS_AS(closure_leq(bad, av_scalar(2, 1), 2), Error);
    SignedTableau odd{{{1, 1}, {1, 1}}};
    auto v = validate_tableau(odd, 1);
    CHECK(std::find(v.begin(), v.end(), TableauViolation::OddRowBalance) != v.end());
    CHECK(validate_tableau(odd, 2).size() == 2);
    CHECK(av_scalar(3, 1).render() == std::vector<std::string>{"+-", "+-", "+", "-"});
}
