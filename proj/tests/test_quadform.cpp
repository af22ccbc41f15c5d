// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>

#include "apk/quadform.hpp"
#include "oracles.hpp"

using namespace apk;

TEST_CASE("Hilbert symbol over the reals") {
    CHECK(hilbert_symbol_real(-1, -1) == -1);
    CHECK(hilbert_symbol_real(1, -1) == 1);
    CHECK_THROWS_AS(hilbert_symbol_real(2, 1), Error);
}

TEST_CASE("closed-form Hasse invariant equals the diagonal computation") {
    for (int p = 0; p <= 30; ++p)
        for (int q = 0; q <= 30; ++q)
            for (int d : {1, -1}) {
                const int e = hasse_normalized(p, q, d);
                CHECK(e == hasse_from_diagonal(signature_diagonal(p, q), d));
                CHECK(e == oracle::hasse_pairs(signature_diagonal(p, q), d));
                auto h = add_hyperbolic({p, q});
                CHECK(e == hasse_normalized(h.p, h.q, d));
                CHECK(discriminant(p, q) == discriminant(h.p, h.q));
                CHECK(discriminant(p, q) == discriminant_from_diagonal(signature_diagonal(p, q)));
            }
}

TEST_CASE("the diagonal computation ignores entry order") {
    std::vector<int> diag{1, -1, 1, -1, -1, 1, 1};
    const int ref = hasse_from_diagonal(diag, 1);
    std::sort(diag.begin(), diag.end());
    do {
        CHECK(hasse_from_diagonal(diag, 1) == ref);
    } while (std::next_permutation(diag.begin(), diag.end()));
}

TEST_CASE("small signatures") {
    CHECK(hasse_normalized(2, 0, -1) == -1);
    CHECK(hasse_normalized(2, 0, 1) == 1);
    CHECK(det_class(1, 1) == -1);
}

TEST_CASE("characters of O(p,q): two or four, distinct restrictions") {
    CHECK(o_characters(4, 0).size() == 2);
    CHECK(o_characters(0, 6).size() == 2);
    CHECK(o_characters(3, 1).size() == 4);
    CHECK_THROWS_AS(o_characters(3, 0), Error);
}

TEST_CASE("first occurrences are conserved under det twist") {
    for (int p = 0; p <= 20; ++p)
        for (int q = 0; p + q <= 20; ++q) {
            if ((p + q) % 2) continue;
            for (auto& c : o_characters(p, q))
                CHECK(first_occurrence(c.chr, p, q) + first_occurrence(tensor_det(c.chr), p, q) == p + q);
        }
}

TEST_CASE("theta K-types of the compact characters") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 8; ++n) {
            auto t = howe_ktype({0, 1, 0}, 0, 2 * m, n);
            REQUIRE(t.has_value());
            CHECK(*t == std::vector<int>(n, -m));
            auto d = howe_ktype({0, 1, 1}, 0, 2 * m, n);
            CHECK(d.has_value() == (n >= 2 * m));
        }
    CHECK(howe_ktype({0, 1, 0}, 2, 2, 0).has_value());
}
