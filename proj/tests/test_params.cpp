// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "apk/params.hpp"
#include "apk/weights.hpp"
#include "oracles.hpp"

using namespace apk;

namespace {
ArthurParameter worked21() { return {2, {{1, 3}, {0, 1}, {1, 1}}, {}}; }
bool has(const std::vector<Violation>& v, Violation x) { return std::find(v.begin(), v.end(), x) != v.end(); }
}  // namespace

TEST_CASE("validation codes") {
    CHECK(validate(worked21()).empty());
    CHECK(has(validate({2, {{1, 3}}, {}}), Violation::DimSum));
    CHECK(has(validate({1, {{1, 1}, {0, 1}, {0, 1}}, {}}), Violation::ParityProduct));
    CHECK(has(validate({1, {{0, 2}, {0, 1}}, {}}), Violation::BlockShape));
    CHECK(has(validate({2, {{0, 1}}, {{2, 2}}}), Violation::BlockShape));
    CHECK(has(validate({2, {{0, 1}, {1, 3}, {1, 1}}, {}}), Violation::Order));
    CHECK_THROWS_AS(require_valid({2, {{1, 3}}, {}}), Error);
}

TEST_CASE("canonical order and its idempotence") {
    ArthurParameter p{2, {{1, 1}, {0, 1}, {1, 3}}, {}};
    auto c = canonicalize(p);
    CHECK(c == worked21());
    CHECK(canonicalize(c) == c);
}

TEST_CASE("infinitesimal character of a parameter matches an independent count") {
    ArthurParameter p{2, {{0, 1}}, {{1, 2}}};
    CHECK(inf_char_of_param(p) == oracle::inf_char(p));
    CHECK(inf_char_of_param(p) == InfChar{1, 0, 0, 0, -1});
}

TEST_CASE("block removal twists the rest by sgn^a") {
    ArthurParameter p{3, {{0, 1}, {1, 1}, {1, 1}}, {{4, 1}, {2, 1}}};
    REQUIRE(validate(p).empty());
    auto r = remove_block(p, 0);
    CHECK(r.n == 2);
    CHECK(r.discrete.size() == 1);
    CHECK(validate(r).empty());
    int sgn = 0;
    for (auto& u : r.unipotent) sgn += u.chr;
    CHECK(sgn == 1);  // triv,sgn,sgn became sgn,triv,triv
}

TEST_CASE("enumeration equals a brute-force cover for small ranks") {
    for (int n = 1; n <= 5; ++n)
        for (int m = 0; m <= n; ++m) {
            auto chi = inf_char_of_weight(pi_nm(n, m));
            auto mine = enumerate_params(chi, n);
            std::set<std::string> keys;
            for (auto& psi : mine) {
                CHECK(validate(psi).empty());
                CHECK(inf_char_of_param(psi) == chi);
                CHECK(lemma43_check(psi, chi));
                keys.insert(oracle::key(psi));
            }
            CHECK(keys.size() == mine.size());
            CHECK(keys == oracle::brute_params(chi, n));
        }
}

TEST_CASE("enumeration limits") {
    EnumerationLimits lim;
    lim.max_rank = 3;
    CHECK_THROWS_AS(enumerate_params(inf_char_of_weight(pi_nm(4, 1)), 4, lim), Error);
    CHECK_THROWS_AS(enumerate_params({0}, 0), Error);
}
