// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "apk/membership.hpp"
#include "apk/weights.hpp"

using namespace apk;

TEST_CASE("rank two, m = 1: a single packet") {
    auto entries = enumerate_packets_pi(2, 1);
    std::vector<ArthurParameter> members;
    for (auto& e : entries)
        if (e.verdict.member) members.push_back(e.psi);
    REQUIRE(members.size() == 1);
    CHECK(members[0] == ArthurParameter{2, {{1, 3}, {0, 1}, {1, 1}}, {}});
    CHECK(decide_pi(members[0], 2, 1).route == Route::Thm71IIA1);
}

TEST_CASE("rank two, m = 2: the two named packets") {
    ArthurParameter r1{2, {{0, 1}}, {{1, 2}}};
    ArthurParameter r2{2, {{1, 3}, {0, 1}, {1, 1}}, {}};
    CHECK(decide_pi(r1, 2, 2).route == Route::Thm71I);
    CHECK(decide_pi(r2, 2, 2).route == Route::Thm71IIA3);
}

TEST_CASE("the bare containment reading is too weak") {
    // contains triv x R[1] but a(psi_u) is 3, not 1
    ArthurParameter p{2, {{0, 3}, {0, 1}, {0, 1}}, {}};
    CHECK_FALSE(decide_pi(p, 2, 2).member);
    CHECK_FALSE(decide_pi_recursive(p, 2, 2));
}

TEST_CASE("closed-form and recursive deciders agree") {
    for (int n = 1; n <= 6; ++n)
        for (int m = 0; m <= n; ++m)
            for (auto& e : enumerate_packets_pi(n, m)) CHECK(e.verdict.member == decide_pi_recursive(e.psi, n, m));
}

TEST_CASE("members pass the necessity filter and the leading block rule") {
    for (int n = 1; n <= 7; ++n)
        for (int m = 0; m <= n; ++m)
            for (auto& e : enumerate_packets_pi(n, m)) {
                if (!e.verdict.member) continue;
                CHECK(necessary_cor93(e.psi, n, m));
                if (e.psi.discrete.empty()) CHECK(unipotent_leading_block_rule(e.psi, n, m));
            }
}

TEST_CASE("sigma reference parameter") {
    for (int n = 3; n <= 8; ++n)
        for (int k = 1; 2 * k <= n - 1; ++k) {
            auto ref = sigma_reference_param(n, k);
            CHECK(validate(ref).empty());
            CHECK(inf_char_of_param(ref) == inf_char_of_weight(sigma_nk(n, k)));
            CHECK(decide_sigma(ref, n, k).member);
            // the same parameter's packet also holds pi_n(k)
            CHECK(decide_pi(ref, n, k).member);
        }
    CHECK(sigma_reference_param(3, 1) == ArthurParameter{3, {{1, 5}, {0, 1}, {1, 1}}, {}});
}

TEST_CASE("sigma with n = 2k is pi_{2k}(k+1)") {
    for (int k = 1; k <= 3; ++k)
        for (auto& e : enumerate_packets_sigma(2 * k, k))
            CHECK(e.verdict.member == decide_pi(e.psi, 2 * k, k + 1).member);
}

TEST_CASE("trivial representation and unipotent members") {
    ArthurParameter triv{3, {{0, 7}}, {}};
    CHECK(decide_pi(triv, 3, 0).route == Route::Trivial);
    CHECK(decide_unipotent(triv).trivial);
    auto um = decide_unipotent({2, {{1, 3}, {0, 1}, {1, 1}}, {}});
    REQUIRE(um.pi_m.has_value());
    CHECK(*um.pi_m == 1);
}

TEST_CASE("wrong infinitesimal character is never a member") {
    ArthurParameter triv{2, {{0, 5}}, {}};
    CHECK_FALSE(decide_pi(triv, 2, 1).member);
    CHECK(decide_pi(triv, 2, 1).route == Route::None);
}
