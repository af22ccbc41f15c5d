// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "apk/apk.h"

using nlohmann::json;

namespace {
const char* kWorked = R"({"n":2,"unipotent":[{"char":"sgn","dim":3},{"char":"triv","dim":1},{"char":"sgn","dim":1}],"discrete":[]})";

json take(char* s) {
    json j = json::parse(s);
    apk_string_free(s);
    return j;
}
}  // namespace

TEST_CASE("parameter handles round-trip through JSON") {
    apk_param* p = nullptr;
    REQUIRE(apk_param_parse(kWorked, &p) == APK_OK);
    char* out = nullptr;
    REQUIRE(apk_param_to_json(p, &out) == APK_OK);
    auto j = take(out);
    CHECK(j == json::parse(kWorked));
    apk_param* p2 = nullptr;
    REQUIRE(apk_param_parse(j.dump().c_str(), &p2) == APK_OK);
    REQUIRE(apk_param_to_json(p2, &out) == APK_OK);
    CHECK(take(out) == j);
    apk_param_free(p);
    apk_param_free(p2);
}

TEST_CASE("malformed parameters report validation errors") {
    apk_param* p = nullptr;
    CHECK(apk_param_parse(R"({"n":2,"unipotent":[],"discrete":[],"extra":0})", &p) == APK_ERR_VALIDATION);
    CHECK(std::string(apk_last_error()).find("unknown field") != std::string::npos);
    CHECK(apk_param_parse(R"({"n":2,"unipotent":[{"char":"sgn","dim":3}],"discrete":[]})", &p) == APK_ERR_VALIDATION);
    CHECK(std::string(apk_last_error()).find("DIM_SUM") != std::string::npos);
    CHECK(apk_param_parse(R"({"n":2,"unipotent":[{"char":"triv","dim":1},{"char":"sgn","dim":3},{"char":"sgn","dim":1}],"discrete":[]})", &p) ==
          APK_ERR_VALIDATION);
    CHECK(std::string(apk_last_error()).find("ORDER") != std::string::npos);
    CHECK(apk_param_parse("not json", &p) == APK_ERR_VALIDATION);
    CHECK(p == nullptr);
    char* out = nullptr;
    REQUIRE(apk_param_validate(R"({"n":1,"unipotent":[{"char":"triv","dim":5}],"discrete":[]})", &out) == APK_OK);
    CHECK(take(out)["valid"] == false);
}

TEST_CASE("decide through the C interface") {
    apk_param* p = nullptr;
    REQUIRE(apk_param_parse(kWorked, &p) == APK_OK);
    char* out = nullptr;
    REQUIRE(apk_decide_pi(p, 1, &out) == APK_OK);
    auto j = take(out);
    CHECK(j["member"] == true);
    CHECK(j["route"] == "THM71_II_A1");
    CHECK(apk_decide_pi(p, 5, &out) == APK_ERR_ARGUMENT);
    CHECK(out == nullptr);
    apk_param_free(p);
}

TEST_CASE("rho flags the known table disagreement") {
    apk_param* p = nullptr;
    REQUIRE(apk_param_parse(R"({"n":3,"unipotent":[{"char":"sgn","dim":5},{"char":"triv","dim":1},{"char":"sgn","dim":1}],"discrete":[]})", &p) ==
            APK_OK);
    char* out = nullptr;
    REQUIRE(apk_rho(p, 1, 1, 1, &out) == APK_OK);
    auto j = take(out);
    CHECK(j["discrepancy"] == true);
    CHECK(j["unexpected"] == false);
    apk_param_free(p);
}

TEST_CASE("enumeration and limits") {
    char* out = nullptr;
    REQUIRE(apk_enumerate_pi(2, 1, 0, &out) == APK_OK);
    CHECK(take(out)["packets"].size() == 1);
    CHECK(apk_enumerate_pi(5, 1, 4, &out) == APK_ERR_LIMIT);
    CHECK(apk_enumerate_sigma(3, 2, 0, &out) == APK_ERR_ARGUMENT);
}

TEST_CASE("other entry points produce JSON") {
    char* out = nullptr;
    REQUIRE(apk_invariants(2, 0, -1, &out) == APK_OK);
    CHECK(take(out)["hasse"] == -1);
    REQUIRE(apk_howe(0, 4, "det", 5, &out) == APK_OK);
    CHECK(take(out)["ktype"] == json::array({-2, -3, -3, -3, -3}));
    CHECK(apk_howe(0, 4, "bogus", 4, &out) == APK_ERR_ARGUMENT);
    REQUIRE(apk_standard(1, 6, 2, &out) == APK_OK);
    CHECK(take(out)["max_exponent"] == 4);
    REQUIRE(apk_tableau(3, 1, &out) == APK_OK);
    CHECK(take(out)["r"] == 2);
    REQUIRE(apk_cohind(4, 1, 1, 0, &out) == APK_OK);
    CHECK(take(out)["delta_u"]["half"] == true);
    int chi[] = {5, 2, 1};
    REQUIRE(apk_cohind_regular(chi, 3, 2, &out) == APK_OK);
    CHECK(take(out)["identity_holds"] == true);
    int w[] = {2, 2, 2};
    REQUIRE(apk_howe_source(w, 3, &out) == APK_OK);
    CHECK(take(out)["source"]["case"] == "b''");
    REQUIRE(apk_rho_theta(1, 1, 1, 0, 1, -1, &out) == APK_OK);
    CHECK(take(out)["vanishing"] == true);
}
