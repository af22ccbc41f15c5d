// SPDX-License-Identifier: Apache-2.0
#include "apk/json_io.hpp"

#include <set>

#include "apk/params.hpp"

namespace apk::json_io {

namespace {

[[noreturn]] void schema(const std::string& what) { fail(ErrorKind::Validation, "SCHEMA: " + what); }

void only_fields(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!j.is_object()) schema(where + " must be an object");
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!ok.count(it.key())) schema("unknown field '" + it.key() + "' in " + where);
    for (auto* f : allowed)
        if (!j.contains(f)) schema("missing field '" + std::string(f) + "' in " + where);
}

int get_int(const json& j, const char* key) {
    const auto& v = j.at(key);
    if (!v.is_number_integer()) schema(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

}  // namespace

ArthurParameter parse_param(const json& j) {
    only_fields(j, {"n", "unipotent", "discrete"}, "parameter");
    ArthurParameter psi;
    psi.n = get_int(j, "n");
    if (!j["unipotent"].is_array() || !j["discrete"].is_array()) schema("block lists must be arrays");
    for (auto& b : j["unipotent"]) {
        only_fields(b, {"char", "dim"}, "unipotent block");
        if (!b["char"].is_string()) schema("'char' must be \"triv\" or \"sgn\"");
        auto c = b["char"].get<std::string>();
        if (c != "triv" && c != "sgn") schema("'char' must be \"triv\" or \"sgn\"");
        psi.unipotent.push_back({c == "sgn" ? 1 : 0, get_int(b, "dim")});
    }
    for (auto& b : j["discrete"]) {
        only_fields(b, {"t", "a"}, "discrete block");
        psi.discrete.push_back({get_int(b, "t"), get_int(b, "a")});
    }
    if (psi.n < 1) fail(ErrorKind::Validation, "DIM_SUM: rank must be at least 1");
    require_valid(psi);
    return psi;
}

ArthurParameter parse_param(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        schema(std::string("not valid JSON: ") + e.what());
    }
    return parse_param(j);
}

json to_json(const ArthurParameter& psi) {
    json u = json::array(), d = json::array();
    for (auto& b : psi.unipotent) u.push_back({{"char", b.chr ? "sgn" : "triv"}, {"dim", b.dim}});
    for (auto& b : psi.discrete) d.push_back({{"t", b.t}, {"a", b.a}});
    return {{"n", psi.n}, {"unipotent", u}, {"discrete", d}};
}

json to_json(const Block& b) {
    if (b.discrete) return {{"t", b.t}, {"a", b.a}};
    return {{"char", b.chr ? "sgn" : "triv"}, {"dim", b.dim}};
}

json to_json(const PacketCharacter& c) {
    json blocks = json::array();
    for (auto& b : c.blocks) blocks.push_back(to_json(b));
    return {{"whittaker", c.whittaker}, {"blocks", blocks}, {"signs", c.signs}};
}

json to_json(const HighestWeight& mu) { return mu.m; }

json to_json(const Verdict& v) {
    return {{"member", v.member}, {"route", to_string(v.route)}, {"multiplicity", v.multiplicity}};
}

json to_json(const OrthRepLabel& l) { return {{"nu", l.nu}, {"sign", l.sign}, {"label", to_string(l)}}; }

json to_json(const HoweSource& s) {
    json j = {{"case", to_string(s.kase)}, {"ell", s.ell}, {"label", to_json(s.label)}};
    if (s.alt_ell) j["alt"] = {{"ell", *s.alt_ell}, {"label", to_json(*s.alt_label)}};
    return j;
}

json to_json(const StandardModule& sm) {
    json ex = json::array();
    for (auto& e : sm.exponents) ex.push_back({{"sgn", e.sgn}, {"exponent", e.exponent}});
    return {{"module", sm.kind == StandardModule::Pi ? "pi" : "sigma"},
            {"n", sm.n},
            {"index", sm.index},
            {"exponents", ex},
            {"max_exponent", max_exponent(sm)},
            {"base", sm.base_label()}};
}

json to_json(const SignedTableau& T) {
    json rows = json::array();
    for (auto& r : T.rows) rows.push_back({{"length", r.length}, {"lead", r.lead}});
    return {{"rows", rows}, {"render", T.render()}, {"boxes", T.boxes()}};
}

json half_vec(const HalfVec& v) { return {{"half", true}, {"doubled", v}}; }

}  // namespace apk::json_io
