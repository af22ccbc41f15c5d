// SPDX-License-Identifier: Apache-2.0
#include "apk/apk.h"

#include <cstring>
#include <string>

#include "apk/chars.hpp"
#include "apk/cohind.hpp"
#include "apk/json_io.hpp"
#include "apk/langlands.hpp"
#include "apk/membership.hpp"
#include "apk/params.hpp"
#include "apk/quadform.hpp"
#include "apk/tableaux.hpp"
#include "apk/weights.hpp"

struct apk_param {
    apk::ArthurParameter psi;
};

namespace {

using apk::json_io::json;
using apk::json_io::to_json;

thread_local std::string g_last_error;

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

apk_status status_of(apk::ErrorKind k) {
    switch (k) {
        case apk::ErrorKind::InvalidArgument: return APK_ERR_ARGUMENT;
        case apk::ErrorKind::Validation: return APK_ERR_VALIDATION;
        case apk::ErrorKind::Limit: return APK_ERR_LIMIT;
        case apk::ErrorKind::Internal: return APK_ERR_INTERNAL;
    }
    return APK_ERR_INTERNAL;
}

// Runs f, which returns a json result, and hands it out as a string.
template <class F>
apk_status guarded(char** out, F&& f) {
    g_last_error.clear();
    if (!out) {
        g_last_error = "null output pointer";
        return APK_ERR_ARGUMENT;
    }
    *out = nullptr;
    try {
        json j = f();
        *out = dup(j.dump());
        if (!*out) {
            g_last_error = "out of memory";
            return APK_ERR_INTERNAL;
        }
        return APK_OK;
    } catch (const apk::Error& e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return APK_ERR_INTERNAL;
    }
}

const apk::ArthurParameter& need(const apk_param* p) {
    if (!p) apk::fail(apk::ErrorKind::InvalidArgument, "null parameter handle");
    return p->psi;
}

apk::EnumerationLimits limits(int max_rank) {
    apk::EnumerationLimits lim;
    if (max_rank > 0) lim.max_rank = max_rank;
    return lim;
}

json packets_json(const std::vector<apk::PacketEntry>& entries) {
    json arr = json::array();
    for (auto& e : entries) {
        if (!e.verdict.member) continue;
        arr.push_back({{"param", to_json(e.psi)}, {"route", apk::to_string(e.verdict.route)},
                       {"text", apk::to_string(e.psi)}});
    }
    return arr;
}

apk::OrthCharacter parse_orth_char(const std::string& s) {
    std::string base = s;
    int tau = 0;
    const std::string suffix = "(x)det";
    if (base.size() > suffix.size() && base.compare(base.size() - suffix.size(), suffix.size(), suffix) == 0) {
        tau = 1;
        base.resize(base.size() - suffix.size());
    }
    if (base == "Triv" && tau == 0) return {0, 1, 0};
    if (base == "det" && tau == 0) return {0, 1, 1};
    if (base == "sgn_1") return {1, 1, tau};
    if (base == "sgn_-1") return {1, -1, tau};
    apk::fail(apk::ErrorKind::InvalidArgument, "unknown character '" + s + "'");
}

json check_row(const apk::TableCheck& tc) {
    return {{"form", apk::to_string(tc.form)},
            {"row", apk::to_string(tc.row)},
            {"m", tc.table_m},
            {"table", to_json(tc.table)},
            {"equivalent", tc.equivalent},
            {"documented", tc.documented_discrepancy}};
}

}  // namespace

extern "C" {

const char* apk_version(void) { return "1.0.0"; }

const char* apk_last_error(void) { return g_last_error.c_str(); }

void apk_string_free(char* s) { std::free(s); }

apk_status apk_param_parse(const char* text, apk_param** out) {
    g_last_error.clear();
    if (!text || !out) {
        g_last_error = "null argument";
        return APK_ERR_ARGUMENT;
    }
    *out = nullptr;
    try {
        *out = new apk_param{apk::json_io::parse_param(std::string(text))};
        return APK_OK;
    } catch (const apk::Error& e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return APK_ERR_INTERNAL;
    }
}

apk_status apk_param_to_json(const apk_param* p, char** out) {
    return guarded(out, [&] { return to_json(need(p)); });
}

void apk_param_free(apk_param* p) { delete p; }

apk_status apk_param_validate(const char* text, char** out) {
    return guarded(out, [&]() -> json {
        if (!text) apk::fail(apk::ErrorKind::InvalidArgument, "null argument");
        try {
            auto psi = apk::json_io::parse_param(std::string(text));
            return {{"valid", true}, {"param", to_json(psi)}};
        } catch (const apk::Error& e) {
            if (e.kind() != apk::ErrorKind::Validation) throw;
            return {{"valid", false}, {"error", e.what()}};
        }
    });
}

apk_status apk_enumerate_pi(int n, int m, int max_rank, char** out) {
    return guarded(out, [&]() -> json {
        const auto lim = limits(max_rank);
        if (n > lim.max_rank) apk::fail(apk::ErrorKind::Limit, "rank above the enumeration limit");
        const auto mu = apk::pi_nm(n, m);
        const auto entries = apk::enumerate_packets_pi(n, m, lim);
        return {{"weight", to_json(mu)},
                {"inf_char", apk::inf_char_of_weight(mu)},
                {"parameters_considered", entries.size()},
                {"packets", packets_json(entries)}};
    });
}

apk_status apk_enumerate_sigma(int n, int k, int max_rank, char** out) {
    return guarded(out, [&]() -> json {
        const auto lim = limits(max_rank);
        if (n > lim.max_rank) apk::fail(apk::ErrorKind::Limit, "rank above the enumeration limit");
        const auto mu = apk::sigma_nk(n, k);
        const auto entries = apk::enumerate_packets_sigma(n, k, lim);
        return {{"weight", to_json(mu)},
                {"inf_char", apk::inf_char_of_weight(mu)},
                {"parameters_considered", entries.size()},
                {"packets", packets_json(entries)}};
    });
}

apk_status apk_decide_pi(const apk_param* p, int m, char** out) {
    return guarded(out, [&]() -> json {
        const auto& psi = need(p);
        if (m < 0 || m > psi.n) apk::fail(apk::ErrorKind::InvalidArgument, "need 0 <= m <= n");
        auto j = to_json(apk::decide_pi(psi, psi.n, m));
        j["recursive_oracle"] = apk::decide_pi_recursive(psi, psi.n, m);
        return j;
    });
}

apk_status apk_decide_sigma(const apk_param* p, int k, char** out) {
    return guarded(out, [&]() -> json {
        const auto& psi = need(p);
        if (k < 1 || 2 * k > psi.n) apk::fail(apk::ErrorKind::InvalidArgument, "need 2 <= 2k <= n");
        return to_json(apk::decide_sigma(psi, psi.n, k));
    });
}

apk_status apk_decide_regular(const apk_param* p, int a, char** out) {
    return guarded(out, [&]() -> json {
        const auto& psi = need(p);
        const bool member = apk::decide_regular(psi, a);
        return {{"member", member},
                {"route", apk::to_string(member ? apk::Route::Regular : apk::Route::None)},
                {"a", a},
                {"dim_unipotent", apk::dim_unipotent(psi)}};
    });
}

apk_status apk_rho(const apk_param* p, int module, int index, int whittaker, char** out) {
    return guarded(out, [&]() -> json {
        const auto& psi = need(p);
        if (whittaker != 1 && whittaker != -1) apk::fail(apk::ErrorKind::InvalidArgument, "whittaker datum is +1 or -1");
        if (module != 0 && module != 1) apk::fail(apk::ErrorKind::InvalidArgument, "module is pi or sigma");
        const bool sigma = module == 1;
        if (sigma && (index < 1 || 2 * index > psi.n)) apk::fail(apk::ErrorKind::InvalidArgument, "need 2 <= 2k <= n");
        if (!sigma && (index < 0 || index > psi.n)) apk::fail(apk::ErrorKind::InvalidArgument, "need 0 <= m <= n");
        const auto v = sigma ? apk::decide_sigma(psi, psi.n, index) : apk::decide_pi(psi, psi.n, index);
        if (!v.member) apk::fail(apk::ErrorKind::Validation, "NOT_MEMBER: the packet does not contain this module");
        const auto chr = sigma ? apk::rho_sigma_general(psi, psi.n, index, whittaker)
                               : apk::rho_pi_general(psi, psi.n, index, whittaker);
        json checks = json::array();
        bool discrepancy = false, unexpected = false;
        for (auto& tc : apk::cross_check_unipotent(psi, psi.n, index, sigma, whittaker)) {
            checks.push_back(check_row(tc));
            if (!tc.equivalent) {
                discrepancy = true;
                if (!tc.documented_discrepancy) unexpected = true;
            }
        }
        return {{"character", to_json(chr)},
                {"component_group_order", apk::component_group(psi).order()},
                {"table_checks", checks},
                {"discrepancy", discrepancy},
                {"unexpected", unexpected}};
    });
}

apk_status apk_rho_theta(int n, int m, int tau_prime, int tau, int delta, int side, char** out) {
    return guarded(out, [&]() -> json {
        if (side != 1 && side != -1) apk::fail(apk::ErrorKind::InvalidArgument, "side is +1 or -1");
        const auto s = side > 0 ? apk::Side::Positive : apk::Side::Negative;
        const auto th = apk::rho_theta(n, m, tau_prime, tau, delta, s);
        int prod = 1;
        for (int x : th.chr.signs) prod *= x;
        return {{"character", to_json(th.chr)},
                {"side", apk::to_string(s)},
                {"product", prod},
                {"vanishing", !th.constant}};
    });
}

apk_status apk_invariants(int p, int q, int delta, char** out) {
    return guarded(out, [&]() -> json {
        const auto diag = apk::signature_diagonal(p, q);
        const int eps = apk::hasse_normalized(p, q, delta);
        const auto h = apk::add_hyperbolic({p, q});
        json chars = json::array();
        if ((p + q) % 2 == 0)
            for (auto& c : apk::o_characters(p, q))
                chars.push_back({{"name", c.name},
                                 {"on_p", c.res.on_p},
                                 {"on_q", c.res.on_q},
                                 {"first_occurrence", apk::first_occurrence(c.chr, p, q)}});
        return {{"p", p},
                {"q", q},
                {"delta", delta},
                {"det_class", apk::det_class(p, q)},
                {"discriminant", apk::discriminant(p, q)},
                {"hasse", eps},
                {"hasse_from_diagonal", apk::hasse_from_diagonal(diag, delta)},
                {"hasse_after_hyperbolic", apk::hasse_normalized(h.p, h.q, delta)},
                {"characters", chars}};
    });
}

apk_status apk_howe(int p, int q, const char* chr, int n, char** out) {
    return guarded(out, [&]() -> json {
        if (!chr) apk::fail(apk::ErrorKind::InvalidArgument, "null character");
        const auto c = parse_orth_char(chr);
        const auto kt = apk::howe_ktype(c, p, q, n);
        json j = {{"character", apk::to_string(c)},
                  {"first_occurrence", apk::first_occurrence(c, p, q)},
                  {"first_occurrence_det", apk::first_occurrence(apk::tensor_det(c), p, q)}};
        if (kt) {
            j["ktype"] = *kt;
            j["degree"] = apk::howe_degree(*kt, p, q);
        } else {
            j["ktype"] = nullptr;
        }
        return j;
    });
}

apk_status apk_howe_source(const int* weight, int len, char** out) {
    return guarded(out, [&]() -> json {
        if (!weight || len < 1) apk::fail(apk::ErrorKind::InvalidArgument, "empty weight");
        const auto mu = apk::make_weight(std::vector<int>(weight, weight + len));
        const auto u = apk::classify_unitary(mu);
        if (!u.unitary) apk::fail(apk::ErrorKind::Validation, "NOT_UNITARY: weight is outside the unitary range");
        return {{"weight", to_json(mu)}, {"source", to_json(apk::howe_source(mu))}};
    });
}

apk_status apk_standard(int module, int n, int index, char** out) {
    return guarded(out, [&]() -> json {
        if (module == 0) return to_json(apk::standard_pi(n, index));
        if (module == 1) return to_json(apk::standard_sigma(n, index));
        apk::fail(apk::ErrorKind::InvalidArgument, "module is pi or sigma");
    });
}

apk_status apk_tableau(int n, int m, char** out) {
    return guarded(out, [&]() -> json {
        const auto T = apk::av_scalar(n, m);
        json j = to_json(T);
        j["n"] = n;
        j["m"] = m;
        j["r"] = apk::pminus_rank(T, n);
        json viol = json::array();
        for (auto v : apk::validate_tableau(T, n)) viol.push_back(apk::to_string(v));
        j["violations"] = viol;
        return j;
    });
}

apk_status apk_cohind(int n, int p, int q, int t, char** out) {
    return guarded(out, [&]() -> json {
        using apk::json_io::half_vec;
        const auto r = apk::rho_vectors(n, p, q);
        return {{"n", n},
                {"p", p},
                {"q", q},
                {"t", t},
                {"lambda", half_vec(apk::lambda_of(n, p, q, t))},
                {"weakly_fair", apk::weakly_fair(t)},
                {"delta_l", half_vec(r.delta_l)},
                {"delta_u_p", half_vec(r.delta_u_p)},
                {"delta_u_k", half_vec(r.delta_u_k)},
                {"delta_u", half_vec(r.delta_u)},
                {"delta_pq", half_vec(r.delta_pq)},
                {"S", r.S}};
    });
}

apk_status apk_cohind_regular(const int* chi_plus, int len, int a, char** out) {
    return guarded(out, [&]() -> json {
        using apk::json_io::half_vec;
        if (!chi_plus || len < 1) apk::fail(apk::ErrorKind::InvalidArgument, "empty character");
        const std::vector<int> chi(chi_plus, chi_plus + len);
        const auto rl = apk::aqlambda_regular(chi, a);
        return {{"weight", to_json(apk::regular_module_weight(chi, a))},
                {"lambda", half_vec(rl.lambda)},
                {"lambda_plus_rho", half_vec(rl.lambda_plus_rho)},
                {"expected", half_vec(rl.expected)},
                {"identity_holds", rl.lambda_plus_rho == rl.expected}};
    });
}

}  // extern "C"
