// SPDX-License-Identifier: Apache-2.0
// Command-line front end. Talks to the library only through apk.h.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "apk/apk.h"

using nlohmann::ordered_json;
using json = nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

enum Exit { kOk = 0, kUsage = 1, kValidation = 2, kDiscrepancy = 3, kInternal = 4 };

struct Failure {
    int code;
    std::string msg;
};

int exit_of(apk_status s) {
    switch (s) {
        case APK_OK: return kOk;
        case APK_ERR_ARGUMENT: return kUsage;
        case APK_ERR_VALIDATION:
        case APK_ERR_LIMIT: return kValidation;
        default: return kInternal;
    }
}

// Calls an apk_* function that writes a JSON string and returns it parsed.
template <class F>
json call(F&& f) {
    char* out = nullptr;
    const apk_status s = f(&out);
    if (s != APK_OK) throw Failure{exit_of(s), apk_last_error()};
    json j = json::parse(out);
    apk_string_free(out);
    return j;
}

struct Param {
    apk_param* h = nullptr;
    ~Param() { apk_param_free(h); }
};

std::string read_param_text(const std::string& arg) {
    auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{') return arg;
    std::ifstream in(arg);
    if (!in) throw Failure{kUsage, "cannot read parameter file '" + arg + "'"};
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void load(Param& p, const std::string& arg) {
    const auto text = read_param_text(arg);
    const apk_status s = apk_param_parse(text.c_str(), &p.h);
    if (s != APK_OK) throw Failure{exit_of(s), apk_last_error()};
}

// ---- text rendering ----

std::string block_text(const json& b) {
    if (b.contains("t")) return "d" + std::to_string(b["t"].get<int>()) + " x R[" + std::to_string(b["a"].get<int>()) + "]";
    return b["char"].get<std::string>() + " x R[" + std::to_string(b["dim"].get<int>()) + "]";
}

std::string param_text(const json& p) {
    std::string s;
    for (auto& b : p["unipotent"]) s += (s.empty() ? "" : " + ") + block_text(b);
    for (auto& b : p["discrete"]) s += (s.empty() ? "" : " + ") + block_text(b);
    return s;
}

std::string char_text(const json& c) {
    std::string s;
    for (size_t i = 0; i < c["blocks"].size(); ++i) {
        s += (i ? ", " : "") + block_text(c["blocks"][i]) + ": ";
        s += c["signs"][i].get<int>() > 0 ? "+1" : "-1";
    }
    return "(" + s + ")  whittaker " + std::to_string(c["whittaker"].get<int>());
}

std::string half_text(const json& doubled) {
    std::string s = "(";
    bool first = true;
    for (auto& x : doubled) {
        const long long v = x.get<long long>();
        s += (first ? "" : ", ") + (v % 2 == 0 ? std::to_string(v / 2) : std::to_string(v) + "/2");
        first = false;
    }
    return s + ")";
}

void render_generic(std::ostream& os, const json& j, const std::string& indent = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it->is_object() && it->value("half", false)) {
            os << indent << it.key() << ": " << half_text((*it)["doubled"]) << "\n";
        } else if (it->is_object()) {
            os << indent << it.key() << ":\n";
            render_generic(os, *it, indent + "  ");
        } else {
            os << indent << it.key() << ": " << it->dump() << "\n";
        }
    }
}

void render_text(std::ostream& os, const std::string& cmd, const json& r) {
    if (cmd == "enumerate-pi" || cmd == "enumerate-sigma") {
        os << "weight " << r["weight"].dump() << ", " << r["parameters_considered"] << " parameters with this infinitesimal character, "
           << r["packets"].size() << " packet(s) contain the module\n";
        for (auto& p : r["packets"]) os << "  " << param_text(p["param"]) << "    [" << p["route"].get<std::string>() << "]\n";
    } else if (cmd == "decide") {
        os << (r["member"].get<bool>() ? "member" : "not a member") << "  [" << r["route"].get<std::string>() << "]\n";
    } else if (cmd == "rho") {
        auto one = [&](const json& x) {
            if (x.contains("index")) os << "index " << x["index"] << ": ";
            os << "rho = " << char_text(x["character"]) << "\n";
            for (auto& c : x["table_checks"]) {
                os << "  table " << c["form"].get<std::string>() << " form, row " << c["row"].get<std::string>() << ": "
                   << char_text(c["table"]) << "  " << (c["equivalent"].get<bool>() ? "agrees" : "DISAGREES")
                   << (c["documented"].get<bool>() ? " (known)" : "") << "\n";
            }
        };
        if (r.contains("members"))
            for (auto& x : r["members"]) one(x);
        else
            one(r);
    } else if (cmd == "tableau") {
        for (auto& row : r["render"]) os << row.get<std::string>() << "\n";
    } else {
        render_generic(os, r);
    }
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            v.push_back(std::stoi(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw Failure{kUsage, "not an integer list: '" + s + "'"};
        }
    }
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arthur packets of Sp(2n,R) containing scalar and near-scalar unitary highest weight modules"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.set_version_flag("--version", std::string(apk_version()));

    int n = 0, m = 0, k = 0, max_rank = 0;
    auto* enum_pi = app.add_subcommand("enumerate-pi", "packets containing pi_n(m)");
    enum_pi->add_option("n", n)->required();
    enum_pi->add_option("m", m)->required();
    enum_pi->add_option("--max-rank", max_rank, "enumeration limit");
    auto* enum_sigma = app.add_subcommand("enumerate-sigma", "packets containing sigma_{n,k}");
    enum_sigma->add_option("n", n)->required();
    enum_sigma->add_option("k", k)->required();
    enum_sigma->add_option("--max-rank", max_rank, "enumeration limit");

    std::string param_arg;
    int opt_pi = -1, opt_sigma = -1, opt_regular = -1;
    auto* decide = app.add_subcommand("decide", "membership of one parameter");
    decide->add_option("--param", param_arg, "JSON file or inline JSON")->required();
    auto* o_pi = decide->add_option("--pi", opt_pi, "m for pi_n(m)");
    auto* o_sigma = decide->add_option("--sigma", opt_sigma, "k for sigma_{n,k}");
    auto* o_reg = decide->add_option("--regular", opt_regular, "a for pi_a of a regular character");
    o_pi->excludes(o_sigma)->excludes(o_reg);
    o_sigma->excludes(o_reg);

    std::string module = "pi";
    int index = -1, whittaker = 1;
    auto* rho = app.add_subcommand("rho", "component group character of a member");
    rho->add_option("--param", param_arg, "JSON file or inline JSON")->required();
    rho->add_option("--module", module)->check(CLI::IsMember({"pi", "sigma"}));
    rho->add_option("--index", index, "m or k; default: every index whose module is in the packet");
    rho->add_option("--whittaker", whittaker)->check(CLI::IsMember({1, -1}));

    int tau_prime = 0, tau = 0, delta = 1;
    std::string side = "pos";
    auto* rho_theta = app.add_subcommand("rho-theta", "character of a theta lift of det^tau");
    rho_theta->add_option("n", n)->required();
    rho_theta->add_option("m", m)->required();
    rho_theta->add_option("--tau-prime", tau_prime)->check(CLI::IsMember({0, 1}));
    rho_theta->add_option("--tau", tau)->check(CLI::IsMember({0, 1}));
    rho_theta->add_option("--delta", delta)->check(CLI::IsMember({1, -1}));
    rho_theta->add_option("--side", side, "pos = O(2m,0), neg = O(0,2m)")->check(CLI::IsMember({"pos", "neg"}));

    int p = 0, q = 0;
    auto* inv = app.add_subcommand("invariants", "discriminant and Hasse invariant of a signature");
    inv->add_option("p", p)->required();
    inv->add_option("q", q)->required();
    inv->add_option("--delta", delta)->check(CLI::IsMember({1, -1}));

    std::string chr = "Triv", weight;
    int rank = 0;
    auto* howe = app.add_subcommand("howe", "theta K-type data, or the orthogonal source of a weight");
    auto* o_p = howe->add_option("--p", p);
    howe->add_option("--q", q);
    howe->add_option("--char", chr, "Triv, det, sgn_1, sgn_-1, optionally (x)det");
    howe->add_option("--rank", rank);
    auto* o_w = howe->add_option("--weight", weight, "comma separated m_1,...,m_n");
    o_w->excludes(o_p);

    std::string std_kind;
    auto* standard = app.add_subcommand("standard", "standard module data");
    standard->add_option("module", std_kind)->required()->check(CLI::IsMember({"pi", "sigma"}));
    standard->add_option("n", n)->required();
    standard->add_option("index", index, "m or k")->required();

    auto* tableau = app.add_subcommand("tableau", "signed tableau of the associated variety of pi_n(m)");
    tableau->add_option("n", n)->required();
    tableau->add_option("m", m)->required();

    int t = 0, a = -1;
    std::string chi;
    auto* cohind = app.add_subcommand("cohind", "theta-stable parabolic data (n p q t), or --chi/--a for a regular character");
    cohind->add_option("n", n);
    cohind->add_option("p", p);
    cohind->add_option("q", q);
    cohind->add_option("t", t);
    cohind->add_option("--chi", chi, "positive part of a regular character, comma separated");
    cohind->add_option("--a", a);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string cmd = sub->get_name();
    ordered_json report;
    report["schema_version"] = kSchemaVersion;
    report["subcommand"] = cmd;
    json inputs, result;
    int rc = kOk;

    try {
        if (sub == enum_pi) {
            inputs = {{"n", n}, {"m", m}};
            result = call([&](char** o) { return apk_enumerate_pi(n, m, max_rank, o); });
        } else if (sub == enum_sigma) {
            inputs = {{"n", n}, {"k", k}};
            result = call([&](char** o) { return apk_enumerate_sigma(n, k, max_rank, o); });
        } else if (sub == decide) {
            const int chosen = (opt_pi >= 0) + (opt_sigma >= 0) + (opt_regular >= 0);
            if (chosen != 1) throw Failure{kUsage, "exactly one of --pi, --sigma, --regular is required"};
            Param prm;
            load(prm, param_arg);
            inputs["param"] = call([&](char** o) { return apk_param_to_json(prm.h, o); });
            if (opt_pi >= 0) {
                inputs["pi"] = opt_pi;
                result = call([&](char** o) { return apk_decide_pi(prm.h, opt_pi, o); });
            } else if (opt_sigma >= 0) {
                inputs["sigma"] = opt_sigma;
                result = call([&](char** o) { return apk_decide_sigma(prm.h, opt_sigma, o); });
            } else {
                inputs["regular"] = opt_regular;
                result = call([&](char** o) { return apk_decide_regular(prm.h, opt_regular, o); });
            }
        } else if (sub == rho) {
            Param prm;
            load(prm, param_arg);
            const int mod = module == "sigma" ? 1 : 0;
            const json pj = call([&](char** o) { return apk_param_to_json(prm.h, o); });
            inputs = {{"param", pj}, {"module", module}, {"whittaker", whittaker}};
            if (index >= 0) {
                inputs["index"] = index;
                result = call([&](char** o) { return apk_rho(prm.h, mod, index, whittaker, o); });
                if (result["discrepancy"].get<bool>()) rc = kDiscrepancy;
            } else {
                const int n_psi = pj["n"].get<int>();
                const int lo = mod ? 1 : 0, hi = mod ? n_psi / 2 : n_psi;
                json all = json::array();
                for (int i = lo; i <= hi; ++i) {
                    const json v = call([&](char** o) { return mod ? apk_decide_sigma(prm.h, i, o) : apk_decide_pi(prm.h, i, o); });
                    if (!v["member"].get<bool>()) continue;
                    json r = call([&](char** o) { return apk_rho(prm.h, mod, i, whittaker, o); });
                    if (r["discrepancy"].get<bool>()) rc = kDiscrepancy;
                    r["index"] = i;
                    all.push_back(r);
                }
                if (all.empty()) throw Failure{kValidation, "NOT_MEMBER: no module of this kind lies in the packet"};
                result = {{"members", all}};
            }
        } else if (sub == rho_theta) {
            inputs = {{"n", n}, {"m", m}, {"tau_prime", tau_prime}, {"tau", tau}, {"delta", delta}, {"side", side}};
            result = call([&](char** o) { return apk_rho_theta(n, m, tau_prime, tau, delta, side == "pos" ? 1 : -1, o); });
            if (result["vanishing"].get<bool>()) rc = kDiscrepancy;
        } else if (sub == inv) {
            inputs = {{"p", p}, {"q", q}, {"delta", delta}};
            result = call([&](char** o) { return apk_invariants(p, q, delta, o); });
        } else if (sub == howe) {
            if (!weight.empty()) {
                const auto w = parse_ints(weight);
                inputs = {{"weight", w}};
                result = call([&](char** o) { return apk_howe_source(w.data(), static_cast<int>(w.size()), o); });
            } else {
                inputs = {{"p", p}, {"q", q}, {"char", chr}, {"rank", rank}};
                result = call([&](char** o) { return apk_howe(p, q, chr.c_str(), rank, o); });
            }
        } else if (sub == standard) {
            inputs = {{"module", std_kind}, {"n", n}, {"index", index}};
            result = call([&](char** o) { return apk_standard(std_kind == "sigma" ? 1 : 0, n, index, o); });
        } else if (sub == tableau) {
            inputs = {{"n", n}, {"m", m}};
            result = call([&](char** o) { return apk_tableau(n, m, o); });
        } else if (sub == cohind) {
            if (!chi.empty()) {
                if (a < 0) throw Failure{kUsage, "--chi needs --a"};
                const auto c = parse_ints(chi);
                inputs = {{"chi", c}, {"a", a}};
                result = call([&](char** o) { return apk_cohind_regular(c.data(), static_cast<int>(c.size()), a, o); });
            } else {
                if (sub->count("n") == 0 || sub->count("p") == 0 || sub->count("q") == 0 || sub->count("t") == 0)
                    throw Failure{kUsage, "cohind needs n p q t, or --chi with --a"};
                inputs = {{"n", n}, {"p", p}, {"q", q}, {"t", t}};
                result = call([&](char** o) { return apk_cohind(n, p, q, t, o); });
            }
        }
    } catch (const Failure& f) {
        report["inputs"] = inputs;
        report["error"] = {{"exit_code", f.code}, {"message", f.msg}};
        if (format == "json")
            std::cout << report.dump(2) << "\n";
        std::cerr << "error: " << f.msg << "\n";
        return f.code;
    }

    report["inputs"] = inputs;
    report["result"] = result;
    if (rc == kDiscrepancy) report["discrepancy_flag"] = true;
    if (format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        render_text(std::cout, cmd, result);
        if (rc == kDiscrepancy) std::cout << "note: two printed formulas disagree on this input\n";
    }
    return rc;
}
