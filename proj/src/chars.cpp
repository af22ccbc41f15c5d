// SPDX-License-Identifier: Apache-2.0
#include "apk/chars.hpp"

#include <algorithm>
#include <map>

#include "apk/membership.hpp"
#include "apk/params.hpp"

namespace apk {

std::vector<int> ComponentGroup::relation() const {
    std::vector<int> w;
    for (int m : multiplicity) w.push_back(m % 2);
    return w;
}

long long ComponentGroup::order() const {
    const auto w = relation();
    const bool any_odd = std::any_of(w.begin(), w.end(), [](int x) { return x != 0; });
    const int e = static_cast<int>(distinct.size()) - (any_odd ? 1 : 0);
    return 1LL << e;
}

ComponentGroup component_group(const std::vector<Block>& blocks) {
    std::map<Block, int> mult;
    std::vector<Block> order;
    for (auto& b : blocks)
        if (mult[b]++ == 0) order.push_back(b);
    ComponentGroup g;
    for (auto& b : order) {
        g.distinct.push_back(b);
        g.multiplicity.push_back(mult[b]);
    }
    return g;
}

std::vector<Block> listed_blocks(const ArthurParameter& psi) {
    std::vector<Block> out;
    for (auto& d : psi.discrete) out.push_back(Block::of(d));
    for (auto& u : psi.unipotent) out.push_back(Block::of(u));
    return out;
}

ComponentGroup component_group(const ArthurParameter& psi) { return component_group(listed_blocks(psi)); }

bool constant_on_equal_blocks(const PacketCharacter& c) {
    std::map<Block, int> seen;
    for (size_t i = 0; i < c.blocks.size(); ++i) {
        auto [it, fresh] = seen.emplace(c.blocks[i], c.signs[i]);
        if (!fresh && it->second != c.signs[i]) return false;
    }
    return true;
}

namespace {

std::map<Block, int> sign_map(const PacketCharacter& c) {
    std::map<Block, int> out;
    for (size_t i = 0; i < c.blocks.size(); ++i) out[c.blocks[i]] = c.signs[i];
    return out;
}

std::vector<Block> sorted_blocks(std::vector<Block> b) {
    std::sort(b.begin(), b.end());
    return b;
}

void check_delta(int delta) {
    if (delta != 1 && delta != -1) fail(ErrorKind::InvalidArgument, "Whittaker token must be +1 or -1");
}

}  // namespace

bool char_equivalent(const PacketCharacter& c1, const PacketCharacter& c2) {
    if (sorted_blocks(c1.blocks) != sorted_blocks(c2.blocks)) return false;
    if (!constant_on_equal_blocks(c1) || !constant_on_equal_blocks(c2)) return false;
    const auto g = component_group(c1.blocks);
    const auto s1 = sign_map(c1), s2 = sign_map(c2);
    bool same = true, flipped = true;
    for (size_t i = 0; i < g.distinct.size(); ++i) {
        const bool differ = s1.at(g.distinct[i]) != s2.at(g.distinct[i]);
        const bool odd = g.multiplicity[i] % 2 != 0;
        if (differ) same = false;
        if (differ != odd) flipped = false;
    }
    return same || flipped;
}

PacketCharacter normalize_representative(PacketCharacter c) {
    if (!constant_on_equal_blocks(c)) return c;
    const auto g = component_group(c.blocks);
    int odd_count = 0;
    for (int m : g.multiplicity) odd_count += m % 2;
    if (odd_count == 0) return c;
    auto flip = [&] {
        for (size_t i = 0; i < c.blocks.size(); ++i) {
            auto it = std::find(g.distinct.begin(), g.distinct.end(), c.blocks[i]);
            if (g.multiplicity[static_cast<size_t>(it - g.distinct.begin())] % 2 != 0) c.signs[i] = -c.signs[i];
        }
    };
    if (odd_count % 2 == 1) {
        int prod = 1;
        for (int s : c.signs) prod *= s;
        if (prod != 1) flip();
    } else {
        for (size_t i = 0; i < g.distinct.size(); ++i)
            if (g.multiplicity[i] % 2 != 0) {
                if (sign_map(c).at(g.distinct[i]) != 1) flip();
                break;
            }
    }
    return c;
}

std::string to_string(Side s) { return s == Side::Positive ? "O(2m,0)" : "O(0,2m)"; }
std::string to_string(CorForm f) { return f == CorForm::First ? "first" : "second"; }
std::string to_string(CorRow r) {
    switch (r) {
        case CorRow::Pi: return "pi";
        case CorRow::Sigma: return "sigma";
        case CorRow::PiStar: return "pi*";
        case CorRow::SigmaStar: return "sigma*";
    }
    return "?";
}

namespace {

std::vector<Block> theta_blocks(int n, int m, int tau_prime) {
    return {Block::of(UnipotentBlock{tau_prime, 1}), Block::of(UnipotentBlock{(tau_prime + m) % 2, 2 * m - 1}),
            Block::of(UnipotentBlock{m % 2, 2 * (n - m) + 1})};
}

}  // namespace

ThetaCharacter rho_theta(int n, int m, int tau_prime, int tau, int delta, Side side) {
    check_delta(delta);
    if ((tau != 0 && tau != 1) || (tau_prime != 0 && tau_prime != 1)) fail(ErrorKind::InvalidArgument, "tau, tau' must be 0 or 1");
    if (m < 1 || n < 2 * m - 1 + tau) fail(ErrorKind::InvalidArgument, "need m >= 1 and n >= 2m - 1 + tau");
    const long long f = side == Side::Positive ? floor_div(delta * m, 2) : floor_div(-delta * m, 2);
    const long long e = tau + tau_prime * ((1 + delta) / 2 + m);
    ThetaCharacter r;
    r.chr.whittaker = delta;
    r.chr.blocks = theta_blocks(n, m, tau_prime);
    r.chr.signs = {sign_pow(e), sign_pow(e + f), sign_pow(f)};
    r.constant = constant_on_equal_blocks(r.chr);
    return r;
}

ArthurParameter cor_param(CorForm form, int n, int m) {
    if (m < 1 || n < 2 * m - 1) fail(ErrorKind::InvalidArgument, "need m >= 1 and n >= 2m - 1");
    const int tp = form == CorForm::First ? 0 : 1;
    ArthurParameter psi{n, {{tp, 1}, {(tp + m) % 2, 2 * m - 1}, {m % 2, 2 * (n - m) + 1}}, {}};
    return canonicalize(psi);
}

PacketCharacter rho_unipotent_table(CorForm form, int n, int m, CorRow row, int delta) {
    check_delta(delta);
    const bool sigma_row = row == CorRow::Sigma || row == CorRow::SigmaStar;
    if (m < 1 || n < 2 * m - 1 + (sigma_row ? 1 : 0)) fail(ErrorKind::InvalidArgument, "table row outside its range");
    const bool star = row == CorRow::PiStar || row == CorRow::SigmaStar;
    const long long f = star ? floor_div(delta * m, 2) : floor_div(-delta * m, 2);
    const int s = sigma_row ? 1 : 0;
    long long e1, e2, e3;
    if (form == CorForm::First) {
        e1 = 0;
        e2 = s + f;
        e3 = f;
    } else {
        const long long c = (1 + delta) / 2 + m;
        e1 = s + c;
        e2 = s + c + f;
        e3 = f;
    }
    PacketCharacter out;
    out.whittaker = delta;
    out.blocks = theta_blocks(n, m, form == CorForm::First ? 0 : 1);
    out.signs = {sign_pow(e1), sign_pow(e2), sign_pow(e3)};
    return out;
}

// ------------------------------------------------------------ general case

std::vector<int> rho_discrete_signs(const ArthurParameter& psi, int delta, int* sum_a_out) {
    check_delta(delta);
    std::vector<int> out;
    int sum_a = 0;
    for (auto& d : psi.discrete) {
        const int di = delta * sign_pow(sum_a);
        out.push_back(sign_pow(floor_div(static_cast<long long>(di) * d.a, 2)));
        sum_a += d.a;
    }
    if (sum_a_out) *sum_a_out = sum_a;
    return out;
}

namespace {

struct UnipRoles {
    UnipotentBlock big, eta1, eta2;  // eta1 on R[1], eta2 on R[2a-1]
    int a = 0;
};

// Split a length-3 unipotent part into the big block and the two others.
UnipRoles split_roles(const ArthurParameter& psi, const UnipotentBlock& big, bool swapped) {
    std::vector<UnipotentBlock> rest = psi.unipotent;
    auto it = std::find(rest.begin(), rest.end(), big);
    if (it == rest.end()) fail(ErrorKind::Internal, "big block missing");
    rest.erase(it);
    // rest is canonical: larger dimension first
    UnipRoles r;
    r.big = big;
    r.eta2 = rest[0];
    r.eta1 = rest[1];
    if (r.eta1.dim != 1) fail(ErrorKind::Internal, "no dimension-one block beside the big block");
    if (swapped && r.eta2.dim == 1) std::swap(r.eta1, r.eta2);
    r.a = (r.eta2.dim + 1) / 2;
    return r;
}


PacketCharacter assemble(const ArthurParameter& psi, int delta, const std::vector<int>& dsigns, const UnipRoles* roles,
                         int x, int y) {
    PacketCharacter c;
    c.whittaker = delta;
    c.blocks = listed_blocks(psi);
    int D = 1;
    for (int s : dsigns) D *= s;
    c.signs = dsigns;
    if (!roles) {
        // irreducible unipotent part: the product rule fixes its sign
        c.signs.push_back(D);
        return normalize_representative(c);
    }
    const int e2 = D * x * y;
    const int e1 = x * e2;
    const int e3 = y * e2;
    // assign by role; equal blocks in two roles would show up as non-constant
    std::vector<bool> used(3, false);
    for (auto& u : psi.unipotent) {
        int sign = 0;
        if (!used[2] && u == roles->big) {
            sign = e3;
            used[2] = true;
        } else if (!used[1] && u == roles->eta2) {
            sign = e2;
            used[1] = true;
        } else if (!used[0] && u == roles->eta1) {
            sign = e1;
            used[0] = true;
        } else {
            fail(ErrorKind::Internal, "unipotent block without a role");
        }
        c.signs.push_back(sign);
    }
    return normalize_representative(c);
}

PacketCharacter pi_general_impl(const ArthurParameter& psi, int n, int m, int delta, bool swapped) {
    check_delta(delta);
    if (!decide_pi(psi, n, m).member) fail(ErrorKind::InvalidArgument, "parameter's packet does not contain pi_n(m)");
    int sum_a = 0;
    const auto ds = rho_discrete_signs(psi, delta, &sum_a);
    if (psi.unipotent.size() == 1) return assemble(psi, delta, ds, nullptr, 0, 0);

    const int dprime = delta * sign_pow(sum_a);
    const int au = a_psi_u(psi);
    const UnipotentBlock case2{m % 2, 2 * (n - m) + 1};
    const UnipotentBlock case3{(m - 1 + 2) % 2, 2 * (n - m) + 3};
    int y = 0;
    UnipRoles roles;
    if (au == case2.dim && contains_block(psi, case2)) {
        roles = split_roles(psi, case2, swapped);
        if (roles.eta2.chr == m % 2)
            y = 1;
        else
            y = dprime * sign_pow(roles.a + 1);
    } else if (au == case3.dim && contains_block(psi, case3)) {
        roles = split_roles(psi, case3, swapped);
        if (roles.eta2.chr == (m + 1) % 2)
            y = -1;
        else
            y = dprime * sign_pow(roles.a);
    } else {
        fail(ErrorKind::Internal, "member with a length-3 unipotent part outside both cases");
    }
    const int x = sign_pow(floor_div(static_cast<long long>(dprime) * roles.a, 2));
    return assemble(psi, delta, ds, &roles, x, y);
}

PacketCharacter sigma_general_impl(const ArthurParameter& psi, int n, int k, int delta, bool swapped) {
    check_delta(delta);
    if (!decide_sigma(psi, n, k).member) fail(ErrorKind::InvalidArgument, "parameter's packet does not contain sigma_{n,k}");
    if (n == 2 * k) return pi_general_impl(psi, n, k + 1, delta, swapped);
    int sum_a = 0;
    const auto ds = rho_discrete_signs(psi, delta, &sum_a);
    if (psi.unipotent.size() == 1) return assemble(psi, delta, ds, nullptr, 0, 0);
    const int dprime = delta * sign_pow(sum_a);
    const UnipotentBlock big{k % 2, 2 * (n - k) + 1};
    auto roles = split_roles(psi, big, swapped);
    int y;
    if (roles.eta2.chr == k % 2)
        y = -1;
    else
        y = delta * sign_pow(k);  // delta here, not delta'
    const int x = sign_pow(floor_div(static_cast<long long>(dprime) * roles.a, 2));
    return assemble(psi, delta, ds, &roles, x, y);
}

}  // namespace

PacketCharacter rho_pi_general(const ArthurParameter& psi, int n, int m, int delta) {
    return pi_general_impl(psi, n, m, delta, false);
}
PacketCharacter rho_pi_general_swapped(const ArthurParameter& psi, int n, int m, int delta) {
    return pi_general_impl(psi, n, m, delta, true);
}
PacketCharacter rho_sigma_general(const ArthurParameter& psi, int n, int k, int delta) {
    return sigma_general_impl(psi, n, k, delta, false);
}
PacketCharacter rho_sigma_general_swapped(const ArthurParameter& psi, int n, int k, int delta) {
    return sigma_general_impl(psi, n, k, delta, true);
}

bool is_documented_table_discrepancy(CorForm form, CorRow row) {
    return form == CorForm::First && (row == CorRow::Sigma || row == CorRow::SigmaStar);
}

std::vector<TableCheck> cross_check_unipotent(const ArthurParameter& psi, int n, int index, bool sigma, int delta) {
    std::vector<TableCheck> out;
    if (!psi.discrete.empty() || psi.unipotent.size() != 3) return out;
    if (sigma && n == 2 * index) {
        sigma = false;
        index = index + 1;
    }
    PacketCharacter general;
    int mt = 0;
    CorRow row;
    if (sigma) {
        general = rho_sigma_general(psi, n, index, delta);
        mt = index;
        row = CorRow::SigmaStar;
    } else {
        general = rho_pi_general(psi, n, index, delta);
        const int m = index;
        if (a_psi_u(psi) == 2 * (n - m) + 1) {
            mt = m;
            row = CorRow::PiStar;
        } else {
            mt = m - 1;
            row = CorRow::SigmaStar;
        }
    }
    const bool sigma_row = row == CorRow::SigmaStar;
    if (mt < 1 || n < 2 * mt - 1 + (sigma_row ? 1 : 0)) return out;
    for (CorForm form : {CorForm::First, CorForm::Second}) {
        if (cor_param(form, n, mt) != psi) continue;
        TableCheck tc{form, row, mt, rho_unipotent_table(form, n, mt, row, delta), false,
                      is_documented_table_discrepancy(form, row)};
        tc.equivalent = char_equivalent(general, tc.table);
        out.push_back(tc);
    }
    return out;
}

}  // namespace apk
