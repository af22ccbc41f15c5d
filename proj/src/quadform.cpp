// SPDX-License-Identifier: Apache-2.0
#include "apk/quadform.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "apk/types.hpp"

namespace apk {

namespace {

void check_sig(int p, int q) {
    if (p < 0 || q < 0) fail(ErrorKind::InvalidArgument, "signature entries must be nonnegative");
}
void check_delta(int delta) {
    if (delta != 1 && delta != -1) fail(ErrorKind::InvalidArgument, "delta must be +1 or -1");
}
void check_even(int p, int q) {
    check_sig(p, q);
    if ((p + q) % 2 != 0) fail(ErrorKind::InvalidArgument, "p + q must be even");
}

}  // namespace

int hilbert_symbol_real(int a, int b) {
    if ((a != 1 && a != -1) || (b != 1 && b != -1)) fail(ErrorKind::InvalidArgument, "Hilbert symbol arguments are signs");
    return (a < 0 && b < 0) ? -1 : 1;
}

int det_class(int p, int q) {
    check_sig(p, q);
    return sign_pow(q);
}

int discriminant(int p, int q) {
    check_sig(p, q);
    const int e = (p + q) % 2 == 0 ? (p - q) / 2 : (p - q - 1) / 2;
    return sign_pow(e);
}

int hasse_normalized(int p, int q, int delta) {
    check_sig(p, q);
    check_delta(delta);
    const int d = (p + q) % 2 == 0 ? (p - q) : (p - q - 1);
    return sign_pow(floor_div(static_cast<long long>(delta) * d, 4));
}

std::vector<int> signature_diagonal(int p, int q) {
    check_sig(p, q);
    std::vector<int> d(p, 1);
    d.insert(d.end(), q, -1);
    return d;
}

int discriminant_from_diagonal(const std::vector<int>& diag) {
    const long long N = static_cast<long long>(diag.size());
    int D = 1;
    for (int x : diag) D *= x;
    return sign_pow(N * (N - 1) / 2) * D;
}

int hasse_from_diagonal(const std::vector<int>& diag, int delta) {
    check_delta(delta);
    const long long N = static_cast<long long>(diag.size());
    int D = 1;
    for (int x : diag) D *= x;
    const int eta = discriminant_from_diagonal(diag);
    // E(Q) = prod_{i<j} (a_i, a_j): -1 for each pair of negative entries
    long long neg = std::count(diag.begin(), diag.end(), -1);
    const int E = sign_pow(neg * (neg - 1) / 2);
    int r = hilbert_symbol_real(-delta, eta);
    if ((N * (N - 1) / 2) % 2 != 0) r *= hilbert_symbol_real(-1, D);
    if (((N / 2 + 1) / 2) % 2 != 0) r *= hilbert_symbol_real(-1, -1);
    return r * E;
}

Signature add_hyperbolic(Signature s) {
    check_sig(s.p, s.q);
    return Signature{s.p + 1, s.q + 1};
}

std::string to_string(const OrthCharacter& c) {
    std::ostringstream os;
    if (c.eta == 0)
        os << (c.tau ? "det" : "Triv");
    else
        os << "sgn_" << c.delta << (c.tau ? "(x)det" : "");
    return os.str();
}

Restriction restriction(const OrthCharacter& c, int p, int q) {
    check_even(p, q);
    check_delta(c.delta);
    if ((c.eta != 0 && c.eta != 1) || (c.tau != 0 && c.tau != 1)) fail(ErrorKind::InvalidArgument, "eta and tau are 0 or 1");
    const int h = (p - q) / 2;
    Restriction r;
    if (c.eta == 0) {
        r = {0, 0};
    } else if (c.delta == 1) {
        r = {((h + 1) % 2 + 2) % 2, (h % 2 + 2) % 2};
    } else {
        // sgn_{-1} on O(p,q) is sgn_1 on O(q,p) with the factors exchanged
        const int h2 = (q - p) / 2;
        r = {(h2 % 2 + 2) % 2, ((h2 + 1) % 2 + 2) % 2};
    }
    r.on_p = (r.on_p + c.tau) % 2;
    r.on_q = (r.on_q + c.tau) % 2;
    if (p == 0) r.on_p = 0;
    if (q == 0) r.on_q = 0;
    return r;
}

OrthCharacter tensor_det(OrthCharacter c) {
    c.tau ^= 1;
    return c;
}

std::vector<LabelledCharacter> o_characters(int p, int q) {
    check_even(p, q);
    std::vector<LabelledCharacter> out;
    for (OrthCharacter c : {OrthCharacter{0, 1, 0}, OrthCharacter{0, 1, 1}, OrthCharacter{1, 1, 0}, OrthCharacter{1, 1, 1},
                            OrthCharacter{1, -1, 0}, OrthCharacter{1, -1, 1}}) {
        const auto r = restriction(c, p, q);
        if (std::any_of(out.begin(), out.end(), [&](auto& x) { return x.res == r; })) continue;
        out.push_back({c, r, to_string(c)});
    }
    return out;
}

int first_occurrence(const OrthCharacter& c, int p, int q) {
    const auto r = restriction(c, p, q);
    return (r.on_p ? p : 0) + (r.on_q ? q : 0);
}

std::optional<std::vector<int>> howe_ktype(const OrthCharacter& c, int p, int q, int n) {
    if (n < 0) fail(ErrorKind::InvalidArgument, "rank must be nonnegative");
    const auto r = restriction(c, p, q);
    const int x = r.on_p ? p : 0;
    const int y = r.on_q ? q : 0;
    if (n < x + y) return std::nullopt;
    const int h = (p - q) / 2;
    std::vector<int> w(n, h);
    for (int i = 0; i < x; ++i) w[i] += 1;
    for (int i = 0; i < y; ++i) w[n - 1 - i] -= 1;
    return w;
}

int howe_degree(const std::vector<int>& weight, int p, int q) {
    check_even(p, q);
    const int h = (p - q) / 2;
    int s = 0;
    for (int x : weight) s += std::abs(x - h);
    return s;
}

}  // namespace apk
