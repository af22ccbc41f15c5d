// SPDX-License-Identifier: Apache-2.0
// Normalized invariants of real quadratic forms and the characters of O(p,q)
// together with their theta K-type data.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace apk {

int hilbert_symbol_real(int a, int b);  // arguments are signs (+1/-1)

int det_class(int p, int q);
int discriminant(int p, int q);
int hasse_normalized(int p, int q, int delta);
int hasse_from_diagonal(const std::vector<int>& diag, int delta);
int discriminant_from_diagonal(const std::vector<int>& diag);
std::vector<int> signature_diagonal(int p, int q);  // p entries +1 then q entries -1

struct Signature {
    int p = 0, q = 0;
};
Signature add_hyperbolic(Signature s);

// eta_delta(p,q) (x) det^tau; eta = 0 (triv) or 1 (sgn).
struct OrthCharacter {
    int eta = 0;
    int delta = 1;
    int tau = 0;
};
std::string to_string(const OrthCharacter& c);

// det exponents (mod 2) on O(p,0) and O(0,q); an empty factor reports 0.
struct Restriction {
    int on_p = 0;
    int on_q = 0;
    bool operator==(const Restriction&) const = default;
};
Restriction restriction(const OrthCharacter& c, int p, int q);

struct LabelledCharacter {
    OrthCharacter chr;
    Restriction res;
    std::string name;  // Triv, det, sgn_1, sgn_1 (x) det ...
};
// The distinct characters of O(p,q): two if pq = 0, four otherwise.
std::vector<LabelledCharacter> o_characters(int p, int q);

int first_occurrence(const OrthCharacter& c, int p, int q);
OrthCharacter tensor_det(OrthCharacter c);

// Highest weight of the U(n)-type carried by the theta image, or none below the first occurrence.
std::optional<std::vector<int>> howe_ktype(const OrthCharacter& c, int p, int q, int n);
// Sum of |w_i - (p-q)/2|.
int howe_degree(const std::vector<int>& weight, int p, int q);

}  // namespace apk
