// SPDX-License-Identifier: Apache-2.0
// Core value types shared by every module.
#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace apk {

enum class ErrorKind {
    InvalidArgument,  // precondition on scalar inputs violated
    Validation,       // malformed structured input (parameter, tableau, weight)
    Limit,            // configured size limit exceeded
    Internal,         // a formula produced something it never should
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

// floor(num / den) for den > 0, correct for negative numerators
inline long long floor_div(long long num, long long den) {
    long long q = num / den;
    if ((num % den != 0) && (num < 0)) --q;
    return q;
}

inline int sign_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }  // (-1)^e, any sign of e

// Highest weight label mu = (m_1 >= ... >= m_n).
struct HighestWeight {
    int n = 0;
    std::vector<int> m;
    bool operator==(const HighestWeight&) const = default;
};

// Decreasing list of 2n+1 integers, symmetric under negation.
using InfChar = std::vector<int>;

// Quadratic character of the Weil group: 0 = triv, 1 = sgn.
using QChar = int;

struct UnipotentBlock {
    QChar chr = 0;
    int dim = 1;
    auto operator<=>(const UnipotentBlock&) const = default;
};

struct DiscreteBlock {
    int t = 1;
    int a = 1;
    auto operator<=>(const DiscreteBlock&) const = default;
};

struct ArthurParameter {
    int n = 0;
    std::vector<UnipotentBlock> unipotent;
    std::vector<DiscreteBlock> discrete;
    bool operator==(const ArthurParameter&) const = default;
};

// A block of a parameter, either kind, used where blocks are listed uniformly.
struct Block {
    bool discrete = false;
    QChar chr = 0;  // unipotent only
    int dim = 1;    // unipotent only
    int t = 0;      // discrete only
    int a = 0;      // discrete only
    auto operator<=>(const Block&) const = default;

    static Block of(const UnipotentBlock& u) { return Block{false, u.chr, u.dim, 0, 0}; }
    static Block of(const DiscreteBlock& d) { return Block{true, 0, 0, d.t, d.a}; }
    int total_dim() const { return discrete ? 2 * a : dim; }
};

std::string to_string(const Block& b);
std::string to_string(const ArthurParameter& psi);

}  // namespace apk
