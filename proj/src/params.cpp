// SPDX-License-Identifier: Apache-2.0
#include "apk/params.hpp"
#include "apk/weights.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace apk {

std::string to_string(Violation v) {
    switch (v) {
        case Violation::DimSum: return "DIM_SUM";
        case Violation::ParityProduct: return "PARITY_PRODUCT";
        case Violation::BlockShape: return "BLOCK_SHAPE";
        case Violation::Order: return "ORDER";
    }
    return "?";
}

std::string to_string(const Block& b) {
    std::ostringstream os;
    if (b.discrete)
        os << "d" << b.t << "xR[" << b.a << "]";
    else
        os << (b.chr ? "sgn" : "triv") << "xR[" << b.dim << "]";
    return os.str();
}

std::string to_string(const ArthurParameter& psi) {
    std::ostringstream os;
    os << "n=" << psi.n << " {";
    bool first = true;
    for (auto& u : psi.unipotent) {
        os << (first ? "" : " + ") << to_string(Block::of(u));
        first = false;
    }
    for (auto& d : psi.discrete) {
        os << (first ? "" : " + ") << to_string(Block::of(d));
        first = false;
    }
    os << "}";
    return os.str();
}

namespace {

bool unip_before(const UnipotentBlock& x, const UnipotentBlock& y) {
    if (x.dim != y.dim) return x.dim > y.dim;
    return x.chr < y.chr;
}
bool disc_before(const DiscreteBlock& x, const DiscreteBlock& y) {
    if (x.t != y.t) return x.t > y.t;
    return x.a > y.a;
}

}  // namespace

ArthurParameter canonicalize(ArthurParameter psi) {
    std::sort(psi.unipotent.begin(), psi.unipotent.end(), unip_before);
    std::sort(psi.discrete.begin(), psi.discrete.end(), disc_before);
    return psi;
}

std::vector<Violation> validate(const ArthurParameter& psi) {
    std::vector<Violation> out;
    bool shape_ok = psi.n >= 0;
    for (auto& u : psi.unipotent)
        if (u.dim < 1 || u.dim % 2 == 0 || (u.chr != 0 && u.chr != 1)) shape_ok = false;
    for (auto& d : psi.discrete)
        if (d.t < 1 || d.a < 1 || (d.t + d.a) % 2 == 0) shape_ok = false;
    if (!shape_ok) out.push_back(Violation::BlockShape);

    long long total = 0;
    for (auto& u : psi.unipotent) total += u.dim;
    for (auto& d : psi.discrete) total += 2LL * d.a;
    if (total != 2LL * psi.n + 1) out.push_back(Violation::DimSum);

    int sgn_count = 0, odd_a = 0;
    for (auto& u : psi.unipotent) sgn_count += (u.chr == 1);
    for (auto& d : psi.discrete) odd_a += (d.a % 2 != 0);
    if ((sgn_count - odd_a) % 2 != 0) out.push_back(Violation::ParityProduct);

    if (!std::is_sorted(psi.unipotent.begin(), psi.unipotent.end(), unip_before) ||
        !std::is_sorted(psi.discrete.begin(), psi.discrete.end(), disc_before))
        out.push_back(Violation::Order);
    return out;
}

void require_valid(const ArthurParameter& psi) {
    auto v = validate(psi);
    if (v.empty()) return;
    std::string msg = "invalid parameter:";
    for (auto x : v) msg += " " + to_string(x);
    fail(ErrorKind::Validation, msg);
}

InfChar inf_char_of_param(const ArthurParameter& psi) {
    InfChar chi;
    for (auto& u : psi.unipotent) {
        const int h = (u.dim - 1) / 2;
        for (int x = h; x >= -h; --x) chi.push_back(x);
    }
    for (auto& d : psi.discrete)
        for (int x = seg_lo(d); x <= seg_hi(d); ++x) {
            chi.push_back(x);
            chi.push_back(-x);
        }
    std::sort(chi.begin(), chi.end(), std::greater<>());
    return chi;
}

int a_psi_u(const ArthurParameter& psi) {
    if (psi.unipotent.empty()) fail(ErrorKind::Validation, "parameter has no unipotent part");
    int best = 0;
    for (auto& u : psi.unipotent) best = std::max(best, u.dim);
    return best;
}

int a_psi(const ArthurParameter& psi) {
    int best = a_psi_u(psi);
    for (auto& d : psi.discrete) best = std::max(best, d.a);
    return best;
}

int dim_unipotent(const ArthurParameter& psi) {
    int s = 0;
    for (auto& u : psi.unipotent) s += u.dim;
    return s;
}

int dim_discrete(const ArthurParameter& psi) {
    int s = 0;
    for (auto& d : psi.discrete) s += 2 * d.a;
    return s;
}

std::vector<UnipotentBlock> twist_sgn(std::vector<UnipotentBlock> blocks, int dim_d) {
    if (dim_d < 0 || dim_d % 2 != 0) fail(ErrorKind::InvalidArgument, "discrete dimension must be even and nonnegative");
    const int e = (dim_d / 2) % 2;
    for (auto& b : blocks) b.chr ^= e;
    std::sort(blocks.begin(), blocks.end(), unip_before);
    return blocks;
}

bool lemma43_check(const ArthurParameter& psi) {
    const size_t r = psi.unipotent.size();
    if (r != 1 && r != 3) return false;
    if (r == 3 && std::none_of(psi.unipotent.begin(), psi.unipotent.end(), [](auto& u) { return u.dim == 1; }))
        return false;
    int touching = 0;
    bool strictly = false;
    for (auto& d : psi.discrete) {
        const int lo2 = d.t - d.a + 1;
        if (lo2 <= 0) ++touching;
        if (lo2 < 0) strictly = true;
    }
    if (touching > 1) return false;
    if (touching == 1 && r != 1) return false;
    if (strictly && psi.unipotent[0].dim != 1) return false;
    return true;
}

bool lemma43_check(const ArthurParameter& psi, const InfChar& target) {
    return inf_char_of_param(psi) == target && lemma43_check(psi);
}

bool contains_block(const ArthurParameter& psi, const UnipotentBlock& b) {
    return std::find(psi.unipotent.begin(), psi.unipotent.end(), b) != psi.unipotent.end();
}

bool contains_block(const ArthurParameter& psi, const DiscreteBlock& b) {
    return std::find(psi.discrete.begin(), psi.discrete.end(), b) != psi.discrete.end();
}

ArthurParameter remove_block(const ArthurParameter& psi, size_t j) {
    if (j >= psi.discrete.size()) fail(ErrorKind::InvalidArgument, "discrete block index out of range");
    ArthurParameter out = psi;
    const int a = psi.discrete[j].a;
    out.discrete.erase(out.discrete.begin() + static_cast<long>(j));
    out.n = psi.n - a;
    out.unipotent = twist_sgn(out.unipotent, 2 * a);
    return canonicalize(out);
}

// ---------------------------------------------------------------- enumeration

namespace {

struct Cover {
    std::vector<int> unip_dims;
    std::vector<DiscreteBlock> disc;
};

class Coverer {
public:
    Coverer(const InfChar& chi) {
        for (int x : chi) ++count_[x];
    }

    void run(std::set<std::pair<std::vector<int>, std::vector<DiscreteBlock>>>& out) {
        out_ = &out;
        rec();
    }

private:
    std::map<int, int> count_;
    Cover cur_;
    std::set<std::pair<std::vector<int>, std::vector<DiscreteBlock>>>* out_ = nullptr;

    bool take(int x, int k) {
        auto it = count_.find(x);
        if (it == count_.end() || it->second < k) return false;
        it->second -= k;
        return true;
    }
    void give(int x, int k) { count_[x] += k; }

    // removes every value in `vals`; rolls back on failure
    bool take_all(const std::vector<int>& vals) {
        size_t i = 0;
        for (; i < vals.size(); ++i)
            if (!take(vals[i], 1)) break;
        if (i == vals.size()) return true;
        for (size_t k = 0; k < i; ++k) give(vals[k], 1);
        return false;
    }
    void give_all(const std::vector<int>& vals) {
        for (int v : vals) give(v, 1);
    }

    int top() const {
        for (auto it = count_.rbegin(); it != count_.rend(); ++it)
            if (it->second > 0) return it->first;
        return -1;  // nothing left
    }

    void rec() {
        const int x = top();
        if (x < 0) {
            // only zeros could remain, but top() would report 0
            emit();
            return;
        }
        if (x == 0) {
            const int z = count_[0];
            count_[0] = 0;
            cur_.unip_dims.insert(cur_.unip_dims.end(), z, 1);
            emit();
            cur_.unip_dims.resize(cur_.unip_dims.size() - z);
            count_[0] = z;
            return;
        }
        // unipotent block centred at 0 with top x
        {
            std::vector<int> vals;
            for (int y = x; y >= -x; --y) vals.push_back(y);
            if (take_all(vals)) {
                cur_.unip_dims.push_back(2 * x + 1);
                rec();
                cur_.unip_dims.pop_back();
                give_all(vals);
            }
        }
        // discrete block with top x: t + a = 2x + 1
        for (int a = 1; a <= 2 * x; ++a) {
            DiscreteBlock d{2 * x + 1 - a, a};
            std::vector<int> vals;
            for (int y = seg_lo(d); y <= seg_hi(d); ++y) {
                vals.push_back(y);
                vals.push_back(-y);
            }
            if (take_all(vals)) {
                cur_.disc.push_back(d);
                rec();
                cur_.disc.pop_back();
                give_all(vals);
            }
        }
    }

    void emit() {
        auto dims = cur_.unip_dims;
        std::sort(dims.begin(), dims.end(), std::greater<>());
        auto disc = cur_.disc;
        std::sort(disc.begin(), disc.end(), disc_before);
        out_->emplace(std::move(dims), std::move(disc));
    }
};

// every multiset of characters on the given dims with the prescribed number of sgn mod 2
void assign_characters(const std::vector<int>& dims, int parity, std::vector<std::vector<UnipotentBlock>>& out) {
    std::vector<std::pair<int, int>> groups;  // (dim, multiplicity)
    for (int d : dims) {
        if (!groups.empty() && groups.back().first == d)
            ++groups.back().second;
        else
            groups.emplace_back(d, 1);
    }
    std::vector<int> nsgn(groups.size(), 0);
    std::function<void(size_t, int)> rec = [&](size_t g, int total) {
        if (g == groups.size()) {
            if (total % 2 != parity) return;
            std::vector<UnipotentBlock> blocks;
            for (size_t i = 0; i < groups.size(); ++i) {
                blocks.insert(blocks.end(), groups[i].second - nsgn[i], UnipotentBlock{0, groups[i].first});
                blocks.insert(blocks.end(), nsgn[i], UnipotentBlock{1, groups[i].first});
            }
            out.push_back(blocks);
            return;
        }
        for (int s = 0; s <= groups[g].second; ++s) {
            nsgn[g] = s;
            rec(g + 1, total + s);
        }
    };
    rec(0, 0);
}

}  // namespace

std::vector<ArthurParameter> enumerate_params(const InfChar& chi, int n, const EnumerationLimits& lim) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "rank n must be >= 1");
    if (n > lim.max_rank) fail(ErrorKind::Limit, "rank exceeds enumeration limit " + std::to_string(lim.max_rank));
    if (static_cast<int>(chi.size()) != 2 * n + 1) fail(ErrorKind::InvalidArgument, "character length must be 2n+1");
    InfChar sorted = chi;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (!is_valid_inf_char(sorted)) fail(ErrorKind::InvalidArgument, "not a symmetric character with odd zero count");

    std::set<std::pair<std::vector<int>, std::vector<DiscreteBlock>>> covers;
    Coverer(sorted).run(covers);

    std::vector<ArthurParameter> out;
    for (auto& [dims, disc] : covers) {
        int odd_a = 0;
        for (auto& d : disc) odd_a += d.a % 2;
        std::vector<std::vector<UnipotentBlock>> chars;
        assign_characters(dims, odd_a % 2, chars);
        for (auto& u : chars) out.push_back(canonicalize(ArthurParameter{n, u, disc}));
    }
    std::sort(out.begin(), out.end(), [](const ArthurParameter& x, const ArthurParameter& y) {
        if (x.discrete != y.discrete) return x.discrete < y.discrete;
        return x.unipotent < y.unipotent;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace apk
