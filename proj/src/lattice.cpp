#include "branchkit/lattice.hpp"


namespace branchkit {

SparseVec axpby(const Integer& a, const SparseVec& x, const Integer& b, const SparseVec& y) {
    SparseVec out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            if (a != 0) out.emplace_back(x[i].first, a * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            if (b != 0) out.emplace_back(y[j].first, b * y[j].second);
            ++j;
        } else {
            Integer s = a * x[i].second + b * y[j].second;
            if (s != 0) out.emplace_back(x[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

namespace {

// g = s*a + t*b with g = gcd(a, b) > 0.
void ext_gcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
    Integer r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        Integer s2 = s0 - q * s1;
        Integer t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0 < 0) {
        r0 = -r0;
        s0 = -s0;
        t0 = -t0;
    }
    g = r0;
    s = s0;
    t = t0;
}

}  // namespace

void IntegerLattice::insert(SparseVec v, int id) {
    SparseVec combo{{id, Integer(1)}};
    while (!v.empty()) {
        const int p = v.front().first;
        auto it = basis_.find(p);
        if (it == basis_.end()) {
            if (v.front().second < 0) {
                v = axpby(-1, v, 0, {});
                combo = axpby(-1, combo, 0, {});
            }
            basis_.emplace(p, Row{std::move(v), std::move(combo)});
            return;
        }
        Row& u = it->second;
        const Integer a = v.front().second;
        const Integer b = u.vec.front().second;
        if (a % b == 0) {
            const Integer q = a / b;
            v = axpby(1, v, -q, u.vec);
            combo = axpby(1, combo, -q, u.combo);
            continue;
        }
        Integer g, s, t;
        ext_gcd(b, a, g, s, t);
        SparseVec nu = axpby(s, u.vec, t, v);
        SparseVec nc = axpby(s, u.combo, t, combo);
        const Integer bg = b / g, ag = a / g;
        v = axpby(bg, v, -ag, u.vec);
        combo = axpby(bg, combo, -ag, u.combo);
        u.vec = std::move(nu);
        u.combo = std::move(nc);
    }
}

std::optional<std::map<int, Integer>> IntegerLattice::solve(SparseVec target) const {
    SparseVec combo;
    while (!target.empty()) {
        const int p = target.front().first;
        auto it = basis_.find(p);
        if (it == basis_.end()) return std::nullopt;
        const Integer& b = it->second.vec.front().second;
        const Integer& a = target.front().second;
        if (a % b != 0) return std::nullopt;
        const Integer q = a / b;
        target = axpby(1, target, -q, it->second.vec);
        combo = axpby(1, combo, q, it->second.combo);
    }
    std::map<int, Integer> out;
    for (auto& [i, c] : combo) out.emplace(i, std::move(c));
    return out;
}

}  // namespace branchkit
