#include "branchkit/grids.hpp"

#include <cstdlib>

namespace branchkit {

namespace {

void extend(std::vector<int>& cur, int k, int lo, int hi, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    const int top = cur.empty() ? hi : cur.back();
    for (int x = lo; x <= top; ++x) {
        cur.push_back(x);
        extend(cur, k, lo, hi, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> nonincreasing_vectors(int k, int lo, int hi) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    extend(cur, k, lo, hi, out);
    return out;
}

std::vector<GroupFamily> su_families(int max_total) {
    std::vector<GroupFamily> out;
    for (int total = 3; total <= max_total; ++total)
        for (int m = 1; m < total; ++m) out.push_back(GroupFamily::su(m, total - m));
    return out;
}

std::vector<KWeight> su_weights(const GroupFamily& f, int bound) {
    std::vector<KWeight> out;
    const auto firsts = nonincreasing_vectors(f.m(), -bound, bound);
    for (const auto& b : nonincreasing_vectors(f.n(), -bound, bound)) {
        if (b.back() != 0) continue;
        for (const auto& a : firsts) out.push_back(KWeight::su(f, a, b));
    }
    return out;
}

std::vector<KWeight> su_weights_box(const GroupFamily& f, int bound) {
    std::vector<KWeight> out;
    const auto firsts = nonincreasing_vectors(f.m(), -bound, bound);
    for (const auto& b : nonincreasing_vectors(f.n(), -bound, bound))
        for (const auto& a : firsts) out.push_back(KWeight::su(f, a, b));
    return out;
}

std::vector<KWeight> soe_weights(int n, int bound, int p_lo, int p_hi) {
    const auto f = GroupFamily::soe(n);
    std::vector<KWeight> out;
    for (const auto& v : nonincreasing_vectors(n, 0, bound)) {
        for (int sign : {1, -1}) {
            if (sign < 0 && v[n - 1] == 0) continue;
            auto lam = v;
            lam[n - 1] *= sign;
            for (int p = p_lo; p <= p_hi; ++p) out.push_back(KWeight::soe(f, p, lam));
        }
    }
    return out;
}

std::vector<KWeight> sostar_weights(int n, int bound) {
    const auto f = GroupFamily::sostar(n);
    std::vector<KWeight> out;
    for (const auto& v : nonincreasing_vectors(n, -bound, bound)) out.push_back(KWeight::sostar(f, v));
    return out;
}

}  // namespace branchkit
