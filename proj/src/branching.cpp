#include "branchkit/branching.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "branchkit/errors.hpp"

namespace branchkit {

namespace {

// Visit every v with lo[i] <= v[i] <= hi[i], lexicographically descending.
void for_each_box(const std::vector<int>& lo, const std::vector<int>& hi,
                  const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> v(lo.size());
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == v.size()) {
            fn(v);
            return;
        }
        for (int x = hi[i]; x >= lo[i]; --x) {
            v[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
}

// mu with lam_1 >= mu_1 >= lam_2 >= ... >= mu_{k-1} >= lam_k.
std::vector<std::vector<int>> interlacing(std::span<const int> lam) {
    std::vector<std::vector<int>> out;
    if (lam.empty()) return out;
    std::vector<int> lo, hi;
    for (size_t i = 0; i + 1 < lam.size(); ++i) {
        hi.push_back(lam[i]);
        lo.push_back(lam[i + 1]);
    }
    for_each_box(lo, hi, [&](const std::vector<int>& v) { out.push_back(v); });
    return out;
}

int sum(std::span<const int> v) { return std::accumulate(v.begin(), v.end(), 0); }

int sgn(int x) { return (x > 0) - (x < 0); }

std::vector<RawTerm> branch_su(const KWeight& w) {
    const auto& f = w.family();
    const auto l1 = w.lambda1();
    const auto l2 = w.lambda2();
    const int total = sum(l1) + sum(l2);
    std::vector<RawTerm> out;
    for (const auto& a : interlacing(l1))
        for (const auto& b : interlacing(l2))
            out.emplace_back(KMLabel::su(f, a, b, total - sum(a) - sum(b)), Integer(1));
    return out;
}

std::vector<std::int64_t> box_counts(const std::vector<int>& ell) {
    // coefficients of prod_i (1 + x + ... + x^{ell_i})
    std::vector<std::int64_t> m{1};
    for (int l : ell) {
        std::vector<std::int64_t> next(m.size() + l, 0);
        for (size_t k = 0; k < m.size(); ++k)
            for (int t = 0; t <= l; ++t) next[k + t] += m[k];
        m = std::move(next);
    }
    return m;
}

bool in_soe_window(std::span<const int> lam, std::span<const int> mu) {
    const size_t n = lam.size();
    if (mu.size() + 1 != n || !is_type_d_dominant(mu)) return false;
    if (n == 2) return lam[0] >= std::abs(mu[0]);
    for (size_t i = 0; i + 2 < n; ++i) {
        int below = (i + 2 == n - 1) ? std::abs(lam[n - 1]) : lam[i + 2];
        if (!(lam[i] >= mu[i] && mu[i] >= below)) return false;
    }
    return lam[n - 2] >= std::abs(mu[n - 2]);
}

std::vector<RawTerm> branch_soe(const KWeight& w) {
    const auto& f = w.family();
    std::vector<RawTerm> out;
    for (const auto& mu : soe_window(w.lambda())) {
        const auto t = branch_terms_soe(w, mu);
        for (int k = 0; k <= t.ell_total; ++k)
            out.emplace_back(KMLabel::soe(f, w.p() + t.ell_n + 2 * k - t.ell_total, mu),
                             Integer(t.m[k]));
    }
    return out;
}

std::vector<RawTerm> branch_sostar(const KWeight& w) {
    const auto& f = w.family();
    const auto lam = w.lambda();
    const int n = f.n();
    std::vector<int> lo, hi;
    for (int i = 0; i < n - 2; ++i) {
        hi.push_back(lam[i]);
        lo.push_back(lam[i + 2]);
    }
    std::vector<RawTerm> out;
    for_each_box(lo, hi, [&](const std::vector<int>& nu) {
        if (!is_nonincreasing(nu)) return;
        const auto sides = sostar_sides(lam, nu);
        const int top = sostar_p(lam, nu);
        if (top < 0) throw std::logic_error("SO* branching produced p < 0 for " + w.str());
        const auto m = box_counts(sides);
        for (int k = 0; 2 * k <= top; ++k) {
            const std::int64_t mult = m[k] - (k > 0 ? m[k - 1] : 0);
            if (mult > 0) out.emplace_back(KMLabel::sostar(f, nu, top - 2 * k), Integer(mult));
        }
    });
    return out;
}

}  // namespace

std::vector<std::vector<int>> soe_window(std::span<const int> lam) {
    const size_t n = lam.size();
    std::vector<int> lo(n - 1), hi(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) {
        hi[i] = lam[i];
        if (i + 2 == n)
            lo[i] = -lam[i];
        else
            lo[i] = i + 2 == n - 1 ? std::abs(lam[n - 1]) : lam[i + 2];
    }
    std::vector<std::vector<int>> out;
    for_each_box(lo, hi, [&](const std::vector<int>& mu) {
        if (in_soe_window(lam, mu)) out.push_back(mu);
    });
    return out;
}

BranchTermSOE branch_terms_soe(const KWeight& w, std::span<const int> mu) {
    if (!w.family().is_soe()) throw family_error("branch_terms_soe needs an SO_0(2,2n) weight");
    const auto lam = w.lambda();
    const size_t n = lam.size();
    if (!in_soe_window(lam, mu))
        throw not_in_support_error("mu is outside the branching window of " + w.str());

    BranchTermSOE t;
    t.mu.assign(mu.begin(), mu.end());
    t.ell.resize(n - 1);
    const int abs_last_lam = std::abs(lam[n - 1]);
    const int abs_last_mu = std::abs(mu[n - 2]);
    if (n == 2) {
        t.ell[0] = lam[0] - std::max(abs_last_lam, abs_last_mu);
    } else {
        t.ell[0] = lam[0] - std::max(lam[1], mu[0]);
        for (size_t i = 1; i + 2 < n; ++i)  // 2 <= i+1 <= n-2
            t.ell[i] = std::min(lam[i], mu[i - 1]) - std::max(lam[i + 1], mu[i]);
        t.ell[n - 2] = std::min(lam[n - 2], mu[n - 3]) - std::max(abs_last_lam, abs_last_mu);
    }
    t.ell_n = sgn(lam[n - 1]) * sgn(mu[n - 2]) * std::min(abs_last_lam, abs_last_mu);
    for (int l : t.ell) {
        if (l < 0) throw not_in_support_error("negative ell in the branching window");
        t.ell_total += l;
    }
    t.m = box_counts(t.ell);
    return t;
}

std::vector<int> sostar_sides(std::span<const int> lam, std::span<const int> nu) {
    const size_t n = lam.size();
    if (nu.size() + 2 != n) throw validation_error("sostar_sides: nu must have length n-2");
    std::vector<int> sides(n - 1);
    for (size_t j = 0; j + 1 < n; ++j) {
        const int upper = j == 0 ? lam[0] : std::min(lam[j], nu[j - 1]);
        const int lower = j + 2 == n ? lam[n - 1] : std::max(lam[j + 1], nu[j]);
        sides[j] = upper - lower;
        if (sides[j] < 0) throw not_in_support_error("nu is outside the branching window");
    }
    return sides;
}

int sostar_p(std::span<const int> lam, std::span<const int> nu) {
    const size_t n = lam.size();
    if (nu.size() + 2 != n) throw validation_error("sostar_p: nu must have length n-2");
    int p = lam[0] - lam[n - 1];
    for (size_t i = 1; i + 1 < n; ++i) p -= std::abs(lam[i] - nu[i - 1]);
    return p;
}

std::vector<RawTerm> branch_raw(const KWeight& w) {
    switch (w.family().kind()) {
        case FamilyKind::SU: return branch_su(w);
        case FamilyKind::SOe: return branch_soe(w);
        case FamilyKind::SOstar: return branch_sostar(w);
    }
    return {};
}

VirtualChar branch(const KWeight& w) {
    VirtualChar out(w.family());
    for (const auto& [label, coef] : branch_raw(w)) out.add(label, coef);
    return out;
}

VirtualChar branch(const KVirtualChar& vc) {
    VirtualChar out(vc.family());
    for (const auto& [w, c] : vc.terms()) out += c * branch(w);
    return out;
}

}  // namespace branchkit
