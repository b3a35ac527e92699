#include "branchkit/weyl_kappa.hpp"

#include <functional>

#include "branchkit/char_engine.hpp"

namespace branchkit {

namespace {

int parity_sign(int k) { return k % 2 == 0 ? 1 : -1; }

// (w v)_{w(k)} = v_k with the permutation given as a 1-based table.
std::vector<int> permute(const std::vector<int>& v, const std::vector<int>& w) {
    std::vector<int> out(v.size());
    for (size_t k = 0; k < v.size(); ++k) out[w[k] - 1] = v[k];
    return out;
}

// w^{(i)}: k -> k+1 (k < i), i -> 1, k -> k (k > i).
std::vector<int> cycle_to_front(int size, int i) {
    std::vector<int> w(size);
    for (int k = 1; k <= size; ++k) w[k - 1] = k < i ? k + 1 : (k == i ? 1 : k);
    return w;
}

// w_2^{(j)}: k -> k (k < j), j -> n, k -> k-1 (k > j).
std::vector<int> cycle_to_back(int size, int j) {
    std::vector<int> w(size);
    for (int k = 1; k <= size; ++k) w[k - 1] = k < j ? k : (k == j ? size : k - 1);
    return w;
}

// w_ij: k -> k+2 (k < i), i -> 1, k -> k+1 (i < k < j), j -> 2, k -> k (k > j).
std::vector<int> pair_to_front(int size, int i, int j) {
    std::vector<int> w(size);
    for (int k = 1; k <= size; ++k)
        w[k - 1] = k < i ? k + 2 : k == i ? 1 : k < j ? k + 1 : k == j ? 2 : k;
    return w;
}

int permutation_sign(const std::vector<int>& w) {
    int inv = 0;
    for (size_t a = 0; a < w.size(); ++a)
        for (size_t b = a + 1; b < w.size(); ++b) inv += w[a] > w[b];
    return parity_sign(inv);
}

// Doubled rho_c for the A_{k-1} chain: (k-1, k-3, ..., 1-k).
std::vector<int> two_rho_a(int k) {
    std::vector<int> r(k);
    for (int t = 0; t < k; ++t) r[t] = k - 1 - 2 * t;
    return r;
}

// (w (2v + r) - r) / 2 for a permutation w and doubled rho r.
std::vector<int> shifted_action(std::span<const int> v, const std::vector<int>& r, const std::vector<int>& w) {
    std::vector<int> x(v.size());
    for (size_t k = 0; k < v.size(); ++k) x[k] = 2 * v[k] + r[k];
    auto y = permute(x, w);
    for (size_t k = 0; k < y.size(); ++k) y[k] = (y[k] - r[k]) / 2;
    return y;
}

}  // namespace

std::string WeylElem::str(const GroupFamily& f) const {
    if (f.is_soe()) return std::string("(") + (delta > 0 ? "+" : "-") + "," + std::to_string(i) + ")";
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::vector<WeylElem> enum_wkappa(const GroupFamily& f) {
    std::vector<WeylElem> out;
    switch (f.kind()) {
        case FamilyKind::SU:
            for (int i = 1; i <= f.m(); ++i)
                for (int j = 1; j <= f.n(); ++j) out.push_back({i, j, 0});
            break;
        case FamilyKind::SOe:
            for (int i = 1; i <= f.n(); ++i)
                for (int d : {1, -1}) out.push_back({i, 0, d});
            break;
        case FamilyKind::SOstar:
            for (int i = 1; i <= f.n(); ++i)
                for (int j = i + 1; j <= f.n(); ++j) out.push_back({i, j, 0});
            break;
    }
    return out;
}

std::vector<int> lambda_w(const KWeight& w, const WeylElem& e) {
    const auto& f = w.family();
    switch (f.kind()) {
        case FamilyKind::SU: {
            auto a = shifted_action(w.lambda1(), two_rho_a(f.m()), cycle_to_front(f.m(), e.i));
            auto b = shifted_action(w.lambda2(), two_rho_a(f.n()), cycle_to_back(f.n(), e.j));
            a.insert(a.end(), b.begin(), b.end());
            return a;
        }
        case FamilyKind::SOe: {
            const int n = f.n();
            std::vector<int> rho(n);
            for (int k = 0; k < n; ++k) rho[k] = 2 * (n - 1 - k);
            auto y = shifted_action(w.lambda(), rho, cycle_to_front(n, e.i));
            if (e.delta < 0) {
                // delta_- flips the first and last coordinates of w(lambda + rho)
                y[0] = -(y[0] + n - 1) - (n - 1);
                y[n - 1] = -y[n - 1];
            }
            std::vector<int> out{w.p()};
            out.insert(out.end(), y.begin(), y.end());
            return out;
        }
        case FamilyKind::SOstar:
            return shifted_action(w.lambda(), two_rho_a(f.n()), pair_to_front(f.n(), e.i, e.j));
    }
    return {};
}

int weyl_sign(const GroupFamily& f, const WeylElem& e) {
    switch (f.kind()) {
        case FamilyKind::SU:
            return permutation_sign(cycle_to_front(f.m(), e.i)) * permutation_sign(cycle_to_back(f.n(), e.j));
        case FamilyKind::SOe:
            // delta_- changes two signs, so its determinant is +1
            return permutation_sign(cycle_to_front(f.n(), e.i));
        case FamilyKind::SOstar: return permutation_sign(pair_to_front(f.n(), e.i, e.j));
    }
    return 1;
}

std::int64_t c_hat_from_weight(const GroupFamily& f, const std::vector<int>& lw) {
    switch (f.kind()) {
        case FamilyKind::SU: return lw.front() - lw.back() + (f.m() + f.n() - 1);
        case FamilyKind::SOe: return (2 * f.n() - 1) + lw[1] - lw[0];
        case FamilyKind::SOstar: return lw[0] + lw[1] + (2 * f.n() - 3);
    }
    return 0;
}

std::vector<WeylTerm> weyl_terms(const KWeight& w) {
    const auto& f = w.family();
    std::vector<WeylTerm> out;
    for (const auto& e : enum_wkappa(f)) {
        WeylTerm t{e, 1, trivial_km(f), 0};
        switch (f.kind()) {
            case FamilyKind::SU: {
                const int m = f.m(), n = f.n(), i = e.i, j = e.j;
                const auto l1 = w.lambda1();
                const auto l2 = w.lambda2();
                std::vector<int> mu1, mu2;
                for (int k = 1; k <= m; ++k)
                    if (k != i) mu1.push_back(l1[k - 1] + (k < i ? 1 : 0));
                for (int k = 1; k <= n; ++k)
                    if (k != j) mu2.push_back(l2[k - 1] - (k > j ? 1 : 0));
                t.sign = parity_sign(i + j);
                t.label = canonical_km(KMLabel::su(f, mu1, mu2, l1[i - 1] + l2[j - 1] + n + 1 - i - j));
                t.c_hat = l1[i - 1] - l2[j - 1] + (m - i) + j;
                break;
            }
            case FamilyKind::SOe: {
                const int n = f.n(), i = e.i, p = w.p();
                const auto lam = w.lambda();
                std::vector<int> mu;
                int q;
                if (i < n) {
                    for (int k = 1; k < n; ++k)
                        if (k != i) mu.push_back(lam[k - 1] + (k < i ? 1 : 0));
                    mu.push_back(e.delta > 0 ? lam[n - 1] : -lam[n - 1]);
                    q = e.delta > 0 ? p + lam[i - 1] - i + 1 : p - lam[i - 1] - 2 * n + i + 1;
                    t.c_hat = e.delta > 0 ? -p + lam[i - 1] - i + 2 * n : -p - lam[i - 1] + i;
                } else {
                    for (int k = 1; k <= n - 1; ++k) mu.push_back(lam[k - 1] + 1);
                    if (e.delta < 0) mu.back() = -mu.back();
                    q = e.delta > 0 ? p + lam[n - 1] - n + 1 : p - lam[n - 1] - n + 1;
                    t.c_hat = e.delta > 0 ? -p + lam[n - 1] - n + 2 * n : -p - lam[n - 1] + n;
                }
                t.sign = parity_sign(i - 1);
                t.label = KMLabel::soe(f, q, mu);
                break;
            }
            case FamilyKind::SOstar: {
                const int n = f.n(), i = e.i, j = e.j;
                const auto lam = w.lambda();
                std::vector<int> nu;
                for (int k = 1; k <= n; ++k) {
                    if (k == i || k == j) continue;
                    nu.push_back(lam[k - 1] + (k < i ? 2 : k < j ? 1 : 0));
                }
                t.sign = parity_sign(i + j + 1);
                t.label = KMLabel::sostar(f, nu, lam[i - 1] - lam[j - 1] - i + j - 1);
                t.c_hat = lam[i - 1] + lam[j - 1] + 2 * n - i - j;
                break;
            }
        }
        out.push_back(std::move(t));
    }
    return out;
}

VirtualChar weyl_sum(const KWeight& w) {
    VirtualChar out(w.family());
    for (const auto& t : weyl_terms(w)) out.add(t.label, t.sign);
    return out;
}

std::optional<KMLabel> ptilde_ev(const GroupFamily& f) {
    switch (f.kind()) {
        case FamilyKind::SU: {
            if (f.m() == 1 || f.n() == 1) return std::nullopt;
            std::vector<int> a(f.m() - 1, 0), b(f.n() - 1, 0);
            a.front() = 1;
            b.back() = -1;
            return canonical_km(KMLabel::su(f, a, b, 0));
        }
        case FamilyKind::SOe: return KMLabel::soe(f, -2, std::vector<int>(f.n() - 1, 0));
        case FamilyKind::SOstar: {
            if (f.n() < 4) return std::nullopt;
            std::vector<int> nu(f.n() - 2, 0);
            nu[0] = nu[1] = 1;
            return KMLabel::sostar(f, nu, 0);
        }
    }
    return std::nullopt;
}

VirtualChar lambda_alt_sum(const GroupFamily& f) {
    VirtualChar out(f, trivial_km(f));
    const auto p = ptilde_ev(f);
    if (!p) return out;
    const int d = static_cast<int>(km_dimension(*p));
    for (int j = 1; j <= d; ++j) out += Integer(parity_sign(j)) * exterior_label(*p, j);
    return out;
}

VirtualChar lambda_alt_sum_su_formula(const GroupFamily& f) {
    if (!f.is_su()) throw family_error("lambda_alt_sum_su_formula needs an SU(m,n) family");
    VirtualChar out(f);
    const int a = f.m() - 1, b = f.n() - 1;
    // mu' runs over partitions inside an a x b box; mu'' is minus its conjugate, reversed
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int cap) {
        if (static_cast<int>(cur.size()) == a) {
            Partition mu(cur);
            auto conj = conjugate(mu).parts();
            if (static_cast<int>(conj.size()) > b) return;
            conj.resize(b, 0);
            std::vector<int> mu2(b);
            for (int k = 0; k < b; ++k) mu2[k] = -conj[b - 1 - k];
            out.add(KMLabel::su(f, cur, mu2, 0), Integer(parity_sign(mu.size())));
            return;
        }
        for (int x = 0; x <= cap; ++x) {
            cur.push_back(x);
            rec(x);
            cur.pop_back();
        }
    };
    rec(b);
    return out;
}

}  // namespace branchkit
