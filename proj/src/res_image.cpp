#include "branchkit/res_image.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "branchkit/branching.hpp"
#include "branchkit/errors.hpp"
#include "branchkit/grids.hpp"
#include "branchkit/lattice.hpp"

namespace branchkit {

std::string to_string(MemberStatus s) {
    switch (s) {
        case MemberStatus::Member: return "member";
        case MemberStatus::NonMember: return "nonmember";
        case MemberStatus::Unknown: return "unknown";
    }
    return "unknown";
}

// ---- invariant I ----

Integer invariant_I(const KMLabel& label) {
    const auto& f = label.family();
    if (!(f.is_su() && f.m() == 3 && f.n() == 2)) throw family_error("invariant_I is defined for SU(3,2) only");
    const Integer a = label.mu1()[0] + label.mu2()[0] - label.p();
    const Integer b = label.mu1()[1] + label.mu2()[0] - label.p();
    return a + b + a * a - b * b;
}

Integer invariant_I(const VirtualChar& vc) {
    const auto& f = vc.family();
    if (!(f.is_su() && f.m() == 3 && f.n() == 2)) throw family_error("invariant_I is defined for SU(3,2) only");
    Integer s = 0;
    for (const auto& [l, c] : vc.terms()) s += c * invariant_I(l);
    return s;
}

// ---- SO_0(2,2n) ----

namespace {

int floor_mod2(int q) { return ((q % 2) + 2) % 2; }

std::vector<int> starred(std::vector<int> mu) {
    mu.back() = -mu.back();
    return mu;
}

int soe_height(std::span<const int> mu) {
    int h = 0;
    for (size_t i = 0; i + 1 < mu.size(); ++i) h += mu[i];
    return h + std::abs(mu.back());
}

// Generator with branch tau_{mu,q+s} + tau_{mu*,q-s} + (terms of smaller height).
KWeight soe_pair_weight(const GroupFamily& f, const std::vector<int>& mu, int q, int s) {
    std::vector<int> lam(mu.begin(), mu.end() - 1);
    const int last = mu.back();
    lam.push_back(std::abs(last));
    lam.push_back(last >= 0 ? s : -s);
    return KWeight::soe(f, q, lam);
}

struct SoeBuilder {
    GroupFamily f;
    VirtualChar rest;
    KVirtualChar witness;

    void use(const KWeight& w, const Integer& c) {
        if (c == 0) return;
        witness.add(w, c);
        rest -= c * branch(w);
    }
};

}  // namespace

MembershipResult member_soe(const VirtualChar& vc) {
    const auto& f = vc.family();
    if (!f.is_soe()) throw family_error("member_soe needs an SO_0(2,2n) family");

    // parity functionals: for mu_{n-1} > 0 and each parity class of q,
    // sum of coefficients on tau_{mu,.} minus sum on tau_{mu*,.}
    std::map<std::pair<std::vector<int>, int>, Integer> value;
    for (const auto& [l, c] : vc.terms()) {
        std::vector<int> mu(l.mu().begin(), l.mu().end());
        if (mu.back() == 0) continue;
        const bool pos = mu.back() > 0;
        auto key = std::make_pair(pos ? mu : starred(mu), floor_mod2(l.q()));
        value[key] += pos ? c : Integer(-c);
    }
    for (const auto& [key, v] : value) {
        if (v != 0) {
            MembershipResult r;
            r.status = MemberStatus::NonMember;
            r.certificate = Certificate{"parity", key.first, key.second, v};
            return r;
        }
    }

    // constructive preimage, peeling from the largest height down
    SoeBuilder b{f, vc, KVirtualChar(f)};
    while (!b.rest.empty()) {
        int top = -1;
        for (const auto& [l, c] : b.rest.terms()) top = std::max(top, soe_height(l.mu()));
        std::vector<std::pair<std::vector<int>, int>> layer;
        for (const auto& [l, c] : b.rest.terms())
            if (soe_height(l.mu()) == top) layer.emplace_back(std::vector<int>(l.mu().begin(), l.mu().end()), l.q());
        const auto [mu, q0] = layer.back();
        const Integer c0 = b.rest.coefficient(KMLabel::soe(f, q0, mu));
        if (mu.back() == 0) {
            b.use(soe_pair_weight(f, mu, q0, 0), c0);
            continue;
        }
        // move the mu*-side onto mu with s = 0 generators, then telescope inside each parity class
        const auto pmu = mu.back() > 0 ? mu : starred(mu);
        const auto smu = starred(pmu);
        for (int q : [&] {
                 std::vector<int> qs;
                 for (const auto& [l, c] : b.rest.terms())
                     if (std::ranges::equal(l.mu(), smu)) qs.push_back(l.q());
                 return qs;
             }())
            b.use(soe_pair_weight(f, pmu, q, 0), b.rest.coefficient(KMLabel::soe(f, q, smu)));
        std::vector<int> qs;
        for (const auto& [l, c] : b.rest.terms())
            if (std::ranges::equal(l.mu(), pmu)) qs.push_back(l.q());
        std::sort(qs.begin(), qs.end());
        for (int par : {0, 1}) {
            std::vector<int> cls;
            for (int q : qs)
                if (floor_mod2(q) == par) cls.push_back(q);
            if (cls.empty()) continue;
            for (int a = cls.front(); a < cls.back(); a += 2) {
                const Integer x = b.rest.coefficient(KMLabel::soe(f, a, pmu));
                if (x == 0) continue;
                // tau_{mu,a} - tau_{mu,a+2} = (tau_{mu,a} + tau_{mu*,a}) - (tau_{mu,a+2} + tau_{mu*,a})
                b.use(soe_pair_weight(f, pmu, a, 0), x);
                b.use(soe_pair_weight(f, pmu, a + 1, 1), -x);
            }
        }
        for (const auto& [l, c] : b.rest.terms())
            if (soe_height(l.mu()) == top && (std::ranges::equal(l.mu(), pmu) || std::ranges::equal(l.mu(), smu)))
                throw std::logic_error("member_soe: parity functionals vanish but peeling stalled");
    }
    if (branch(b.witness) != vc) throw std::logic_error("member_soe: witness does not reproduce the target");
    MembershipResult r;
    r.status = MemberStatus::Member;
    r.witness = std::move(b.witness);
    return r;
}

// ---- SU(m,1) / SU(1,n) ----

namespace {

// The side of rank > 1 carries mu; the other side has no K_M part.
bool su1n_first_side(const GroupFamily& f) {
    if (!f.is_su() || (f.n() != 1 && f.m() != 1))
        throw family_error("preimage_su1n needs SU(m,1) or SU(1,n)");
    return f.n() == 1;
}

int su1n_length(std::span<const int> mu) {
    int l = 0;
    for (int x : mu) l += x - mu.back();
    return l;
}

}  // namespace

KVirtualChar preimage_su1n(const VirtualChar& vc) {
    const auto& f = vc.family();
    const bool first = su1n_first_side(f);
    KVirtualChar witness(f);
    VirtualChar rest = vc;
    while (!rest.empty()) {
        // largest l(mu); ties broken by the lexicographically largest label
        const KMLabel* pick = nullptr;
        int best = -1;
        for (auto it = rest.terms().rbegin(); it != rest.terms().rend(); ++it) {
            const auto mu = first ? it->first.mu1() : it->first.mu2();
            const int l = su1n_length(mu);
            if (l > best) {
                best = l;
                pick = &it->first;
            }
        }
        const KMLabel label = *pick;
        const Integer c = rest.coefficient(label);
        const auto mu = first ? label.mu1() : label.mu2();
        const int k = mu.back() - label.p();  // shift so that the last entry equals p
        std::vector<int> lam;
        for (int x : mu) lam.push_back(x + k);
        lam.push_back(mu.back() + k);
        const KWeight w = first ? KWeight::su(f, lam, {0}) : KWeight::su(f, {0}, lam);
        witness.add(w, c);
        rest -= c * branch(w);
    }
    return witness;
}

KVirtualChar preimage_su1n(const KMLabel& label) {
    return preimage_su1n(VirtualChar(label.family(), label));
}

// ---- bounded lattice search ----

std::size_t max_generators() {
    if (const char* s = std::getenv("BRANCHKIT_MAX_GENERATORS")) {
        char* end = nullptr;
        const long long v = std::strtoll(s, &end, 10);
        if (end != s && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 40000;
}

std::vector<KWeight> lattice_generators(const GroupFamily& f, int bound) {
    switch (f.kind()) {
        case FamilyKind::SU: return su_weights(f, bound);
        case FamilyKind::SOe: return soe_weights(f.n(), bound, -bound, bound);
        case FamilyKind::SOstar: return sostar_weights(f.n(), bound);
    }
    return {};
}

int lattice_bound(const VirtualChar& target, int radius) {
    if (radius < 0) throw validation_error("radius must be nonnegative");
    int b = 0;
    for (const auto& [l, c] : target.terms())
        for (int x : l.coords()) b = std::max(b, std::abs(x));
    return b + radius;
}

namespace {

// Rows are ordered so that the lexicographically largest label (SO(2n-2)-part
// before q for SOe) gets the smallest index: every branched weight then has a
// leading term with coefficient one and elimination stays close to triangular.
std::vector<int> row_key(const KMLabel& l) {
    std::vector<int> k(l.coords().begin(), l.coords().end());
    if (l.family().is_soe()) std::rotate(k.begin(), k.begin() + 1, k.end());
    return k;
}

struct CachedLattice {
    std::vector<KWeight> generators;
    std::map<std::vector<int>, int> rows;  // row_key -> index
    IntegerLattice lattice;
};

std::mutex cache_mutex;
std::map<std::pair<GroupFamily, int>, std::shared_future<std::shared_ptr<const CachedLattice>>> lattice_cache;

SparseVec to_sparse(const VirtualChar& vc, const std::map<std::vector<int>, int>& rows) {
    SparseVec v;
    for (const auto& [l, c] : vc.terms()) v.emplace_back(rows.at(row_key(l)), c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

std::shared_ptr<const CachedLattice> compute_lattice(const GroupFamily& f, int bound) {
    auto gens = lattice_generators(f, bound);
    if (gens.size() > max_generators())
        throw resource_error("lattice search needs " + std::to_string(gens.size()) +
                             " generators, above the cap of " + std::to_string(max_generators()) +
                             " (BRANCHKIT_MAX_GENERATORS)");
    auto c = std::make_shared<CachedLattice>();
    c->generators = std::move(gens);
    std::vector<VirtualChar> images;
    images.reserve(c->generators.size());
    std::set<std::vector<int>, std::greater<>> keys;
    for (const auto& g : c->generators) {
        images.push_back(branch(g));
        for (const auto& [l, coef] : images.back().terms()) keys.insert(row_key(l));
    }
    int next = 0;
    for (const auto& k : keys) c->rows.emplace(k, next++);
    for (size_t i = 0; i < images.size(); ++i)
        c->lattice.insert(to_sparse(images[i], c->rows), static_cast<int>(i));
    return c;
}

// One build per (family, bound); concurrent callers wait for it.
std::shared_ptr<const CachedLattice> build_lattice(const GroupFamily& f, int bound) {
    std::promise<std::shared_ptr<const CachedLattice>> promise;
    std::shared_future<std::shared_ptr<const CachedLattice>> fut;
    bool owner = false;
    {
        std::lock_guard lock(cache_mutex);
        auto it = lattice_cache.find({f, bound});
        if (it != lattice_cache.end()) {
            fut = it->second;
        } else {
            fut = promise.get_future().share();
            lattice_cache.emplace(std::pair{f, bound}, fut);
            owner = true;
        }
    }
    if (owner) {
        try {
            promise.set_value(compute_lattice(f, bound));
        } catch (...) {
            {
                std::lock_guard lock(cache_mutex);
                lattice_cache.erase({f, bound});
            }
            promise.set_exception(std::current_exception());
        }
    }
    return fut.get();
}

}  // namespace

void clear_lattice_cache() {
    std::lock_guard lock(cache_mutex);
    lattice_cache.clear();
}

MembershipResult lattice_member(const VirtualChar& target, int radius) {
    const auto& f = target.family();
    const int bound = lattice_bound(target, radius);
    MembershipResult r;
    r.radius = radius;
    if (target.empty()) {
        r.status = MemberStatus::Member;
        r.witness = KVirtualChar(f);
        return r;
    }
    auto c = build_lattice(f, bound);
    SparseVec t;
    for (const auto& [l, coef] : target.terms()) {
        auto it = c->rows.find(row_key(l));
        if (it == c->rows.end()) {
            r.status = MemberStatus::Unknown;
            return r;
        }
        t.emplace_back(it->second, coef);
    }
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    auto sol = c->lattice.solve(std::move(t));
    if (!sol) {
        r.status = MemberStatus::Unknown;
        return r;
    }
    KVirtualChar w(f);
    for (const auto& [id, coef] : *sol) w.add(c->generators[id], coef);
    if (branch(w) != target) throw std::logic_error("lattice_member: witness does not reproduce the target");
    r.status = MemberStatus::Member;
    r.witness = std::move(w);
    return r;
}

}  // namespace branchkit
