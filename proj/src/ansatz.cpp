#include "branchkit/ansatz.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "branchkit/branching.hpp"
#include "branchkit/errors.hpp"
#include "branchkit/grids.hpp"
#include "branchkit/parallel.hpp"

namespace branchkit {

std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Good: return "good";
        case VerdictStatus::NotGood: return "notgood";
        case VerdictStatus::Unknown: return "unknown";
    }
    return "unknown";
}

std::vector<CGroup> star_groups(const KWeight& w) {
    const auto& f = w.family();
    std::map<std::int64_t, CGroup, std::greater<>> by_key;
    for (const auto& t : weyl_terms(w)) {
        const std::int64_t k = std::abs(t.c_hat);
        auto [it, fresh] = by_key.try_emplace(k, CGroup{k, VirtualChar(f), {}});
        it->second.sum.add(t.label, t.sign);
        it->second.members.push_back(t.elem);
    }
    std::vector<CGroup> out;
    for (auto& [k, g] : by_key) out.push_back(std::move(g));
    return out;
}

namespace {

bool is_su32(const GroupFamily& f) { return f.is_su() && f.m() == 3 && f.n() == 2; }

KMLabel su32_twist(const GroupFamily& f) { return KMLabel::su(f, {0, 0}, {1}, -1); }

}  // namespace

VirtualChar group_target(const GroupFamily& f, const CGroup& g) {
    if (is_su32(f)) return twist_char(g.sum, su32_twist(f));
    return g.sum;
}

bool soe_pair_criterion(const KWeight& w) {
    const auto& f = w.family();
    if (!f.is_soe()) throw family_error("pair criterion is defined for SO_0(2,2n) only");
    const auto terms = weyl_terms(w);
    std::map<int, std::vector<const WeylTerm*>> pairs;
    for (const auto& t : terms) pairs[t.elem.i].push_back(&t);
    for (const auto& [i, pr] : pairs) {
        const bool separate = std::ranges::all_of(pr, [](const WeylTerm* t) { return t->label.mu().back() == 0; });
        const bool same_key = std::abs(pr[0]->c_hat) == std::abs(pr[1]->c_hat);
        if (!separate && !same_key) return false;
    }
    return true;
}

Verdict is_good(const KWeight& w, const AnsatzOptions& opts) {
    const auto& f = w.family();
    Verdict v;
    v.groups = star_groups(w);

    if (f.is_su() && (f.m() == 1 || f.n() == 1)) {
        v.status = VerdictStatus::Good;
        v.reason = "restriction is surjective for real rank one";
        for (const auto& g : v.groups) {
            GroupCheck c{g.key, {}, {}};
            c.membership.status = MemberStatus::Member;
            if (opts.witnesses) c.membership.witness = preimage_su1n(group_target(f, g));
            v.checks.push_back(std::move(c));
        }
        return v;
    }

    if (f.is_soe()) {
        const bool pair_ok = soe_pair_criterion(w);
        bool all_member = true;
        for (const auto& g : v.groups) {
            GroupCheck c{g.key, member_soe(group_target(f, g)), {}};
            if (c.membership.status != MemberStatus::Member && all_member) {
                all_member = false;
                v.key = g.key;
                v.certificate = c.membership.certificate;
            }
            v.checks.push_back(std::move(c));
        }
        if (pair_ok != all_member)
            throw std::logic_error("SO_0(2,2n) pair criterion and parity functionals disagree at " + w.str());
        v.status = pair_ok ? VerdictStatus::Good : VerdictStatus::NotGood;
        const int last = w.lambda().back();
        if (pair_ok) v.reason = last == 0 ? "lambda_n = 0" : "p = n";
        else v.reason = "p != n and lambda_n != 0";
        return v;
    }

    if (is_su32(f)) {
        for (const auto& g : v.groups) {
            GroupCheck c{g.key, {}, invariant_I(group_target(f, g))};
            if (*c.invariant != 0) {
                c.membership.status = MemberStatus::NonMember;
                c.membership.certificate = Certificate{"invariant_I", {}, 0, *c.invariant};
            }
            v.checks.push_back(std::move(c));
        }
        // Smallest key with a nonzero value.
        for (auto it = v.checks.rbegin(); it != v.checks.rend(); ++it) {
            if (*it->invariant != 0) {
                v.key = it->key;
                v.certificate = it->membership.certificate;
                break;
            }
        }
        v.status = v.key ? VerdictStatus::NotGood : VerdictStatus::Unknown;
        v.reason = v.key ? "I = " + v.certificate->value.str() + " at key " + std::to_string(*v.key)
                         : "I vanishes on every group";
        return v;
    }

    bool all_member = true;
    for (const auto& g : v.groups) {
        GroupCheck c{g.key, lattice_member(group_target(f, g), opts.radius), {}};
        all_member = all_member && c.membership.status == MemberStatus::Member;
        v.checks.push_back(std::move(c));
    }
    v.status = all_member ? VerdictStatus::Good : VerdictStatus::Unknown;
    v.reason = all_member ? "every group has a lattice witness"
                          : "no witness within radius " + std::to_string(opts.radius);
    return v;
}

bool verify_telescoping(int m) {
    if (m < 2) throw validation_error("verify_telescoping needs m >= 2");
    const auto f = GroupFamily::su(m, 2);
    VirtualChar lhs(f);
    for (int j = 0; j <= m; ++j) {
        std::vector<int> ones(m, 0);
        std::fill(ones.begin(), ones.begin() + j, 1);
        const auto b = branch(KWeight::su(f, ones, {0, -j}));
        if (j % 2 == 1) lhs += b;
        else lhs -= b;
    }
    const auto rhs = twist_char(lambda_alt_sum(f), KMLabel::su(f, std::vector<int>(m - 1, 0), {-1}, 1));
    return lhs == rhs;
}

std::vector<ExploreRow> explore_sostar(int n, int bound, int radius, int jobs,
                                       const std::function<void(const ExploreRow&)>& sink) {
    if (bound < 0 || radius < 0) throw validation_error("bound and radius must be nonnegative");
    const auto weights = sostar_weights(n, bound);
    const std::function<ExploreRow(const KWeight&)> run = [&](const KWeight& w) {
        const auto v = is_good(w, AnsatzOptions{radius, false});
        ExploreRow row{w, v.groups, {}, v.status};
        for (const auto& c : v.checks) row.statuses.push_back(c.membership.status);
        return row;
    };
    return parallel_map(weights, jobs, run, sink);
}

std::vector<Verdict> scan(const std::vector<KWeight>& weights, const AnsatzOptions& opts, int jobs,
                          const std::function<void(const KWeight&, const Verdict&)>& sink) {
    using Item = std::pair<KWeight, Verdict>;
    const std::function<Item(const KWeight&)> run = [&](const KWeight& w) { return Item{w, is_good(w, opts)}; };
    std::function<void(const Item&)> forward;
    if (sink) forward = [&](const Item& it) { sink(it.first, it.second); };
    auto items = parallel_map(weights, jobs, run, forward);
    std::vector<Verdict> out;
    out.reserve(items.size());
    for (auto& it : items) out.push_back(std::move(it.second));
    return out;
}

}  // namespace branchkit
