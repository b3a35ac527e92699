#pragma once

// The Ansatz sum grouped by |c_hat|, and the good-weight classifier.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "branchkit/res_image.hpp"
#include "branchkit/weyl_kappa.hpp"

namespace branchkit {

struct CGroup {
    std::int64_t key = 0;  // |c_hat|
    VirtualChar sum;       // sum of sign * W_{lambda_w} over the members
    std::vector<WeylElem> members;
};

// Groups of weyl_terms(w) by |c_hat|, keys descending.
std::vector<CGroup> star_groups(const KWeight& w);

// The virtual K_M-representation whose membership decides the group: the
// group sum, twisted by tau_{0,1,-1} for SU(3,2). The group sum tensored with
// lambda_alt_sum lies in the image for every weight tried, so it is not used.
VirtualChar group_target(const GroupFamily& f, const CGroup& g);

enum class VerdictStatus { Good, NotGood, Unknown };

std::string to_string(VerdictStatus s);

struct GroupCheck {
    std::int64_t key = 0;
    MembershipResult membership;
    std::optional<Integer> invariant;  // SU(3,2)
};

struct Verdict {
    VerdictStatus status = VerdictStatus::Unknown;
    std::optional<std::int64_t> key;         // NotGood: the failing group
    std::optional<Certificate> certificate;  // NotGood
    std::string reason;
    std::vector<CGroup> groups;
    std::vector<GroupCheck> checks;  // one per group, same order
};

struct AnsatzOptions {
    int radius = 1;         // lattice route
    bool witnesses = false; // SU(1,n): attach preimages
};

// Verdict for the weights of SU(m,n), SO_0(2,2n) and SO*(2n).
Verdict is_good(const KWeight& w, const AnsatzOptions& opts = {});

// SOe only: the per-index criterion on the (delta_+, i), (delta_-, i) pairs.
bool soe_pair_criterion(const KWeight& w);

// SU(m,2): sum_j (-1)^(j-1) branch(pi_{(1)_j,(0,-j)}) == lambda_alt_sum twisted by tau_{0,-1,1}.
bool verify_telescoping(int m);

struct ExploreRow {
    KWeight lambda;
    std::vector<CGroup> groups;
    std::vector<MemberStatus> statuses;
    VerdictStatus verdict = VerdictStatus::Unknown;
};

// Dominant SO*(2n) weights with entries in [-bound, bound], in ascending order.
std::vector<ExploreRow> explore_sostar(int n, int bound, int radius, int jobs = 1,
                                       const std::function<void(const ExploreRow&)>& sink = {});

// is_good over a list of weights, in input order.
std::vector<Verdict> scan(const std::vector<KWeight>& weights, const AnsatzOptions& opts, int jobs = 1,
                          const std::function<void(const KWeight&, const Verdict&)>& sink = {});

}  // namespace branchkit
