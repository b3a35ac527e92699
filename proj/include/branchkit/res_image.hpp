#pragma once

// Membership in the image of restriction K^0(K) -> K^0(K_M).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "branchkit/virtual_char.hpp"

namespace branchkit {

enum class MemberStatus { Member, NonMember, Unknown };

std::string to_string(MemberStatus s);

// A vanishing functional on the image that the target violates.
struct Certificate {
    std::string functional;  // "parity" (SOe) or "invariant_I" (SU(3,2))
    std::vector<int> mu;     // SOe: the SO(2n-2)-part with mu_{n-1} > 0
    int parity = 0;          // SOe: parity class of q
    Integer value;
};

struct MembershipResult {
    MemberStatus status = MemberStatus::Unknown;
    std::optional<KVirtualChar> witness;   // Member: branch(witness) == target
    std::optional<Certificate> certificate;
    int radius = 0;                        // Unknown from lattice_member
};

// SU(3,2): I(tau_{mu',mu'',p}) = a + b + a^2 - b^2 with a = mu'_1+mu''-p, b = mu'_2+mu''-p.
Integer invariant_I(const KMLabel& label);
Integer invariant_I(const VirtualChar& vc);

// SO_0(2,2n): exact decision. Member results carry a constructive preimage.
MembershipResult member_soe(const VirtualChar& vc);

// SU(m,1) or SU(1,n): explicit preimage under branch.
KVirtualChar preimage_su1n(const KMLabel& label);
KVirtualChar preimage_su1n(const VirtualChar& vc);

// Bounded search: generators are the canonical K-weights with all entries in
// [-B, B], B = (max |coordinate| over the target support) + radius. Never
// returns NonMember. Throws resource_error when the generator count exceeds
// max_generators().
MembershipResult lattice_member(const VirtualChar& target, int radius);

std::vector<KWeight> lattice_generators(const GroupFamily& f, int bound);
int lattice_bound(const VirtualChar& target, int radius);

// Read from BRANCHKIT_MAX_GENERATORS (default 40000).
std::size_t max_generators();

// Drops cached lattice bases.
void clear_lattice_cache();

}  // namespace branchkit
