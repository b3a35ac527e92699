#pragma once

// Closed-form restriction maps K^0(K) -> K^0(K_M).

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "branchkit/virtual_char.hpp"

namespace branchkit {

// Data of one SO(2n-2)-part mu in the SO_0(2,2n) branching law.
struct BranchTermSOE {
    std::vector<int> mu;
    std::vector<int> ell;           // ell_1 .. ell_{n-1}, all >= 0
    int ell_n = 0;                  // sgn(lambda_n) sgn(mu_{n-1}) min(|lambda_n|, |mu_{n-1}|)
    int ell_total = 0;              // sum of ell_1 .. ell_{n-1}
    std::vector<std::int64_t> m;    // m(0) .. m(ell_total)
};

using RawTerm = std::pair<KMLabel, Integer>;

// Terms exactly as the law produces them (uncanonicalized, lexicographically
// descending in mu / nu).
std::vector<RawTerm> branch_raw(const KWeight& w);

VirtualChar branch(const KWeight& w);

// Throws not_in_support_error when mu is outside the interlacing window.
BranchTermSOE branch_terms_soe(const KWeight& w, std::span<const int> mu);

// SO*(2n): the middle rows mu with nu <= mu <= lambda form a box with these
// side lengths; the SU(2) content of the nu-isotypic part is the tensor product
// of the strings of dimension side+1. Throws not_in_support_error outside the window.
std::vector<int> sostar_sides(std::span<const int> lambda, std::span<const int> nu);

// Top SU(2) label lambda_1 - sum |lambda_i - nu_{i-1}| - lambda_n (the sum of the sides).
// It occurs with multiplicity one; lower labels top-2k follow Clebsch-Gordan.
int sostar_p(std::span<const int> lambda, std::span<const int> nu);

// All mu in the SO_0(2,2n) window of lambda', lexicographically descending.
std::vector<std::vector<int>> soe_window(std::span<const int> lambda);

// Extend branch Z-linearly.
VirtualChar branch(const KVirtualChar& vc);

}  // namespace branchkit
