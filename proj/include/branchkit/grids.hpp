#pragma once

// Enumerators for the finite weight grids used by scans and test suites.

#include <vector>

#include "branchkit/weights.hpp"

namespace branchkit {

// Nonincreasing integer vectors of length k with entries in [lo, hi],
// lexicographically ascending.
std::vector<std::vector<int>> nonincreasing_vectors(int k, int lo, int hi);

// SU(m,n) families with m + n <= max_total (both orders of m, n).
std::vector<GroupFamily> su_families(int max_total);

// Canonical SU weights (last lambda'' entry 0) with all entries in [-bound, bound].
std::vector<KWeight> su_weights(const GroupFamily& f, int bound);
// SU weights with both lambda' and lambda'' entries in [-bound, bound], no shift reduction.
std::vector<KWeight> su_weights_box(const GroupFamily& f, int bound);

// SO_0(2,2n) weights with |lambda_i| <= bound and p in [p_lo, p_hi].
std::vector<KWeight> soe_weights(int n, int bound, int p_lo, int p_hi);

// SO*(2n) weights with entries in [-bound, bound].
std::vector<KWeight> sostar_weights(int n, int bound);

}  // namespace branchkit
