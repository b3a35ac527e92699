#pragma once

// The coset representatives W_kappa, the shifted weights lambda_w, their
// restricted labels, signs and c_hat values, and the exterior algebra of
// p~_+^[ev].

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "branchkit/virtual_char.hpp"

namespace branchkit {

// SU: (i, j), 1 <= i <= m, 1 <= j <= n.
// SOe: (delta, i) with delta = +1 / -1, 1 <= i <= n (j unused).
// SO*: (i, j), 1 <= i < j <= n.
struct WeylElem {
    int i = 0;
    int j = 0;
    int delta = 0;

    std::string str(const GroupFamily& f) const;
    auto operator<=>(const WeylElem&) const = default;
};

struct WeylTerm {
    WeylElem elem;
    int sign = 1;
    KMLabel label;          // canonical W_{lambda_w}
    std::int64_t c_hat = 0; // positive normalization dropped
};

std::vector<WeylElem> enum_wkappa(const GroupFamily& f);

// Terms in enum_wkappa order, from the closed-form label and c_hat formulas.
std::vector<WeylTerm> weyl_terms(const KWeight& w);

// w(lambda + rho_c) - rho_c as a K-torus weight, computed by letting the
// permutation (and sign changes) act on coordinates.
std::vector<int> lambda_w(const KWeight& w, const WeylElem& e);
// Determinant of the linear action of e on the torus.
int weyl_sign(const GroupFamily& f, const WeylElem& e);
// c_hat from lambda_w: rho_Q(X_kappa) - i lambda_w(H_kappa).
std::int64_t c_hat_from_weight(const GroupFamily& f, const std::vector<int>& lw);

// Sum over all terms of sign * label.
VirtualChar weyl_sum(const KWeight& w);

// The K_M-representation p~_+^[ev]; empty when it is the zero space
// (SU(m,1), SU(1,n), SO*(6)).
std::optional<KMLabel> ptilde_ev(const GroupFamily& f);

// sum_j (-1)^j Lambda^j p~_+^[ev], from exterior_decompose.
VirtualChar lambda_alt_sum(const GroupFamily& f);
// SU only: the same sum from the conjugate-partition rule.
VirtualChar lambda_alt_sum_su_formula(const GroupFamily& f);

}  // namespace branchkit
