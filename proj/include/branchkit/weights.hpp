#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "branchkit/family.hpp"

namespace branchkit {

// Highest weight of an irreducible K-representation.
//
// Coordinates are stored flat, per family:
//   SU(m,n)   [lambda'_1..lambda'_m, lambda''_1..lambda''_n]
//   SO_0(2,2n) [p, lambda_1..lambda_n]
//   SO*(2n)   [lambda_1..lambda_n]
// SU weights differing by a simultaneous shift of all entries are the same
// representation; comparison is on canonical forms (last lambda'' entry 0).
class KWeight {
public:
    static KWeight su(const GroupFamily& f, std::vector<int> lambda1, std::vector<int> lambda2);
    static KWeight soe(const GroupFamily& f, int p, std::vector<int> lambda);
    static KWeight sostar(const GroupFamily& f, std::vector<int> lambda);
    static KWeight from_coords(const GroupFamily& f, std::vector<int> coords);

    const GroupFamily& family() const noexcept { return family_; }
    std::span<const int> coords() const noexcept { return coords_; }

    std::span<const int> lambda1() const;  // SU
    std::span<const int> lambda2() const;  // SU
    int p() const;                         // SOe
    std::span<const int> lambda() const;   // SOe (lambda'), SOstar

    std::string str() const;

    friend bool operator==(const KWeight& a, const KWeight& b);
    friend std::strong_ordering operator<=>(const KWeight& a, const KWeight& b);

private:
    KWeight(GroupFamily f, std::vector<int> c) : family_(f), coords_(std::move(c)) {}

    GroupFamily family_;
    std::vector<int> coords_;
};

// Highest weight of an irreducible K_M-representation.
//
// Coordinates, per family:
//   SU(m,n)   [mu'_1..mu'_{m-1}, mu''_1..mu''_{n-1}, p]
//   SO_0(2,2n) [q, mu_1..mu_{n-1}]
//   SO*(2n)   [nu_1..nu_{n-2}, p]     (p >= 0 is the SU(2) label)
// SU labels are identified along (mu'+k, mu''+k, p+2k).
class KMLabel {
public:
    static KMLabel su(const GroupFamily& f, std::vector<int> mu1, std::vector<int> mu2, int p);
    static KMLabel soe(const GroupFamily& f, int q, std::vector<int> mu);
    static KMLabel sostar(const GroupFamily& f, std::vector<int> nu, int p);
    static KMLabel from_coords(const GroupFamily& f, std::vector<int> coords);

    const GroupFamily& family() const noexcept { return family_; }
    std::span<const int> coords() const noexcept { return coords_; }

    std::span<const int> mu1() const;  // SU
    std::span<const int> mu2() const;  // SU
    int p() const;                     // SU, SOstar
    int q() const;                     // SOe
    std::span<const int> mu() const;   // SOe
    std::span<const int> nu() const;   // SOstar

    std::string str() const;

    friend bool operator==(const KMLabel& a, const KMLabel& b);
    friend std::strong_ordering operator<=>(const KMLabel& a, const KMLabel& b);

private:
    KMLabel(GroupFamily f, std::vector<int> c) : family_(f), coords_(std::move(c)) {}

    GroupFamily family_;
    std::vector<int> coords_;
};

// Unique representative of the shift class; SOe and SO* labels are returned as is.
KMLabel canonical_km(const KMLabel& label);
KWeight canonical_k(const KWeight& w);

// SU only: (mu'+k, mu''+k, p+2k). Identity on the other families.
KMLabel shift_km(const KMLabel& label, int k);

// Label whose coordinates are the sum of the two (tensor with a character).
KMLabel add_labels(const KMLabel& a, const KMLabel& b);

// Trivial K_M / K representation.
KMLabel trivial_km(const GroupFamily& f);
KWeight trivial_k(const GroupFamily& f);

// lam_1 >= mu_1 >= lam_2 >= ... >= mu_{k-1} >= lam_k.
bool interlaces(std::span<const int> lam, std::span<const int> mu);

bool is_nonincreasing(std::span<const int> v);
// v_1 >= ... >= v_{k-1} >= |v_k|; any single entry is allowed.
bool is_type_d_dominant(std::span<const int> v);

// Nonincreasing nonnegative parts, trailing zeros dropped.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept;  // |x|
    int length() const noexcept { return static_cast<int>(parts_.size()); }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& p);

}  // namespace branchkit
