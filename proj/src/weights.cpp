#include "branchkit/weights.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "branchkit/errors.hpp"

namespace branchkit {

namespace {

std::string join(std::span<const int> v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

void require_length(std::span<const int> v, int len, const char* what) {
    if (static_cast<int>(v.size()) != len)
        throw validation_error(std::string(what) + " has length " + std::to_string(v.size()) +
                               ", expected " + std::to_string(len));
}

void require_nonincreasing(std::span<const int> v, const char* what) {
    if (!is_nonincreasing(v))
        throw validation_error(std::string(what) + " " + join(v) + " is not nonincreasing");
}

void require_type_d(std::span<const int> v, const char* what) {
    if (!is_type_d_dominant(v))
        throw validation_error(std::string(what) + " " + join(v) +
                               " violates v_1 >= ... >= v_{k-1} >= |v_k|");
}

void validate_k(const GroupFamily& f, std::span<const int> c) {
    require_length(c, f.k_size(), "K-weight");
    switch (f.kind()) {
        case FamilyKind::SU:
            require_nonincreasing(c.subspan(0, f.m()), "lambda'");
            require_nonincreasing(c.subspan(f.m()), "lambda''");
            break;
        case FamilyKind::SOe: require_type_d(c.subspan(1), "lambda'"); break;
        case FamilyKind::SOstar: require_nonincreasing(c, "lambda"); break;
    }
}

void validate_km(const GroupFamily& f, std::span<const int> c) {
    require_length(c, f.km_size(), "K_M-label");
    switch (f.kind()) {
        case FamilyKind::SU:
            require_nonincreasing(c.subspan(0, f.m() - 1), "mu'");
            require_nonincreasing(c.subspan(f.m() - 1, f.n() - 1), "mu''");
            break;
        case FamilyKind::SOe: require_type_d(c.subspan(1), "mu"); break;
        case FamilyKind::SOstar:
            require_nonincreasing(c.subspan(0, f.n() - 2), "nu");
            if (c.back() < 0)
                throw validation_error("SU(2) label p = " + std::to_string(c.back()) +
                                       " must be nonnegative");
            break;
    }
}

void require(bool ok, const char* what) {
    if (!ok) throw family_error(what);
}

}  // namespace

bool is_nonincreasing(std::span<const int> v) {
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] < v[i]) return false;
    return true;
}

bool is_type_d_dominant(std::span<const int> v) {
    if (v.size() <= 1) return true;
    for (size_t i = 1; i + 1 < v.size(); ++i)
        if (v[i - 1] < v[i]) return false;
    return v[v.size() - 2] >= std::abs(v.back());
}

bool interlaces(std::span<const int> lam, std::span<const int> mu) {
    if (lam.empty() || mu.size() + 1 != lam.size())
        throw validation_error("interlaces: lengths " + std::to_string(lam.size()) + " and " +
                               std::to_string(mu.size()) + " are not k and k-1");
    for (size_t i = 0; i < mu.size(); ++i)
        if (!(lam[i] >= mu[i] && mu[i] >= lam[i + 1])) return false;
    return true;
}

// ---- KWeight ----

KWeight KWeight::su(const GroupFamily& f, std::vector<int> lambda1, std::vector<int> lambda2) {
    require(f.is_su(), "KWeight::su on a non-SU family");
    require_length(lambda1, f.m(), "lambda'");
    require_length(lambda2, f.n(), "lambda''");
    std::vector<int> c = std::move(lambda1);
    c.insert(c.end(), lambda2.begin(), lambda2.end());
    return from_coords(f, std::move(c));
}

KWeight KWeight::soe(const GroupFamily& f, int p, std::vector<int> lambda) {
    require(f.is_soe(), "KWeight::soe on a non-SOe family");
    std::vector<int> c{p};
    c.insert(c.end(), lambda.begin(), lambda.end());
    return from_coords(f, std::move(c));
}

KWeight KWeight::sostar(const GroupFamily& f, std::vector<int> lambda) {
    require(f.is_sostar(), "KWeight::sostar on a non-SO* family");
    return from_coords(f, std::move(lambda));
}

KWeight KWeight::from_coords(const GroupFamily& f, std::vector<int> coords) {
    validate_k(f, coords);
    return KWeight(f, std::move(coords));
}

std::span<const int> KWeight::lambda1() const {
    require(family_.is_su(), "lambda1 is an SU accessor");
    return std::span<const int>(coords_).subspan(0, family_.m());
}

std::span<const int> KWeight::lambda2() const {
    require(family_.is_su(), "lambda2 is an SU accessor");
    return std::span<const int>(coords_).subspan(family_.m());
}

int KWeight::p() const {
    require(family_.is_soe(), "p is an SOe K-weight accessor");
    return coords_[0];
}

std::span<const int> KWeight::lambda() const {
    if (family_.is_soe()) return std::span<const int>(coords_).subspan(1);
    require(family_.is_sostar(), "lambda is an SOe/SO* accessor");
    return coords_;
}

std::string KWeight::str() const {
    switch (family_.kind()) {
        case FamilyKind::SU: return "pi" + join(lambda1()) + join(lambda2());
        case FamilyKind::SOe: return "pi" + join(lambda()) + ",p=" + std::to_string(p());
        case FamilyKind::SOstar: return "pi" + join(lambda());
    }
    return {};
}

bool operator==(const KWeight& a, const KWeight& b) {
    if (a.family_ != b.family_) return false;
    return canonical_k(a).coords_ == canonical_k(b).coords_;
}

std::strong_ordering operator<=>(const KWeight& a, const KWeight& b) {
    if (auto c = a.family_ <=> b.family_; c != 0) return c;
    return canonical_k(a).coords_ <=> canonical_k(b).coords_;
}

KWeight canonical_k(const KWeight& w) {
    if (!w.family().is_su()) return w;
    int k = -w.coords().back();
    if (k == 0) return w;
    std::vector<int> c(w.coords().begin(), w.coords().end());
    for (int& x : c) x += k;
    return KWeight::from_coords(w.family(), std::move(c));
}

KWeight trivial_k(const GroupFamily& f) {
    return KWeight::from_coords(f, std::vector<int>(f.k_size(), 0));
}

// ---- KMLabel ----

KMLabel KMLabel::su(const GroupFamily& f, std::vector<int> mu1, std::vector<int> mu2, int p) {
    require(f.is_su(), "KMLabel::su on a non-SU family");
    require_length(mu1, f.m() - 1, "mu'");
    require_length(mu2, f.n() - 1, "mu''");
    std::vector<int> c = std::move(mu1);
    c.insert(c.end(), mu2.begin(), mu2.end());
    c.push_back(p);
    return from_coords(f, std::move(c));
}

KMLabel KMLabel::soe(const GroupFamily& f, int q, std::vector<int> mu) {
    require(f.is_soe(), "KMLabel::soe on a non-SOe family");
    std::vector<int> c{q};
    c.insert(c.end(), mu.begin(), mu.end());
    return from_coords(f, std::move(c));
}

KMLabel KMLabel::sostar(const GroupFamily& f, std::vector<int> nu, int p) {
    require(f.is_sostar(), "KMLabel::sostar on a non-SO* family");
    nu.push_back(p);
    return from_coords(f, std::move(nu));
}

KMLabel KMLabel::from_coords(const GroupFamily& f, std::vector<int> coords) {
    validate_km(f, coords);
    return KMLabel(f, std::move(coords));
}

std::span<const int> KMLabel::mu1() const {
    require(family_.is_su(), "mu1 is an SU accessor");
    return std::span<const int>(coords_).subspan(0, family_.m() - 1);
}

std::span<const int> KMLabel::mu2() const {
    require(family_.is_su(), "mu2 is an SU accessor");
    return std::span<const int>(coords_).subspan(family_.m() - 1, family_.n() - 1);
}

int KMLabel::p() const {
    require(!family_.is_soe(), "p is an SU/SO* label accessor");
    return coords_.back();
}

int KMLabel::q() const {
    require(family_.is_soe(), "q is an SOe label accessor");
    return coords_[0];
}

std::span<const int> KMLabel::mu() const {
    require(family_.is_soe(), "mu is an SOe label accessor");
    return std::span<const int>(coords_).subspan(1);
}

std::span<const int> KMLabel::nu() const {
    require(family_.is_sostar(), "nu is an SO* label accessor");
    return std::span<const int>(coords_).subspan(0, family_.n() - 2);
}

std::string KMLabel::str() const {
    switch (family_.kind()) {
        case FamilyKind::SU:
            return "tau" + join(mu1()) + join(mu2()) + "," + std::to_string(p());
        case FamilyKind::SOe: return "tau" + join(mu()) + "," + std::to_string(q());
        case FamilyKind::SOstar: return "tau" + join(nu()) + "," + std::to_string(p());
    }
    return {};
}

bool operator==(const KMLabel& a, const KMLabel& b) {
    if (a.family_ != b.family_) return false;
    return canonical_km(a).coords_ == canonical_km(b).coords_;
}

std::strong_ordering operator<=>(const KMLabel& a, const KMLabel& b) {
    if (auto c = a.family_ <=> b.family_; c != 0) return c;
    return canonical_km(a).coords_ <=> canonical_km(b).coords_;
}

KMLabel shift_km(const KMLabel& label, int k) {
    const auto& f = label.family();
    if (!f.is_su() || k == 0) return label;
    std::vector<int> c(label.coords().begin(), label.coords().end());
    for (size_t i = 0; i + 1 < c.size(); ++i) c[i] += k;
    c.back() += 2 * k;
    return KMLabel::from_coords(f, std::move(c));
}

KMLabel canonical_km(const KMLabel& label) {
    const auto& f = label.family();
    if (!f.is_su()) return label;
    // The last entry of mu'' (or of mu' when n = 1) is pinned to 0.
    int anchor = f.n() >= 2 ? label.coords()[f.m() + f.n() - 3] : label.coords()[f.m() - 2];
    return shift_km(label, -anchor);
}

KMLabel add_labels(const KMLabel& a, const KMLabel& b) {
    if (a.family() != b.family()) throw family_error("add_labels: family mismatch");
    std::vector<int> c(a.coords().begin(), a.coords().end());
    for (size_t i = 0; i < c.size(); ++i) c[i] += b.coords()[i];
    return KMLabel::from_coords(a.family(), std::move(c));
}

KMLabel trivial_km(const GroupFamily& f) {
    return KMLabel::from_coords(f, std::vector<int>(f.km_size(), 0));
}

// ---- Partition ----

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    if (!is_nonincreasing(parts_) || (!parts_.empty() && parts_.back() < 0))
        throw validation_error("partition " + join(parts_) + " is not nonincreasing nonnegative");
}

int Partition::size() const noexcept {
    int s = 0;
    for (int x : parts_) s += x;
    return s;
}

Partition conjugate(const Partition& p) {
    const auto& parts = p.parts();
    if (parts.empty()) return {};
    std::vector<int> out(parts.front(), 0);
    for (int x : parts)
        for (int j = 0; j < x; ++j) ++out[j];
    return Partition(std::move(out));
}

}  // namespace branchkit
