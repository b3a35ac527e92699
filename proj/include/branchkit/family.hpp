#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace branchkit {

enum class FamilyKind { SU, SOe, SOstar };

// One of the three Hermitian families with a unique class of maximal cuspidal
// parabolics: SU(m,n), SO_0(2,2n) and SO*(2n).
class GroupFamily {
public:
    static GroupFamily su(int m, int n);
    static GroupFamily soe(int n);
    static GroupFamily sostar(int n);

    // Accepts "su:3,2", "soe:2", "sostar:5".
    static GroupFamily parse(std::string_view text);

    FamilyKind kind() const noexcept { return kind_; }
    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }

    bool is_su() const noexcept { return kind_ == FamilyKind::SU; }
    bool is_soe() const noexcept { return kind_ == FamilyKind::SOe; }
    bool is_sostar() const noexcept { return kind_ == FamilyKind::SOstar; }

    // Number of integer coordinates of a K-weight / K_M-label.
    int k_size() const noexcept;
    int km_size() const noexcept;

    std::string str() const;
    std::string display_name() const;

    auto operator<=>(const GroupFamily&) const = default;

private:
    GroupFamily(FamilyKind kind, int m, int n) : kind_(kind), m_(m), n_(n) {}

    FamilyKind kind_;
    int m_;
    int n_;
};

}  // namespace branchkit
