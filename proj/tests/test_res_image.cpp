#include "test_support.hpp"

#include <random>

#include "branchkit/branching.hpp"
#include "branchkit/grids.hpp"
#include "branchkit/res_image.hpp"

using namespace branchkit;

namespace {

const GroupFamily F32 = GroupFamily::su(3, 2);

KMLabel su32(int a, int b, int c, int p) { return KMLabel::su(F32, {a, b}, {c}, p); }

MembershipResult hnf_oracle(const VirtualChar& target) { return lattice_member(target, 3); }

}  // namespace

TEST_CASE("invariant I") {
    CHECK(invariant_I(su32(0, 0, 0, 0)) == 0);
    CHECK(invariant_I(su32(1, 0, 0, 0)) == 2);
    CHECK(invariant_I(branch(KWeight::su(F32, {1, 0, 0}, {0, 0}))) == 0);
    CHECK_THROWS_AS(invariant_I(VirtualChar(GroupFamily::su(2, 2))), family_error);
}

TEST_CASE("invariant I vanishes on the image") {
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int it = 0; it < 100; ++it) {
        std::vector<int> a{d(rng), d(rng), d(rng)}, b{d(rng), d(rng)};
        std::sort(a.rbegin(), a.rend());
        std::sort(b.rbegin(), b.rend());
        CHECK(invariant_I(branch(KWeight::su(F32, a, b))) == 0);
    }
}

TEST_CASE("invariant I is linear and shift invariant") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int it = 0; it < 100; ++it) {
        int x = d(rng), y = d(rng);
        auto raw = KMLabel::su(F32, {std::max(x, y), std::min(x, y)}, {d(rng)}, d(rng));
        for (int k = -3; k <= 3; ++k) {
            auto s = shift_km(raw, k);
            CHECK(invariant_I(s) == invariant_I(raw));
        }
        auto other = su32(2, 1, 0, d(rng));
        VirtualChar v(F32);
        v.add(raw, 3);
        v.add(other, -2);
        CHECK(invariant_I(v) == 3 * invariant_I(raw) - 2 * invariant_I(other));
    }
}

TEST_CASE("member_soe examples") {
    auto g4 = GroupFamily::soe(4);
    for (int q = -3; q <= 3; ++q) {
        auto r = member_soe(VirtualChar(g4, KMLabel::soe(g4, q, {1, 0, 0})));
        CHECK(r.status == MemberStatus::Member);
        REQUIRE(r.witness);
        CHECK(branch(*r.witness) == VirtualChar(g4, KMLabel::soe(g4, q, {1, 0, 0})));
    }
    auto g = GroupFamily::soe(3);
    for (int q = -2; q <= 2; ++q)
        for (int s = -4; s <= 4; ++s) {
            VirtualChar v(g);
            v.add(KMLabel::soe(g, q + s, {1, 1}), 1);
            v.add(KMLabel::soe(g, q - s, {1, -1}), 1);
            auto r = member_soe(v);
            CHECK(r.status == MemberStatus::Member);
            CHECK(branch(*r.witness) == v);
        }
    auto r = member_soe(VirtualChar(g, KMLabel::soe(g, 0, {1, 1})));
    CHECK(r.status == MemberStatus::NonMember);
    REQUIRE(r.certificate);
    CHECK(r.certificate->mu == std::vector<int>{1, 1});
    CHECK(r.certificate->parity == 0);
    CHECK(r.certificate->value == 1);
    CHECK(hnf_oracle(VirtualChar(g, KMLabel::soe(g, 0, {1, 1}))).status == MemberStatus::Unknown);
    CHECK_THROWS_AS(member_soe(VirtualChar(F32)), family_error);
}

TEST_CASE("member_soe accepts every branched weight") {
    for (int n : {2, 3})
        for (const auto& w : soe_weights(n, 3, -2, 2 * n + 2)) {
            auto b = branch(w);
            auto r = member_soe(b);
            CHECK_MESSAGE(r.status == MemberStatus::Member, w.str());
        }
}

TEST_CASE("member_soe agrees with the lattice oracle") {
    std::mt19937 rng(33);
    std::uniform_int_distribution<int> d(-3, 3), size(1, 6), coef(-2, 2);
    int members = 0;
    for (int n : {2, 3}) {
        auto g = GroupFamily::soe(n);
        for (int it = 0; it < 50; ++it) {
            VirtualChar v(g);
            const int k = size(rng);
            for (int t = 0; t < k; ++t) {
                std::vector<int> mu(n - 1);
                for (auto& x : mu) x = std::abs(d(rng)) ;
                std::sort(mu.rbegin(), mu.rend());
                if (d(rng) < 0) mu.back() = -mu.back();
                v.add(KMLabel::soe(g, d(rng), mu), coef(rng));
            }
            // pair up half of the samples so both outcomes occur
            const VirtualChar base = v;
            if (it % 2 == 0)
                for (const auto& [l, c] : base.terms()) {
                    std::vector<int> mu(l.mu().begin(), l.mu().end());
                    if (mu.back() == 0) continue;
                    mu.back() = -mu.back();
                    v.add(KMLabel::soe(g, l.q() + 2 * (d(rng) % 2), mu), c);
                }
            auto exact = member_soe(v);
            auto lat = lattice_member(v, 1);
            if (exact.status == MemberStatus::Member) {
                ++members;
                CHECK_MESSAGE(lat.status == MemberStatus::Member, v.str());
            } else {
                CHECK(exact.status == MemberStatus::NonMember);
                CHECK_MESSAGE(lat.status == MemberStatus::Unknown, v.str());
            }
        }
    }
    CHECK(members > 10);
}

TEST_CASE("preimage_su1n") {
    auto f3 = GroupFamily::su(3, 1);
    auto t = preimage_su1n(KMLabel::su(f3, {0, 0}, {}, 0));
    CHECK(t == KVirtualChar(f3, trivial_k(f3)));
    auto f2 = GroupFamily::su(2, 1);
    CHECK(preimage_su1n(KMLabel::su(f2, {1}, {}, 1)) == KVirtualChar(f2, KWeight::su(f2, {1, 1}, {0})));
    KVirtualChar e(f3);
    e.add(KWeight::su(f3, {1, 0, 0}, {0}), 1);
    e.add(KWeight::su(f3, {-1, -1, -1}, {0}), -1);
    CHECK(preimage_su1n(KMLabel::su(f3, {1, 0}, {}, 0)) == e);
    CHECK_THROWS_AS(preimage_su1n(KMLabel::su(F32, {0, 0}, {0}, 0)), family_error);
}

TEST_CASE("preimage_su1n round trips") {
    for (auto f : {GroupFamily::su(2, 1), GroupFamily::su(3, 1), GroupFamily::su(1, 2), GroupFamily::su(1, 3)}) {
        const int len = f.n() == 1 ? f.m() - 1 : f.n() - 1;
        for (const auto& mu : nonincreasing_vectors(len, 0, 4)) {
            if (mu.back() != 0) continue;
            int l = 0;
            for (int x : mu) l += x;
            if (l > 4) continue;
            for (int p = -4; p <= 4; ++p) {
                auto label = f.n() == 1 ? KMLabel::su(f, mu, {}, p) : KMLabel::su(f, {}, mu, p);
                CHECK(branch(preimage_su1n(label)) == VirtualChar(f, label));
            }
        }
    }
}

TEST_CASE("lattice_member") {
    for (const auto& w : {KWeight::su(F32, {1, 0, 0}, {1, 0}), KWeight::su(F32, {2, 0, -1}, {0, 0})}) {
        auto r = lattice_member(branch(w), 0);
        CHECK(r.status == MemberStatus::Member);
        CHECK(branch(*r.witness) == branch(w));
    }
    auto f = GroupFamily::su(2, 1);
    for (int a = -2; a <= 2; ++a)
        for (int p = -2; p <= 2; ++p) {
            auto r = lattice_member(VirtualChar(f, KMLabel::su(f, {a}, {}, p)), 3);
            CHECK(r.status == MemberStatus::Member);
        }
    CHECK(lattice_member(VirtualChar(F32, su32(1, 0, 0, 0)), 2).status == MemberStatus::Unknown);
    CHECK(lattice_member(VirtualChar(F32), 0).status == MemberStatus::Member);
}

TEST_CASE("lattice cap") {
    setenv("BRANCHKIT_MAX_GENERATORS", "10", 1);
    clear_lattice_cache();
    CHECK_THROWS_AS(lattice_member(VirtualChar(F32, su32(1, 0, 0, 0)), 3), resource_error);
    unsetenv("BRANCHKIT_MAX_GENERATORS");
}
