#include "test_support.hpp"

#include <random>

#include "branchkit/virtual_char.hpp"

using namespace branchkit;

TEST_CASE("family bounds") {
    CHECK_THROWS_AS(GroupFamily::su(1, 1), validation_error);
    CHECK_THROWS_AS(GroupFamily::su(0, 3), validation_error);
    CHECK_THROWS_AS(GroupFamily::soe(1), validation_error);
    CHECK_THROWS_AS(GroupFamily::sostar(2), validation_error);
    CHECK(GroupFamily::parse("su:3,2") == GroupFamily::su(3, 2));
    CHECK(GroupFamily::parse("soe:2") == GroupFamily::soe(2));
    CHECK(GroupFamily::parse("sostar:5") == GroupFamily::sostar(5));
    CHECK_THROWS(GroupFamily::parse("sp:4"));
}

TEST_CASE("weight dominance is validated") {
    auto su = GroupFamily::su(3, 2);
    CHECK_THROWS_AS(KWeight::su(su, {0, 1, 0}, {0, 0}), validation_error);
    CHECK_THROWS_AS(KWeight::su(su, {1, 0}, {0, 0}), validation_error);
    auto soe = GroupFamily::soe(3);
    CHECK_NOTHROW(KWeight::soe(soe, 0, {2, 1, -1}));
    CHECK_THROWS_AS(KWeight::soe(soe, 0, {2, 1, -2}), validation_error);
    CHECK_THROWS_AS(KMLabel::sostar(GroupFamily::sostar(4), {0, 0}, -1), validation_error);
    CHECK(KWeight::su(su, {2, 1, 0}, {1, 0}) == KWeight::su(su, {3, 2, 1}, {2, 1}));
}

TEST_CASE("canonical_km") {
    auto f32 = GroupFamily::su(3, 2);
    CHECK(canonical_km(KMLabel::su(f32, {2, 1}, {1}, 5)).coords().back() == 3);
    auto c = canonical_km(KMLabel::su(f32, {2, 1}, {1}, 5));
    CHECK(c.str() == KMLabel::su(f32, {1, 0}, {0}, 3).str());

    auto f21 = GroupFamily::su(2, 1);
    auto d = canonical_km(KMLabel::su(f21, {3}, {}, 1));
    CHECK(d.str() == KMLabel::su(f21, {0}, {}, -5).str());

    auto soe = GroupFamily::soe(3);
    auto e = KMLabel::soe(soe, 2, {1, -1});
    CHECK(canonical_km(e).str() == e.str());
    CHECK_THROWS_AS(KMLabel::soe(soe, 2, {1, -2}), validation_error);
}

TEST_CASE("canonical_km is idempotent and shift invariant") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-3, 3);
    for (auto f : {GroupFamily::su(3, 2), GroupFamily::su(2, 1), GroupFamily::su(1, 3), GroupFamily::su(2, 3)}) {
        for (int it = 0; it < 100; ++it) {
            std::vector<int> a(f.m() - 1), b(f.n() - 1);
            for (auto& x : a) x = d(rng);
            for (auto& x : b) x = d(rng);
            std::sort(a.rbegin(), a.rend());
            std::sort(b.rbegin(), b.rend());
            auto x = KMLabel::su(f, a, b, d(rng));
            auto c = canonical_km(x);
            CHECK(canonical_km(c) == c);
            CHECK(std::ranges::equal(canonical_km(c).coords(), c.coords()));
            for (int k = -3; k <= 3; ++k)
                CHECK(std::ranges::equal(canonical_km(shift_km(x, k)).coords(), c.coords()));
        }
    }
}

TEST_CASE("interlaces") {
    std::vector<int> l{2, 1, 0};
    CHECK(interlaces(l, std::vector<int>{2, 0}));
    CHECK_FALSE(interlaces(l, std::vector<int>{0, 0}));
    CHECK(interlaces(std::vector<int>{1, 1}, std::vector<int>{1}));
    CHECK_THROWS_AS(interlaces(l, std::vector<int>{1}), validation_error);
    for (int c = -5; c <= 5; ++c)
        CHECK(interlaces(std::vector<int>{c, c, c}, std::vector<int>{c, c}));
}

TEST_CASE("partition conjugate") {
    CHECK(conjugate(Partition({3, 1})).parts() == std::vector<int>{2, 1, 1});
    CHECK(conjugate(Partition()).parts().empty());
    CHECK(conjugate(Partition({2, 2})).parts() == std::vector<int>{2, 2});
    CHECK_THROWS_AS(Partition({1, 2}), validation_error);

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> part(0, 8), len(0, 8);
    for (int it = 0; it < 300; ++it) {
        std::vector<int> v(len(rng));
        for (auto& x : v) x = part(rng);
        std::sort(v.rbegin(), v.rend());
        Partition p(v);
        CHECK(conjugate(conjugate(p)) == p);
        CHECK(conjugate(p).size() == p.size());
    }
}

TEST_CASE("virtual characters form a group") {
    auto f = GroupFamily::su(3, 2);
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-3, 3), coef(-50, 50);
    auto random_vc = [&] {
        VirtualChar v(f);
        for (int t = 0; t < 20; ++t) {
            int a = d(rng), b = d(rng);
            v.add(KMLabel::su(f, {std::max(a, b), std::min(a, b)}, {d(rng)}, d(rng)), coef(rng));
        }
        return v;
    };
    for (int it = 0; it < 50; ++it) {
        auto a = random_vc(), b = random_vc();
        CHECK((a + b) - b == a);
        CHECK(a + b == b + a);
        CHECK((a - a).empty());
        CHECK(Integer(3) * a == a + a + a);
        for (const auto& [l, c] : a.terms()) {
            CHECK(c != 0);
            CHECK(std::ranges::equal(canonical_km(l).coords(), l.coords()));
        }
    }
    CHECK_THROWS_AS(VirtualChar(f) + VirtualChar(GroupFamily::su(2, 2)), family_error);
}

TEST_CASE("twist_char") {
    auto f = GroupFamily::su(3, 2);
    VirtualChar v(f, KMLabel::su(f, {1, 0}, {-1}, 4));
    auto t = twist_char(v, KMLabel::su(f, {0, 0}, {1}, -1));
    CHECK(t == VirtualChar(f, KMLabel::su(f, {1, 0}, {0}, 3)));
    CHECK(twist_char(v, trivial_km(f)) == v);
    CHECK_THROWS_AS(twist_char(v, KMLabel::su(f, {1, 0}, {0}, 0)), unsupported_operand_error);

    auto g = GroupFamily::soe(3);
    VirtualChar w(g, KMLabel::soe(g, 5, {2, -1}), Integer(-2));
    CHECK(twist_char(w, KMLabel::soe(g, -2, {0, 0})) == VirtualChar(g, KMLabel::soe(g, 3, {2, -1}), Integer(-2)));
}
