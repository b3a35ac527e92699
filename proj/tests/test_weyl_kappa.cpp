#include "test_support.hpp"

#include "branchkit/char_engine.hpp"
#include "branchkit/grids.hpp"
#include "branchkit/weyl_kappa.hpp"

using namespace branchkit;

namespace {

std::vector<KWeight> sample_weights(const GroupFamily& f) {
    switch (f.kind()) {
        case FamilyKind::SU: return su_weights(f, 2);
        case FamilyKind::SOe: return soe_weights(f.n(), 2, -2, 2 * f.n() + 2);
        case FamilyKind::SOstar: return sostar_weights(f.n(), 2);
    }
    return {};
}

std::vector<GroupFamily> families() {
    auto out = su_families(5);
    for (int n : {2, 3, 4}) out.push_back(GroupFamily::soe(n));
    for (int n : {3, 4, 5}) out.push_back(GroupFamily::sostar(n));
    return out;
}

}  // namespace

TEST_CASE("W_kappa cardinalities") {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n)
            if (m + n >= 3) CHECK(enum_wkappa(GroupFamily::su(m, n)).size() == static_cast<size_t>(m * n));
    for (int n = 2; n <= 7; ++n) CHECK(enum_wkappa(GroupFamily::soe(n)).size() == static_cast<size_t>(2 * n));
    for (int n = 3; n <= 7; ++n)
        CHECK(enum_wkappa(GroupFamily::sostar(n)).size() == static_cast<size_t>(n * (n - 1) / 2));
    CHECK(enum_wkappa(GroupFamily::su(3, 2)).size() == 6);
    CHECK(enum_wkappa(GroupFamily::sostar(5)).size() == 10);
}

TEST_CASE("weyl_terms examples") {
    auto f = GroupFamily::su(3, 2);
    auto t = weyl_terms(KWeight::su(f, {2, 1, 0}, {1, 0}));
    CHECK(t[0].elem == WeylElem{1, 1, 0});
    CHECK(t[0].label == KMLabel::su(f, {1, 0}, {-1}, 4));
    CHECK(t[0].c_hat == 4);
    CHECK(t[0].sign == 1);

    for (int n = 2; n <= 4; ++n) {
        auto g = GroupFamily::soe(n);
        for (int p = -2; p <= 4; ++p) {
            auto s = weyl_terms(KWeight::soe(g, p, std::vector<int>(n, 0)));
            CHECK(s[0].elem == WeylElem{1, 0, 1});
            CHECK(s[0].label == KMLabel::soe(g, p, std::vector<int>(n - 1, 0)));
            CHECK(s[0].c_hat == -p + 2 * n - 1);
        }
    }
    for (int n = 3; n <= 6; ++n) {
        auto h = GroupFamily::sostar(n);
        auto s = weyl_terms(trivial_k(h));
        CHECK(s[0].elem == WeylElem{1, 2, 0});
        CHECK(s[0].label == KMLabel::sostar(h, std::vector<int>(n - 2, 0), 0));
        CHECK(s[0].c_hat == 2 * n - 3);
        CHECK(s[0].sign == 1);
    }
}

TEST_CASE("closed-form terms agree with the explicit Weyl action") {
    for (const auto& f : families()) {
        for (const auto& w : sample_weights(f)) {
            for (const auto& t : weyl_terms(w)) {
                const auto lw = lambda_w(w, t.elem);
                const auto r = restrict_weight(f, lw);
                REQUIRE_MESSAGE(is_dominant(km_shape(f), r), w.str() << " " << t.elem.str(f));
                CHECK(t.label == KMLabel::from_coords(f, r));
                CHECK(t.c_hat == c_hat_from_weight(f, lw));
                // w_2^{(j)} is a cycle of length n-j+1; the (-1)^{i+j} convention differs
                // from the determinant by the uniform factor (-1)^{n-1}
                const int uniform = f.is_su() && f.n() % 2 == 0 ? -1 : 1;
                CHECK_MESSAGE(t.sign == uniform * weyl_sign(f, t.elem), f.str());
            }
        }
    }
}

TEST_CASE("SOe pairing and c_hat degeneracy") {
    for (int n : {2, 3, 4}) {
        for (const auto& w : soe_weights(n, 3, -2, 2 * n + 2)) {
            const auto t = weyl_terms(w);
            const auto lam = w.lambda();
            for (int i = 1; i <= n; ++i) {
                const auto& plus = t[2 * (i - 1)];
                const auto& minus = t[2 * (i - 1) + 1];
                REQUIRE(plus.elem.delta == 1);
                REQUIRE(minus.elem.delta == -1);
                auto mu = plus.label.mu();
                auto mus = minus.label.mu();
                CHECK(std::equal(mu.begin(), mu.end() - 1, mus.begin()));
                CHECK(mu.back() == -mus.back());
                const int q = w.p() - n + 1, s = lam[i - 1] + n - i;
                CHECK(plus.label.q() == q + s);
                CHECK(minus.label.q() == q - s);
                CHECK(plus.sign == minus.sign);
                const bool same = std::abs(plus.c_hat) == std::abs(minus.c_hat);
                CHECK(same == (lam[i - 1] == -(n - i) || w.p() == n));
            }
        }
    }
}

TEST_CASE("p~ and its exterior algebra") {
    auto f = GroupFamily::su(3, 2);
    CHECK(*ptilde_ev(f) == KMLabel::su(f, {1, 0}, {-1}, 0));
    auto g = GroupFamily::soe(3);
    CHECK(*ptilde_ev(g) == KMLabel::soe(g, -2, {0, 0}));
    auto h = GroupFamily::sostar(5);
    CHECK(*ptilde_ev(h) == KMLabel::sostar(h, {1, 1, 0}, 0));
    CHECK_FALSE(ptilde_ev(GroupFamily::sostar(3)).has_value());
    CHECK_FALSE(ptilde_ev(GroupFamily::su(3, 1)).has_value());
    CHECK_FALSE(ptilde_ev(GroupFamily::su(1, 3)).has_value());

    VirtualChar e(g);
    e.add(KMLabel::soe(g, 0, {0, 0}), 1);
    e.add(KMLabel::soe(g, -2, {0, 0}), -1);
    CHECK(lambda_alt_sum(g) == e);

    VirtualChar s(f);
    s.add(KMLabel::su(f, {0, 0}, {0}, 0), 1);
    s.add(KMLabel::su(f, {1, 0}, {-1}, 0), -1);
    s.add(KMLabel::su(f, {1, 1}, {-2}, 0), 1);
    CHECK(lambda_alt_sum(f) == s);

    auto h4 = GroupFamily::sostar(4);
    VirtualChar x(h4);
    x.add(KMLabel::sostar(h4, {0, 0}, 0), 1);
    x.add(KMLabel::sostar(h4, {1, 1}, 0), -1);
    CHECK(lambda_alt_sum(h4) == x);

    for (int m = 2; m <= 5; ++m)
        for (int n = 2; n <= 3; ++n) {
            auto u = GroupFamily::su(m, n);
            CHECK(lambda_alt_sum(u) == lambda_alt_sum_su_formula(u));
        }
}

TEST_CASE("exterior powers of p~ have total dimension 2^dim") {
    for (const auto& f : families()) {
        auto p = ptilde_ev(f);
        if (!p) continue;
        const int d = static_cast<int>(km_dimension(*p));
        Integer total = 0;
        for (int j = 0; j <= d; ++j) total += dimension(exterior_label(*p, j));
        CHECK(total == Integer(1) << d);
        CHECK(exterior_label(*p, d + 1).empty());
    }
}
