#include "test_support.hpp"

#include <random>

#include "branchkit/branching.hpp"
#include "branchkit/char_engine.hpp"
#include "branchkit/grids.hpp"

using namespace branchkit;

TEST_CASE("closed-form examples") {
    for (int m = 2; m <= 4; ++m) {
        auto f = GroupFamily::su(m, 1);
        for (int c = -2; c <= 2; ++c) {
            auto b = branch(KWeight::su(f, std::vector<int>(m, c), {0}));
            CHECK(b == VirtualChar(f, KMLabel::su(f, std::vector<int>(m - 1, c), {}, c)));
        }
    }
    auto f22 = GroupFamily::su(2, 2);
    VirtualChar e(f22);
    e.add(KMLabel::su(f22, {1}, {0}, 0), 1);
    e.add(KMLabel::su(f22, {0}, {0}, 1), 1);
    CHECK(branch(KWeight::su(f22, {1, 0}, {0, 0})) == e);

    auto g = GroupFamily::soe(2);
    for (int p = -2; p <= 2; ++p) {
        VirtualChar x(g);
        x.add(KMLabel::soe(g, p - 1, {0}), 1);
        x.add(KMLabel::soe(g, p + 1, {0}), 1);
        x.add(KMLabel::soe(g, p, {1}), 1);
        x.add(KMLabel::soe(g, p, {-1}), 1);
        CHECK(branch(KWeight::soe(g, p, {1, 0})) == x);
    }

    for (int n = 3; n <= 6; ++n) {
        auto h = GroupFamily::sostar(n);
        std::vector<int> lam(n, 0), z(n - 2, 0), one(n - 2, 0);
        lam[0] = 1;
        one[0] = 1;
        VirtualChar x(h);
        x.add(KMLabel::sostar(h, z, 1), 1);
        x.add(KMLabel::sostar(h, one, 0), 1);
        auto b = branch(KWeight::sostar(h, lam));
        CHECK(b == x);
        CHECK(dimension(b) == n);
    }
}

TEST_CASE("branch_terms_soe") {
    for (int n = 2; n <= 4; ++n) {
        auto g = GroupFamily::soe(n);
        std::vector<int> lam(n, 0), mu(n - 1, 0);
        lam[0] = 1;
        auto t = branch_terms_soe(KWeight::soe(g, 0, lam), mu);
        CHECK(t.ell[0] == 1);
        for (size_t i = 1; i < t.ell.size(); ++i) CHECK(t.ell[i] == 0);
        CHECK(t.ell_n == 0);
        CHECK(t.m == std::vector<std::int64_t>{1, 1});

        auto z = branch_terms_soe(trivial_k(g), mu);
        CHECK(z.ell_total == 0);
        CHECK(z.m == std::vector<std::int64_t>{1});
    }
    auto g = GroupFamily::soe(3);
    CHECK_THROWS_AS(branch_terms_soe(KWeight::soe(g, 0, {1, 0, 0}), std::vector<int>{2, 0}),
                    not_in_support_error);
}

TEST_CASE("multiplicity table symmetry and generating function") {
    std::mt19937 rng(21);
    for (int n = 2; n <= 4; ++n) {
        auto g = GroupFamily::soe(n);
        for (const auto& w : soe_weights(n, 3, 0, 0)) {
            for (const auto& mu : soe_window(w.lambda())) {
                auto t = branch_terms_soe(w, mu);
                const int l = t.ell_total;
                REQUIRE(t.m.size() == static_cast<size_t>(l + 1));
                CHECK(t.m.front() == 1);
                CHECK(t.m.back() == 1);
                std::int64_t mass = 0, prod = 1;
                for (int k = 0; k <= l; ++k) {
                    CHECK(t.m[k] == t.m[l - k]);
                    mass += t.m[k];
                }
                for (int x : t.ell) prod *= x + 1;
                CHECK(mass == prod);

                // Laurent coefficients of prod (X^{l+1}-X^{-l-1})/(X-X^{-1}) = prod sum X^{2k-l}
                std::map<int, std::int64_t> laurent{{0, 1}};
                for (int li : t.ell) {
                    std::map<int, std::int64_t> next;
                    for (auto [e, c] : laurent)
                        for (int k = 0; k <= li; ++k) next[e + 2 * k - li] += c;
                    laurent = next;
                }
                for (int k = 0; k <= l; ++k) CHECK(laurent[2 * k - l] == t.m[k]);
            }
        }
    }
}

TEST_CASE("branching agrees with the weight oracle") {
    for (const auto& f : su_families(5)) {
        for (const auto& w : su_weights(f, 3)) {
            auto b = branch(w);
            CHECK_MESSAGE(b == oracle_restrict(w), w.str());
            CHECK(dimension(b) == k_dimension(w));
            for (const auto& [l, c] : b.terms()) CHECK(c == 1);
        }
    }
    for (int n : {2, 3})
        for (const auto& w : soe_weights(n, 3, -3, 3)) {
            auto b = branch(w);
            CHECK_MESSAGE(b == oracle_restrict(w), w.str());
            CHECK(dimension(b) == k_dimension(w));
        }
    for (int n : {3, 4, 5})
        for (const auto& w : sostar_weights(n, 3)) {
            auto b = branch(w);
            CHECK_MESSAGE(b == oracle_restrict(w), w.str());
            CHECK(dimension(b) == k_dimension(w));
            for (const auto& [l, c] : branch_raw(w)) CHECK(l.p() >= 0);
        }
}

TEST_CASE("SO* top labels") {
    for (int n : {3, 4, 5})
        for (const auto& w : sostar_weights(n, 3)) {
            const auto b = branch(w);
            std::map<std::vector<int>, int> top;
            for (const auto& [l, c] : b.terms()) {
                std::vector<int> nu(l.nu().begin(), l.nu().end());
                top[nu] = std::max(top.count(nu) ? top[nu] : -1, l.p());
            }
            for (const auto& [nu, p] : top) {
                CHECK(p == sostar_p(w.lambda(), nu));
                CHECK(b.coefficient(KMLabel::sostar(w.family(), nu, p)) == 1);
            }
        }
    // Keeping only the top label per nu loses dimension as soon as two sides are positive.
    auto f = GroupFamily::sostar(3);
    auto w = KWeight::sostar(f, {2, 1, 0});
    CHECK(sostar_sides(w.lambda(), std::vector<int>{1}) == std::vector<int>{1, 1});
    Integer top_only = 0;
    for (int nu = 0; nu <= 2; ++nu) top_only += sostar_p(w.lambda(), std::vector<int>{nu}) + 1;
    CHECK(top_only == 7);
    CHECK(k_dimension(w) == 8);
    CHECK(branch(w).coefficient(KMLabel::sostar(f, {1}, 0)) == 1);
}

TEST_CASE("branch is linear on K virtual characters") {
    auto f = GroupFamily::su(2, 2);
    auto a = KWeight::su(f, {1, 0}, {0, 0});
    auto b = KWeight::su(f, {2, 0}, {1, -1});
    KVirtualChar v(f);
    v.add(a, 3);
    v.add(b, -2);
    CHECK(branch(v) == Integer(3) * branch(a) - Integer(2) * branch(b));
}
