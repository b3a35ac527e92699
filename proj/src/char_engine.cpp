#include "branchkit/char_engine.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>

#include "branchkit/errors.hpp"

namespace branchkit {

namespace {

using Span = std::span<const int>;

bool has_roots(const Factor& f) {
    switch (f.kind) {
        case FactorKind::Torus: return false;
        case FactorKind::TypeA: return f.rank >= 2;
        case FactorKind::A1: return true;
        case FactorKind::TypeD: return f.rank >= 2;
    }
    return false;
}

std::vector<Weight> positive_roots(const Factor& f) {
    std::vector<Weight> roots;
    if (!has_roots(f)) return roots;
    const int k = f.rank;
    switch (f.kind) {
        case FactorKind::TypeA:
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) {
                    Weight r(k, 0);
                    r[i] = 1;
                    r[j] = -1;
                    roots.push_back(r);
                }
            break;
        case FactorKind::TypeD:
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) {
                    Weight r(k, 0);
                    r[i] = 1;
                    r[j] = -1;
                    roots.push_back(r);
                    r[j] = 1;
                    roots.push_back(r);
                }
            break;
        case FactorKind::A1: roots.push_back(Weight{2}); break;
        case FactorKind::Torus: break;
    }
    return roots;
}

std::int64_t dot(Span a, Span b) {
    std::int64_t s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += static_cast<std::int64_t>(a[i]) * b[i];
    return s;
}

Weight two_rho(const Factor& f) {
    Weight r(f.rank, 0);
    for (const auto& a : positive_roots(f))
        for (int i = 0; i < f.rank; ++i) r[i] += a[i];
    return r;
}

bool factor_dominant(const Factor& f, Span w) {
    switch (f.kind) {
        case FactorKind::Torus: return true;
        case FactorKind::TypeA: return is_nonincreasing(w);
        case FactorKind::A1: return w[0] >= 0;
        case FactorKind::TypeD: return is_type_d_dominant(w);
    }
    return false;
}

void factor_make_dominant(const Factor& f, std::span<int> w) {
    switch (f.kind) {
        case FactorKind::Torus: return;
        case FactorKind::TypeA: std::sort(w.begin(), w.end(), std::greater<>()); return;
        case FactorKind::A1: w[0] = std::abs(w[0]); return;
        case FactorKind::TypeD: {
            if (f.rank < 2) return;
            int negatives = 0;
            bool zero = false;
            for (int& x : w) {
                if (x < 0) ++negatives;
                if (x == 0) zero = true;
                x = std::abs(x);
            }
            std::sort(w.begin(), w.end(), std::greater<>());
            if (!zero && negatives % 2 == 1) w.back() = -w.back();
            return;
        }
    }
}

// Full Weyl orbit of a dominant weight of one factor.
std::vector<Weight> factor_orbit(const Factor& f, const Weight& dom) {
    std::vector<Weight> out;
    switch (f.kind) {
        case FactorKind::Torus: out.push_back(dom); break;
        case FactorKind::A1:
            out.push_back(dom);
            if (dom[0] != 0) out.push_back(Weight{-dom[0]});
            break;
        case FactorKind::TypeA: {
            Weight w = dom;
            std::sort(w.begin(), w.end());
            do out.push_back(w);
            while (std::next_permutation(w.begin(), w.end()));
            break;
        }
        case FactorKind::TypeD: {
            if (f.rank < 2) {
                out.push_back(dom);
                break;
            }
            Weight a = dom;
            bool zero = false;
            for (int& x : a) {
                if (x == 0) zero = true;
                x = std::abs(x);
            }
            const int parity = dom.back() < 0 ? 1 : 0;
            std::sort(a.begin(), a.end());
            do {
                std::vector<int> nz;
                for (int i = 0; i < f.rank; ++i)
                    if (a[i] != 0) nz.push_back(i);
                const unsigned patterns = 1u << nz.size();
                for (unsigned mask = 0; mask < patterns; ++mask) {
                    if (!zero && std::popcount(mask) % 2 != parity) continue;
                    Weight w = a;
                    for (size_t b = 0; b < nz.size(); ++b)
                        if (mask & (1u << b)) w[nz[b]] = -w[nz[b]];
                    out.push_back(std::move(w));
                }
            } while (std::next_permutation(a.begin(), a.end()));
            break;
        }
    }
    return out;
}

// Freudenthal's recursion over the dominant chamber of a single factor.
Multiplicities freudenthal(const Factor& f, const Weight& highest) {
    Multiplicities mult;
    if (!has_roots(f)) {
        mult[highest] = 1;
        return mult;
    }
    const auto roots = positive_roots(f);
    const Weight r2 = two_rho(f);

    std::set<Weight> seen{highest};
    std::vector<Weight> order{highest};
    for (size_t head = 0; head < order.size(); ++head) {
        for (const auto& a : roots) {
            Weight next = order[head];
            for (int i = 0; i < f.rank; ++i) next[i] -= a[i];
            if (factor_dominant(f, next) && seen.insert(next).second) order.push_back(next);
        }
    }
    auto depth = [&](const Weight& mu) {
        std::int64_t d = 0;
        for (int i = 0; i < f.rank; ++i) d += static_cast<std::int64_t>(highest[i] - mu[i]) * r2[i];
        return d;
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](const Weight& x, const Weight& y) { return depth(x) < depth(y); });

    auto shifted_norm = [&](const Weight& mu) {
        std::int64_t s = 0;
        for (int i = 0; i < f.rank; ++i) {
            std::int64_t v = 2 * static_cast<std::int64_t>(mu[i]) + r2[i];
            s += v * v;
        }
        return s;
    };
    const std::int64_t top = shifted_norm(highest);

    mult[highest] = 1;
    for (size_t idx = 1; idx < order.size(); ++idx) {
        const Weight& mu = order[idx];
        std::int64_t sum = 0;
        for (const auto& a : roots) {
            Weight w = mu;
            for (;;) {
                for (int i = 0; i < f.rank; ++i) w[i] += a[i];
                Weight d = w;
                factor_make_dominant(f, d);
                if (!seen.count(d)) break;
                auto it = mult.find(d);
                if (it == mult.end()) break;
                sum += dot(w, a) * it->second;
            }
        }
        const std::int64_t denom = top - shifted_norm(mu);
        const std::int64_t m = 8 * sum / denom;
        if (m != 0) mult[mu] = m;
    }
    return mult;
}

struct FactorOffset {
    Factor factor;
    int offset;
};

std::vector<FactorOffset> layout(const ReductiveShape& s) {
    std::vector<FactorOffset> out;
    int off = 0;
    for (const auto& f : s.factors) {
        out.push_back({f, off});
        off += f.rank;
    }
    return out;
}

void check_weight(const ReductiveShape& s, const Weight& w) {
    if (static_cast<int>(w.size()) != s.rank())
        throw validation_error("weight length " + std::to_string(w.size()) +
                               " does not match shape rank " + std::to_string(s.rank()));
}

class MultiplicityCache {
public:
    template <class Fn>
    std::shared_ptr<const Multiplicities> get(const ReductiveShape& s, const Weight& w, Fn&& make) {
        auto key = std::make_pair(s, w);
        {
            std::shared_lock lock(mutex_);
            if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        }
        auto value = std::make_shared<const Multiplicities>(make());
        std::unique_lock lock(mutex_);
        return cache_.try_emplace(std::move(key), std::move(value)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<std::pair<ReductiveShape, Weight>, std::shared_ptr<const Multiplicities>> cache_;
};

MultiplicityCache& cache() {
    static MultiplicityCache c;
    return c;
}

Weight slice(const Weight& w, int off, int len) {
    return Weight(w.begin() + off, w.begin() + off + len);
}

// Cartesian product of per-factor weight lists.
template <class PerFactor>
std::vector<std::pair<Weight, std::int64_t>> product(const ReductiveShape& s, PerFactor&& lists) {
    std::vector<std::pair<Weight, std::int64_t>> acc{{Weight{}, 1}};
    for (size_t fi = 0; fi < s.factors.size(); ++fi) {
        const auto& list = lists(fi);
        std::vector<std::pair<Weight, std::int64_t>> next;
        next.reserve(acc.size() * list.size());
        for (const auto& [w, m] : acc)
            for (const auto& [v, k] : list) {
                Weight c = w;
                c.insert(c.end(), v.begin(), v.end());
                next.emplace_back(std::move(c), m * k);
            }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

int ReductiveShape::rank() const noexcept {
    int r = 0;
    for (const auto& f : factors) r += f.rank;
    return r;
}

ReductiveShape k_shape(const GroupFamily& f) {
    switch (f.kind()) {
        case FamilyKind::SU: return {{{FactorKind::TypeA, f.m()}, {FactorKind::TypeA, f.n()}}};
        case FamilyKind::SOe: return {{{FactorKind::Torus, 1}, {FactorKind::TypeD, f.n()}}};
        case FamilyKind::SOstar: return {{{FactorKind::TypeA, f.n()}}};
    }
    return {};
}

ReductiveShape km_shape(const GroupFamily& f) {
    switch (f.kind()) {
        case FamilyKind::SU:
            return {{{FactorKind::TypeA, f.m() - 1},
                     {FactorKind::TypeA, f.n() - 1},
                     {FactorKind::Torus, 1}}};
        case FamilyKind::SOe: return {{{FactorKind::Torus, 1}, {FactorKind::TypeD, f.n() - 1}}};
        case FamilyKind::SOstar: return {{{FactorKind::TypeA, f.n() - 2}, {FactorKind::A1, 1}}};
    }
    return {};
}

bool is_dominant(const ReductiveShape& shape, const Weight& w) {
    check_weight(shape, w);
    for (const auto& [f, off] : layout(shape))
        if (!factor_dominant(f, Span(w).subspan(off, f.rank))) return false;
    return true;
}

Weight dominant_representative(const ReductiveShape& shape, const Weight& w) {
    check_weight(shape, w);
    Weight d = w;
    for (const auto& [f, off] : layout(shape))
        factor_make_dominant(f, std::span<int>(d).subspan(off, f.rank));
    return d;
}

std::shared_ptr<const Multiplicities> weight_multiplicities(const ReductiveShape& shape,
                                                            const Weight& highest) {
    if (!is_dominant(shape, highest))
        throw validation_error("weight_multiplicities: highest weight is not dominant");
    return cache().get(shape, highest, [&] {
        const auto lay = layout(shape);
        std::vector<std::vector<std::pair<Weight, std::int64_t>>> per;
        for (const auto& [f, off] : lay) {
            ReductiveShape single{{f}};
            Weight part = slice(highest, off, f.rank);
            auto m = shape.factors.size() == 1
                         ? std::make_shared<const Multiplicities>(freudenthal(f, part))
                         : weight_multiplicities(single, part);
            per.emplace_back(m->begin(), m->end());
        }
        Multiplicities out;
        for (auto& [w, m] : product(shape, [&](size_t i) -> const auto& { return per[i]; }))
            out.emplace(std::move(w), m);
        return out;
    });
}

std::vector<std::pair<Weight, std::int64_t>> full_weights(const ReductiveShape& shape,
                                                          const Weight& highest) {
    const auto lay = layout(shape);
    std::vector<std::vector<std::pair<Weight, std::int64_t>>> per;
    for (const auto& [f, off] : lay) {
        auto m = weight_multiplicities(ReductiveShape{{f}}, slice(highest, off, f.rank));
        std::vector<std::pair<Weight, std::int64_t>> list;
        for (const auto& [dom, k] : *m)
            for (auto& w : factor_orbit(f, dom)) list.emplace_back(std::move(w), k);
        per.push_back(std::move(list));
    }
    return product(shape, [&](size_t i) -> const auto& { return per[i]; });
}

Integer weyl_dimension(const ReductiveShape& shape, const Weight& highest) {
    if (!is_dominant(shape, highest))
        throw validation_error("weyl_dimension: highest weight is not dominant");
    Integer num = 1, den = 1;
    for (const auto& [f, off] : layout(shape)) {
        const Weight r2 = two_rho(f);
        Weight shifted = slice(highest, off, f.rank);
        for (int i = 0; i < f.rank; ++i) shifted[i] = 2 * shifted[i] + r2[i];
        for (const auto& a : positive_roots(f)) {
            num *= dot(shifted, a);
            den *= dot(r2, a);
        }
    }
    return num / den;
}

FormalCharacter irreducible_character(const ReductiveShape& shape, const Weight& highest,
                                      bool dominant_only) {
    FormalCharacter c{shape, {}, dominant_only};
    if (dominant_only) {
        c.mult = *weight_multiplicities(shape, highest);
    } else {
        for (auto& [w, m] : full_weights(shape, highest)) c.mult.emplace(std::move(w), m);
    }
    return c;
}

Multiplicities decompose_character(const FormalCharacter& c) {
    Multiplicities work;
    for (const auto& [w, m] : c.mult)
        if (m != 0 && (c.dominant_only || is_dominant(c.shape, w))) work[w] += m;
    Multiplicities out;
    while (!work.empty()) {
        auto top = std::prev(work.end());
        const Weight hw = top->first;
        const std::int64_t k = top->second;
        if (k < 0) throw not_a_character_error("peeling reached a negative multiplicity");
        out[hw] += k;
        for (const auto& [w, m] : *weight_multiplicities(c.shape, hw)) {
            auto it = work.find(w);
            if (it == work.end()) throw not_a_character_error("peeling reached a negative multiplicity");
            it->second -= k * m;
            if (it->second == 0) work.erase(it);
        }
    }
    return out;
}

std::map<Weight, Integer> decompose_virtual(const ReductiveShape& shape,
                                            const std::map<Weight, Integer>& dominant_part) {
    std::map<Weight, Integer> work;
    for (const auto& [w, m] : dominant_part)
        if (m != 0) work[w] += m;
    std::map<Weight, Integer> out;
    while (!work.empty()) {
        auto top = std::prev(work.end());
        const Weight hw = top->first;
        const Integer k = top->second;
        out[hw] += k;
        for (const auto& [w, m] : *weight_multiplicities(shape, hw)) {
            auto& slot = work[w];
            slot -= k * m;
            if (slot == 0) work.erase(w);
        }
    }
    return out;
}

Multiplicities tensor_decompose(const ReductiveShape& shape, const Weight& a, const Weight& b) {
    if (!is_dominant(shape, a) || !is_dominant(shape, b))
        throw validation_error("tensor_decompose: labels must be dominant for the shape");
    const auto wa = full_weights(shape, a);
    const auto wb = full_weights(shape, b);
    FormalCharacter c{shape, {}, true};
    for (const auto& [x, m] : wa)
        for (const auto& [y, k] : wb) {
            Weight s = x;
            for (size_t i = 0; i < s.size(); ++i) s[i] += y[i];
            if (is_dominant(shape, s)) c.mult[s] += m * k;
        }
    return decompose_character(c);
}

Multiplicities exterior_decompose(const ReductiveShape& shape, const Weight& a, int j) {
    if (!is_dominant(shape, a))
        throw validation_error("exterior_decompose: label must be dominant for the shape");
    if (j < 0) return {};
    std::vector<Weight> bag;
    for (const auto& [w, m] : full_weights(shape, a))
        for (std::int64_t r = 0; r < m; ++r) bag.push_back(w);
    if (j > static_cast<int>(bag.size())) return {};

    // elementary symmetric functions e_0..e_j of the weight multiset
    std::vector<Multiplicities> e(j + 1);
    e[0][Weight(shape.rank(), 0)] = 1;
    int seen = 0;
    for (const auto& w : bag) {
        ++seen;
        for (int t = std::min(j, seen); t >= 1; --t) {
            for (const auto& [x, m] : e[t - 1]) {
                Weight s = x;
                for (size_t i = 0; i < s.size(); ++i) s[i] += w[i];
                e[t][s] += m;
            }
        }
    }
    FormalCharacter c{shape, {}, true};
    for (const auto& [w, m] : e[j])
        if (is_dominant(shape, w)) c.mult[w] = m;
    return decompose_character(c);
}

// ---- K_M / K level ----

Integer km_dimension(const KMLabel& label) {
    return weyl_dimension(km_shape(label.family()),
                          Weight(label.coords().begin(), label.coords().end()));
}

Integer k_dimension(const KWeight& w) {
    return weyl_dimension(k_shape(w.family()), Weight(w.coords().begin(), w.coords().end()));
}

Integer dimension(const VirtualChar& vc) {
    Integer d = 0;
    for (const auto& [l, c] : vc.terms()) d += c * km_dimension(l);
    return d;
}

Weight restrict_weight(const GroupFamily& f, const Weight& a) {
    Weight out;
    switch (f.kind()) {
        case FamilyKind::SU: {
            const int m = f.m(), n = f.n();
            out.assign(a.begin() + 1, a.begin() + m);
            out.insert(out.end(), a.begin() + m, a.begin() + m + n - 1);
            out.push_back(a[0] + a[m + n - 1]);
            break;
        }
        case FamilyKind::SOe:
            out.push_back(a[0] + a[1]);
            out.insert(out.end(), a.begin() + 2, a.end());
            break;
        case FamilyKind::SOstar:
            out.assign(a.begin() + 2, a.end());
            out.push_back(a[0] - a[1]);
            break;
    }
    return out;
}

VirtualChar oracle_restrict(const KWeight& w) {
    const auto& f = w.family();
    const auto ks = k_shape(f);
    const auto ms = km_shape(f);
    FormalCharacter c{ms, {}, true};
    for (const auto& [x, m] : full_weights(ks, Weight(w.coords().begin(), w.coords().end()))) {
        Weight r = restrict_weight(f, x);
        if (is_dominant(ms, r)) c.mult[r] += m;
    }
    VirtualChar out(f);
    for (const auto& [hw, k] : decompose_character(c))
        out.add(KMLabel::from_coords(f, hw), Integer(k));
    return out;
}

VirtualChar tensor_labels(const KMLabel& a, const KMLabel& b) {
    if (a.family() != b.family()) throw family_error("tensor_labels: family mismatch");
    const auto& f = a.family();
    VirtualChar out(f);
    for (const auto& [hw, k] : tensor_decompose(km_shape(f), Weight(a.coords().begin(), a.coords().end()),
                                                Weight(b.coords().begin(), b.coords().end())))
        out.add(KMLabel::from_coords(f, hw), Integer(k));
    return out;
}

VirtualChar tensor_chars(const VirtualChar& a, const VirtualChar& b) {
    if (a.family() != b.family()) throw family_error("tensor_chars: family mismatch");
    VirtualChar out(a.family());
    for (const auto& [x, c] : a.terms())
        for (const auto& [y, d] : b.terms()) out += (c * d) * tensor_labels(x, y);
    return out;
}

VirtualChar exterior_label(const KMLabel& a, int j) {
    const auto& f = a.family();
    VirtualChar out(f);
    for (const auto& [hw, k] :
         exterior_decompose(km_shape(f), Weight(a.coords().begin(), a.coords().end()), j))
        out.add(KMLabel::from_coords(f, hw), Integer(k));
    return out;
}

VirtualChar twist_char(const VirtualChar& vc, const KMLabel& t) {
    if (t.family() != vc.family()) throw family_error("twist_char: family mismatch");
    if (km_dimension(t) != 1)
        throw unsupported_operand_error("twist_char: " + t.str() +
                                        " is not one-dimensional; use tensor_chars");
    VirtualChar out(vc.family());
    for (const auto& [l, c] : vc.terms()) out.add(add_labels(l, t), c);
    return out;
}

}  // namespace branchkit
