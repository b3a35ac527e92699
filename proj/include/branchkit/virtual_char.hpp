#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <string>

#include "branchkit/errors.hpp"
#include "branchkit/integer.hpp"
#include "branchkit/weights.hpp"

namespace branchkit {

// Lexicographic order on raw coordinates. Keys handed to it are already canonical.
struct CoordsLess {
    template <class L>
    bool operator()(const L& a, const L& b) const {
        auto x = a.coords();
        auto y = b.coords();
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    }
};

template <class Label>
Label canonical_of(const Label& l);
template <>
inline KMLabel canonical_of(const KMLabel& l) { return canonical_km(l); }
template <>
inline KWeight canonical_of(const KWeight& w) { return canonical_k(w); }

// Element of a Grothendieck group: a finite Z-combination of irreducible classes.
// Keys are canonical, coefficients nonzero, iteration is lexicographic in the key.
template <class Label>
class BasicVirtualChar {
public:
    using Terms = std::map<Label, Integer, CoordsLess>;

    explicit BasicVirtualChar(GroupFamily family) : family_(family) {}
    BasicVirtualChar(GroupFamily family, const Label& label, Integer coef = 1) : family_(family) {
        add(label, std::move(coef));
    }

    const GroupFamily& family() const noexcept { return family_; }
    const Terms& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    size_t size() const noexcept { return terms_.size(); }

    Integer coefficient(const Label& label) const {
        auto it = terms_.find(canonical_of(label));
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add(const Label& label, const Integer& coef) {
        if (label.family() != family_) throw family_error("virtual character: family mismatch");
        if (coef == 0) return;
        add_canonical(canonical_of(label), coef);
    }

    BasicVirtualChar& operator+=(const BasicVirtualChar& o) {
        check(o);
        for (const auto& [l, c] : o.terms_) add_canonical(l, c);
        return *this;
    }
    BasicVirtualChar& operator-=(const BasicVirtualChar& o) {
        check(o);
        for (const auto& [l, c] : o.terms_) add_canonical(l, -c);
        return *this;
    }
    BasicVirtualChar& operator*=(const Integer& k) {
        if (k == 0) {
            terms_.clear();
        } else {
            for (auto& [l, c] : terms_) c *= k;
        }
        return *this;
    }

    friend BasicVirtualChar operator+(BasicVirtualChar a, const BasicVirtualChar& b) { return a += b; }
    friend BasicVirtualChar operator-(BasicVirtualChar a, const BasicVirtualChar& b) { return a -= b; }
    friend BasicVirtualChar operator*(const Integer& k, BasicVirtualChar a) { return a *= k; }
    friend BasicVirtualChar operator-(BasicVirtualChar a) { return a *= Integer(-1); }

    friend bool operator==(const BasicVirtualChar& a, const BasicVirtualChar& b) {
        if (a.family_ != b.family_ || a.terms_.size() != b.terms_.size()) return false;
        auto it = b.terms_.begin();
        for (const auto& [l, c] : a.terms_) {
            if (!std::ranges::equal(l.coords(), it->first.coords()) || c != it->second) return false;
            ++it;
        }
        return true;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [l, c] : terms_) {
            if (!out.empty()) out += c < 0 ? " - " : " + ";
            else if (c < 0) out += "-";
            Integer a = abs(c);
            if (a != 1) out += a.str() + "*";
            out += l.str();
        }
        return out;
    }

private:
    void check(const BasicVirtualChar& o) const {
        if (o.family_ != family_) throw family_error("virtual character: family mismatch");
    }
    void add_canonical(const Label& key, const Integer& coef) {
        auto [it, inserted] = terms_.try_emplace(key, coef);
        if (!inserted) {
            it->second += coef;
            if (it->second == 0) terms_.erase(it);
        }
    }

    GroupFamily family_;
    Terms terms_;
};

using VirtualChar = BasicVirtualChar<KMLabel>;
using KVirtualChar = BasicVirtualChar<KWeight>;

// Tensor every term with the one-dimensional K_M-representation t.
// Throws unsupported_operand_error when t is not one-dimensional.
VirtualChar twist_char(const VirtualChar& vc, const KMLabel& t);

}  // namespace branchkit
