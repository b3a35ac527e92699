#pragma once

#include "doctest.h"

#include "branchkit/virtual_char.hpp"

namespace doctest {
template <class L>
struct StringMaker<branchkit::BasicVirtualChar<L>> {
    static String convert(const branchkit::BasicVirtualChar<L>& v) { return v.str().c_str(); }
};
template <>
struct StringMaker<branchkit::KMLabel> {
    static String convert(const branchkit::KMLabel& v) { return v.str().c_str(); }
};
template <>
struct StringMaker<branchkit::KWeight> {
    static String convert(const branchkit::KWeight& v) { return v.str().c_str(); }
};
}  // namespace doctest
