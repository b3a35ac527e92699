#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace branchkit {

using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& x) { return x.str(); }

}  // namespace branchkit
