#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace stab {

// Group orders overflow 64 bits already at degree 21 (21! > 2^64).
using BigInt = boost::multiprecision::cpp_int;

} // namespace stab
