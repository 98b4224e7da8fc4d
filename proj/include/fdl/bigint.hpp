#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fdl {

/// Exact integer type for delays and representable-integer bounds.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

}  // namespace fdl
