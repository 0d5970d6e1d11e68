#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace smoothbound {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

// Natural log of a nonnegative big integer; -inf for zero.
double log_of(const BigInt& value);

}  // namespace smoothbound
