#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace coperm {

// Fixed-width exact integer used on the performance path.
using Int = __int128;

// Arbitrary-precision fallback behind the same contracts.
using BigInt = boost::multiprecision::cpp_int;

enum class ArithMode { Fixed128, Widened };

std::string to_string(Int value);

BigInt to_big(Int value);

// Throws Error(Overflow) when the value does not fit in Int.
Int to_fixed(const BigInt& value);

}  // namespace coperm
