#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hka {

using BigInt = boost::multiprecision::cpp_int;

// Decimal integer with optional sign. Throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

// nullopt if x does not fit.
std::optional<std::int64_t> to_int64(const BigInt& x);

inline std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace hka
