// include/tame/integer.hpp - exact integer and rational types shared by every module.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <bit>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tame {

/// Unbounded signed integer. Character degrees of the Monster exceed 2^86.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// 2-adic valuation of a positive integer.
inline unsigned v2(const BigInt& m) {
    if (m <= 0) {
        throw std::domain_error("v2: argument must be positive");
    }
    return static_cast<unsigned>(boost::multiprecision::lsb(m));
}

inline unsigned v2(std::int64_t m) {
    if (m <= 0) {
        throw std::domain_error("v2: argument must be positive");
    }
    return static_cast<unsigned>(std::countr_zero(static_cast<std::uint64_t>(m)));
}

/// |m|_2, the largest power of two dividing m.
inline BigInt two_part(const BigInt& m) {
    return BigInt(1) << v2(m);
}

/// Parses a decimal string of digits into a positive integer.
/// Degrees are carried as strings in documents so nothing is lost to a fixed-width type.
inline BigInt parse_positive(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty integer literal");
    }
    for (char ch : text) {
        if (ch < '0' || ch > '9') {
            throw std::invalid_argument("invalid integer literal '" + std::string(text) + "'");
        }
    }
    BigInt value{std::string(text)};
    if (value <= 0) {
        throw std::invalid_argument("integer literal must be positive: '" + std::string(text) + "'");
    }
    return value;
}

inline std::string to_string(const BigInt& value) {
    return value.str();
}

namespace detail {

// Lets the generic algorithms pick between machine words and BigInt.
template <class Int>
concept ExactInteger = std::same_as<Int, BigInt> || std::same_as<Int, std::int64_t>;

}  // namespace detail

}  // namespace tame
