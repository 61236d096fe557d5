#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace setchroma {

/// Exact signed integer used for every count in the library.
using BigCount = boost::multiprecision::cpp_int;

/// Exact rational, used where a count has to be divided (mode estimates).
using Rational = boost::multiprecision::cpp_rational;

std::string to_decimal(const BigCount& value);
std::string to_decimal(const Rational& value);

/// Parses an optionally signed decimal integer. Throws DomainError on junk.
BigCount parse_big_count(std::string_view text);

}  // namespace setchroma
