#include "setchroma/bigint.hpp"

#include <cctype>

#include "setchroma/errors.hpp"

namespace setchroma {

std::string to_decimal(const BigCount& value) { return value.str(); }

std::string to_decimal(const Rational& value) {
  const BigCount num = boost::multiprecision::numerator(value);
  const BigCount den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigCount parse_big_count(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw DomainError("expected an integer, got '" + std::string(text) + "'");
  BigCount value = 0;
  for (; pos < text.size(); ++pos) {
    const unsigned char c = static_cast<unsigned char>(text[pos]);
    if (!std::isdigit(c)) throw DomainError("expected an integer, got '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? BigCount(-value) : value;
}

}  // namespace setchroma
