#include "cdgraph/bigint.hpp"

#include <cctype>
#include <stdexcept>

namespace cdgraph {

BigInt parse_bigint(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin])))
    ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;

  std::string digits;
  digits.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    const char ch = text[i];
    if (ch == '_' || ch == ',') continue;
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("not a decimal integer: '" +
                                  std::string(text) + "'");
    digits.push_back(ch);
  }
  if (digits.empty())
    throw std::invalid_argument("empty integer literal");
  return BigInt(digits);
}

std::string to_decimal(const BigInt& value, bool thousands_separators) {
  std::string digits = value.str();
  if (!thousands_separators) return digits;

  const std::size_t first_digit = (!digits.empty() && digits[0] == '-') ? 1 : 0;
  std::string grouped = digits.substr(0, first_digit);
  const std::size_t count = digits.size() - first_digit;
  for (std::size_t i = 0; i < count; ++i) {
    if (i > 0 && (count - i) % 3 == 0) grouped.push_back(',');
    grouped.push_back(digits[first_digit + i]);
  }
  return grouped;
}

}  // namespace cdgraph
