#include "monadlab/field.hpp"

#include <charconv>

namespace monadlab {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p < 3 || p >= (std::uint64_t{1} << 31) || !monadlab::is_prime(p))
    throw std::invalid_argument("gf modulus must be an odd prime below 2^31, got " + std::to_string(p));
  return Field(Kind::prime, static_cast<std::uint32_t>(p));
}

Field Field::parse(std::string_view text) {
  if (text == "rational") return rational();
  if (text.starts_with("gf:")) {
    auto digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty() ||
        (digits.size() > 1 && digits.front() == '0'))
      throw ParseError("bad field '" + std::string(text) + "'");
    try {
      return prime(p);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown field '" + std::string(text) + "' (expected rational or gf:P)");
}

std::string Field::to_string() const {
  return is_rational() ? std::string("rational") : "gf:" + std::to_string(p_);
}

}  // namespace monadlab
