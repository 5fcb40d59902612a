#include "monadlab/zp.hpp"

#include <charconv>
#include <stdexcept>

#include "monadlab/field.hpp"

namespace monadlab {

namespace {

std::uint32_t common_modulus(const Zp& a, const Zp& b) {
  if (a.modulus() == b.modulus() || b.modulus() == 0) return a.modulus();
  if (a.modulus() == 0) return b.modulus();
  throw FieldMismatch("gf:" + std::to_string(a.modulus()) + " combined with gf:" +
                      std::to_string(b.modulus()));
}

}  // namespace

Zp::Zp(std::int64_t v, std::uint32_t p) noexcept : p_(p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  raw_ = r < 0 ? r + p : r;
}

std::uint32_t Zp::residue(std::uint32_t p) const noexcept {
  if (p_ != 0) return static_cast<std::uint32_t>(raw_);
  std::int64_t r = raw_ % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

Zp Zp::bind(std::uint32_t p) const {
  if (p_ == p) return *this;
  if (p_ != 0) throw FieldMismatch("cannot rebind gf:" + std::to_string(p_) + " to gf:" + std::to_string(p));
  return Zp(raw_, p);
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) noexcept {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

Zp Zp::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in gf(p)");
  if (p_ == 0) {
    if (raw_ == 1 || raw_ == -1) return *this;
    throw FieldMismatch("inverse of an unbound constant needs a modulus");
  }
  // extended Euclid on (raw, p)
  std::int64_t t = 0, new_t = 1, r = p_, new_r = raw_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return Zp(t, p_);
}

Zp Zp::parse(std::string_view text, std::uint32_t p) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
      (text.size() > 1 && text.front() == '0'))
    throw ParseError("bad gf entry '" + std::string(text) + "'");
  if (v >= p)
    throw ParseError("gf entry " + std::string(text) + " is not a canonical residue mod " + std::to_string(p));
  return Zp(static_cast<std::int64_t>(v), p);
}

Zp Zp::operator-() const noexcept {
  Zp r = *this;
  if (p_ == 0) {
    r.raw_ = -raw_;
    return r;
  }
  r.raw_ = raw_ == 0 ? 0 : p_ - raw_;
  return r;
}

Zp& Zp::operator+=(const Zp& o) {
  std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    raw_ += o.raw_;
    return *this;
  }
  std::uint64_t s = std::uint64_t{residue(p)} + o.residue(p);
  raw_ = static_cast<std::int64_t>(s >= p ? s - p : s);
  p_ = p;
  return *this;
}

Zp& Zp::operator-=(const Zp& o) { return *this += -o; }

Zp& Zp::operator*=(const Zp& o) {
  std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    raw_ *= o.raw_;
    return *this;
  }
  raw_ = static_cast<std::int64_t>(std::uint64_t{residue(p)} * o.residue(p) % p);
  p_ = p;
  return *this;
}

Zp& Zp::operator/=(const Zp& o) {
  std::uint32_t p = common_modulus(*this, o);
  if (p == 0) return *this *= o.inverse();
  return *this *= o.bind(p).inverse();
}

bool operator==(const Zp& a, const Zp& b) {
  std::uint32_t p = common_modulus(a, b);
  if (p == 0) return a.raw_ == b.raw_;
  return a.residue(p) == b.residue(p);
}

}  // namespace monadlab
