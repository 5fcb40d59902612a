#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace monadlab {

/// Element of GF(p) carrying its own modulus.
///
/// An element with modulus 0 is an unbound integer constant (what Eigen
/// produces for `Scalar(0)` and `Scalar(1)`); it adopts the modulus of the
/// other operand. Combining two bound elements of different moduli throws
/// FieldMismatch. Bound values are canonical residues in [0, p).
class Zp {
 public:
  constexpr Zp() noexcept = default;
  constexpr Zp(int c) noexcept : raw_(c) {}  // NOLINT: Eigen builds literals from ints
  /// Reduces v into [0, p). p must be nonzero.
  Zp(std::int64_t v, std::uint32_t p) noexcept;

  std::uint32_t modulus() const noexcept { return p_; }
  bool is_bound() const noexcept { return p_ != 0; }
  /// Canonical residue. For an unbound constant, the raw integer.
  std::int64_t value() const noexcept { return raw_; }
  std::uint32_t residue(std::uint32_t p) const noexcept;
  bool is_zero() const noexcept { return raw_ == 0; }
  /// Same element bound to p. Throws FieldMismatch if already bound to another modulus.
  Zp bind(std::uint32_t p) const;
  /// Throws std::domain_error on zero.
  Zp inverse() const;

  std::string to_string() const { return std::to_string(raw_); }
  /// Canonical decimal residue in [0, p).
  static Zp parse(std::string_view text, std::uint32_t p);

  Zp operator-() const noexcept;
  Zp& operator+=(const Zp& o);
  Zp& operator-=(const Zp& o);
  Zp& operator*=(const Zp& o);
  Zp& operator/=(const Zp& o);

  friend Zp operator+(Zp a, const Zp& b) { return a += b; }
  friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
  friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
  friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
  friend bool operator==(const Zp& a, const Zp& b);
  friend std::ostream& operator<<(std::ostream& os, const Zp& z) { return os << z.raw_; }

 private:
  std::int64_t raw_ = 0;
  std::uint32_t p_ = 0;
};

inline bool is_zero(const Zp& z) noexcept { return z.is_zero(); }

/// Modular exponentiation, 0 <= base < p.
std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) noexcept;

}  // namespace monadlab
