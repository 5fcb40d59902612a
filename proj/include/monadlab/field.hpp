#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace monadlab {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A generator failed its own self-check. Always a bug, never an expected outcome.
class GeneratorError : public Error {
 public:
  using Error::Error;
};

/// Runtime descriptor of the base field: the rationals or GF(p), p an odd prime < 2^31.
class Field {
 public:
  enum class Kind { rational, prime };

  static Field rational() noexcept { return Field(Kind::rational, 0); }
  /// Throws std::invalid_argument unless p is an odd prime below 2^31.
  static Field prime(std::uint64_t p);
  /// Parses `rational` or `gf:<P>`.
  static Field parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::rational; }
  bool is_prime() const noexcept { return kind_ == Kind::prime; }
  std::uint32_t modulus() const noexcept { return p_; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace monadlab
