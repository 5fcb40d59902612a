#include "monadlab/rational.hpp"

#include <stdexcept>

#include "monadlab/field.hpp"

namespace monadlab {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  auto body = text;
  if (body.starts_with('-')) body.remove_prefix(1);
  auto slash = body.find('/');
  auto num = body.substr(0, slash);
  auto den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den))
    throw ParseError("bad rational entry '" + std::string(text) + "'");
  Integer d(std::string{den});
  if (d == 0) throw ParseError("rational entry '" + std::string(text) + "' has zero denominator");
  Rational r(Integer(std::string(text.substr(0, text.size() - body.size())) + std::string(num)), d);
  if (r.to_string() != text)
    throw ParseError("rational entry '" + std::string(text) + "' is not in canonical form (expected '" +
                     r.to_string() + "')");
  return r;
}

}  // namespace monadlab
