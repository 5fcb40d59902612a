#include "monadlab/linalg.hpp"

#include <utility>

namespace monadlab {

namespace {

void require_square(Index rows, Index cols) {
  if (rows != cols)
    throw DimensionMismatch("det: matrix is " + std::to_string(rows) + "x" + std::to_string(cols) + ", not square");
}

}  // namespace

void conform(Mat<Rational>&, const Field& f) {
  if (!f.is_rational()) throw FieldMismatch("rational matrix in field " + f.to_string());
}

void conform(Mat<Zp>& m, const Field& f) {
  if (!f.is_prime()) throw FieldMismatch("gf matrix in field " + f.to_string());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) m(i, j) = m(i, j).bind(f.modulus());
}

namespace detail {

Mat<Zp> prepared(const Mat<Zp>& a) {
  Mat<Zp> m = a;
  const std::uint32_t p = modulus_of(m);
  if (p == 0) {
    if (!is_zero(m)) throw FieldMismatch("gf matrix carries no modulus");
    return m;
  }
  conform(m, Field::prime(p));
  return m;
}

}  // namespace detail

Integer bareiss_det(std::vector<Integer> a, Index n) {
  const auto at = [&](Index i, Index j) -> Integer& { return a[static_cast<std::size_t>(i * n + j)]; };
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    Index pivot = k;
    while (pivot < n && at(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (Index j = 0; j < n; ++j) std::swap(at(pivot, j), at(k, j));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        Integer& x = at(i, j);
        x = x * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

Rational det(const Mat<Rational>& a) {
  require_square(a.rows(), a.cols());
  const Index n = a.rows();
  std::vector<Integer> entries(static_cast<std::size_t>(n * n));
  Integer scale = 1;
  for (Index i = 0; i < n; ++i) {
    Integer lcm = 1;
    for (Index j = 0; j < n; ++j) {
      Integer den = a(i, j).denominator();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (Index j = 0; j < n; ++j)
      entries[static_cast<std::size_t>(i * n + j)] = a(i, j).numerator() * (lcm / a(i, j).denominator());
    scale *= lcm;
  }
  return Rational(bareiss_det(std::move(entries), n), scale);
}

Zp det(const Mat<Zp>& a) {
  require_square(a.rows(), a.cols());
  const Index n = a.rows();
  if (n == 0) return Zp(1);
  const std::uint32_t p = modulus_of(a);
  if (p == 0) {
    if (is_zero(a)) return Zp(0);
    throw FieldMismatch("gf matrix carries no modulus");
  }
  std::vector<std::uint64_t> m(static_cast<std::size_t>(n * n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m[static_cast<std::size_t>(i * n + j)] = a(i, j).residue(p);
  const auto at = [&](Index i, Index j) -> std::uint64_t& { return m[static_cast<std::size_t>(i * n + j)]; };

  std::uint64_t result = 1;
  for (Index k = 0; k < n; ++k) {
    Index pivot = k;
    while (pivot < n && at(pivot, k) == 0) ++pivot;
    if (pivot == n) return Zp(0, p);
    if (pivot != k) {
      for (Index j = k; j < n; ++j) std::swap(at(pivot, j), at(k, j));
      result = (p - result) % p;
    }
    result = result * at(k, k) % p;
    const std::uint64_t inv = pow_mod(at(k, k), p - 2, p);
    for (Index i = k + 1; i < n; ++i) {
      if (at(i, k) == 0) continue;
      const std::uint64_t f = at(i, k) * inv % p;
      for (Index j = k; j < n; ++j) at(i, j) = (at(i, j) + (p - f) * at(k, j)) % p;
    }
  }
  return Zp(static_cast<std::int64_t>(result), p);
}

}  // namespace monadlab
