#pragma once

// Dense exact linear algebra over Rational and Zp.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "monadlab/eigen.hpp"
#include "monadlab/field.hpp"

namespace monadlab {

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static bool accepts(const Field& f) noexcept { return f.is_rational(); }
  static Rational make(const Field&, std::int64_t v) { return Rational(v); }
  static std::string format(const Rational& x, const Field&) { return x.to_string(); }
  static Rational parse(std::string_view text, const Field&) { return Rational::parse(text); }
};

template <>
struct scalar_traits<Zp> {
  static bool accepts(const Field& f) noexcept { return f.is_prime(); }
  static Zp make(const Field& f, std::int64_t v) { return Zp(v, f.modulus()); }
  static std::string format(const Zp& x, const Field& f) { return std::to_string(x.bind(f.modulus()).value()); }
  static Zp parse(std::string_view text, const Field& f) { return Zp::parse(text, f.modulus()); }
};

template <class S>
S make_scalar(const Field& f, std::int64_t v) {
  return scalar_traits<S>::make(f, v);
}

/// Zero matrix whose entries belong to `f`.
template <class S>
Mat<S> zeros(const Field& f, Index rows, Index cols) {
  return Mat<S>::Constant(rows, cols, make_scalar<S>(f, 0));
}

template <class S>
Mat<S> identity(const Field& f, Index n) {
  Mat<S> m = zeros<S>(f, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = make_scalar<S>(f, 1);
  return m;
}

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = i + 1; j < m.cols(); ++j)
      if (!(m(i, j) == m(j, i))) return false;
  return true;
}

template <class Derived>
bool is_skew(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = i; j < m.cols(); ++j)
      if (!(m(i, j) == -m(j, i))) return false;
  return true;
}

/// The common modulus of the bound entries, 0 if none is bound.
/// Throws FieldMismatch when two entries disagree.
template <class Derived>
std::uint32_t modulus_of(const Eigen::MatrixBase<Derived>& m) {
  if constexpr (std::is_same_v<typename Derived::Scalar, Zp>) {
    std::uint32_t p = 0;
    for (Index j = 0; j < m.cols(); ++j)
      for (Index i = 0; i < m.rows(); ++i) {
        std::uint32_t q = m(i, j).modulus();
        if (q == 0) continue;
        if (p == 0) p = q;
        else if (p != q) throw FieldMismatch("matrix mixes gf:" + std::to_string(p) + " and gf:" + std::to_string(q));
      }
    return p;
  } else {
    return 0;
  }
}

/// Binds every entry to `f`, throwing FieldMismatch for entries that belong elsewhere.
void conform(Mat<Rational>& m, const Field& f);
void conform(Mat<Zp>& m, const Field& f);

/// Exact product. Throws DimensionMismatch or FieldMismatch.
template <class S>
Mat<S> mat_mul(const Mat<S>& a, const Mat<S>& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  std::uint32_t pa = modulus_of(a), pb = modulus_of(b);
  if (pa != 0 && pb != 0 && pa != pb)
    throw FieldMismatch("mat_mul: gf:" + std::to_string(pa) + " times gf:" + std::to_string(pb));
  return a * b;
}

template <class S>
Mat<S> transpose(const Mat<S>& a) {
  return a.transpose();
}

/// Exact determinant. Rational input goes through fraction-free (Bareiss)
/// elimination on the row-scaled integer matrix; gf(p) through ordinary
/// elimination. The 0x0 determinant is 1. Throws DimensionMismatch if not square.
Rational det(const Mat<Rational>& a);
Zp det(const Mat<Zp>& a);

/// Fraction-free determinant of an integer matrix given row-major.
Integer bareiss_det(std::vector<Integer> entries, Index n);

/// Reduced row echelon form with the pivot column of each nonzero row.
template <class S>
struct Echelon {
  Mat<S> reduced;
  std::vector<Index> pivots;
};

namespace detail {
inline Mat<Rational> prepared(const Mat<Rational>& a) { return a; }
Mat<Zp> prepared(const Mat<Zp>& a);
}  // namespace detail

template <class S>
Echelon<S> row_echelon(const Mat<S>& a) {
  Echelon<S> e{detail::prepared(a), {}};
  Mat<S>& m = e.reduced;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const S inv = S(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const S f = m(r, col);
      for (Index j = col; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

template <class S>
Index rank(const Mat<S>& a) {
  return static_cast<Index>(row_echelon(a).pivots.size());
}

/// Basis of the right null space, one column vector per free column.
template <class S>
std::vector<Vec<S>> kernel_basis(const Mat<S>& a) {
  const Echelon<S> e = row_echelon(a);
  const Mat<S>& r = e.reduced;
  const std::uint32_t p = modulus_of(r);
  const S zero = p ? S(0) * r(0, 0) : S(0);
  const S one = p ? zero + S(1) : S(1);

  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (Index c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<Vec<S>> basis;
  for (Index free = 0; free < a.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vec<S> v = Vec<S>::Constant(a.cols(), zero);
    v(free) = one;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v(e.pivots[i]) = -r(static_cast<Index>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace monadlab
