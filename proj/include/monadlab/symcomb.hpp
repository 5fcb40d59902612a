#pragma once

// Monomial bases of symmetric powers S^d I and the block layout of Q.
//
// All indices in this header are 1-based: variables i_1..i_k, basis
// positions, layout rows/columns and block labels M_1..M_k.

#include <map>
#include <string>
#include <vector>

#include "monadlab/rational.hpp"

namespace monadlab {

/// C(n, k) exactly.
Integer binomial(unsigned long n, unsigned long k);

/// Exponent vector of a monomial in i_1..i_k.
class Monomial {
 public:
  /// Throws std::invalid_argument for an empty vector or negative exponents.
  explicit Monomial(std::vector<int> exponents);

  int variables() const noexcept { return static_cast<int>(exponents_.size()); }
  int degree() const noexcept { return degree_; }
  int exponent(int alpha) const { return exponents_.at(static_cast<std::size_t>(alpha - 1)); }
  const std::vector<int>& exponents() const noexcept { return exponents_; }
  /// Number of distinct variables dividing the monomial.
  int support() const noexcept;
  /// `i1^2i2`; the constant monomial is `1`.
  std::string label() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

/// m * i_alpha. Throws std::out_of_range unless 1 <= alpha <= k.
Monomial multiply_by_var(const Monomial& m, int alpha);

/// Degree-d monomials in k variables, ordered lexicographically with
/// i_1 > i_2 > ... > i_k (larger exponent vectors first).
class SymBasis {
 public:
  SymBasis(int k, int degree, std::vector<Monomial> monomials);

  int variables() const noexcept { return k_; }
  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const Monomial& at(std::size_t position) const { return monomials_.at(position - 1); }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  /// 1-based position. Throws std::invalid_argument if m is not in the basis.
  std::size_t index_of(const Monomial& m) const;

 private:
  int k_;
  int degree_;
  std::vector<Monomial> monomials_;
  std::map<std::vector<int>, std::size_t> positions_;
};

/// Throws std::invalid_argument for k < 1 or d < 0.
SymBasis sym_basis(int k, int d);
std::size_t monomial_index(const SymBasis& basis, const Monomial& m);

struct LayoutEntry {
  std::size_t row;  // eta_row in S^{n+1} I
  std::size_t col;  // zeta_col in S^n I
  int alpha;        // block M_alpha

  friend bool operator==(const LayoutEntry&, const LayoutEntry&) = default;
};

/// Sparse block pattern of Q: block (i, j) is M_alpha iff eta_i = zeta_j * i_alpha.
class QLayout {
 public:
  QLayout(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::size_t block_rows() const noexcept { return rows_.size(); }
  std::size_t block_cols() const noexcept { return cols_.size(); }
  const SymBasis& row_basis() const noexcept { return rows_; }
  const SymBasis& col_basis() const noexcept { return cols_; }
  /// Entries sorted by (row, col).
  const std::vector<LayoutEntry>& entries() const noexcept { return entries_; }
  /// alpha of block (row, col), 0 for a zero block.
  int at(std::size_t row, std::size_t col) const;

 private:
  int n_, k_;
  SymBasis cols_, rows_;
  std::vector<int> grid_;
  std::vector<LayoutEntry> entries_;
};

/// Throws std::invalid_argument for n < 1 or k < 1.
QLayout q_layout(int n, int k);

/// Block table with row labels on the right and column labels underneath.
std::string render_layout_table(const QLayout& layout);
/// CSV with header `i,j,alpha`, one line per nonzero block.
std::string render_layout_csv(const QLayout& layout);

}  // namespace monadlab
