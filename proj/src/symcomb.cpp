#include "monadlab/symcomb.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace monadlab {

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.empty()) throw std::invalid_argument("monomial needs at least one variable");
  for (int e : exponents_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    degree_ += e;
  }
}

int Monomial::support() const noexcept {
  return static_cast<int>(std::count_if(exponents_.begin(), exponents_.end(), [](int e) { return e > 0; }));
}

std::string Monomial::label() const {
  std::string out;
  for (std::size_t a = 0; a < exponents_.size(); ++a) {
    if (exponents_[a] == 0) continue;
    out += "i" + std::to_string(a + 1);
    if (exponents_[a] > 1) out += "^" + std::to_string(exponents_[a]);
  }
  return out.empty() ? "1" : out;
}

Monomial multiply_by_var(const Monomial& m, int alpha) {
  if (alpha < 1 || alpha > m.variables())
    throw std::out_of_range("variable index " + std::to_string(alpha) + " outside 1.." +
                            std::to_string(m.variables()));
  auto e = m.exponents();
  ++e[static_cast<std::size_t>(alpha - 1)];
  return Monomial(std::move(e));
}

SymBasis::SymBasis(int k, int degree, std::vector<Monomial> monomials)
    : k_(k), degree_(degree), monomials_(std::move(monomials)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) positions_.emplace(monomials_[i].exponents(), i + 1);
}

std::size_t SymBasis::index_of(const Monomial& m) const {
  if (m.variables() != k_ || m.degree() != degree_)
    throw std::invalid_argument("monomial " + m.label() + " is not in S^" + std::to_string(degree_) + " of " +
                                std::to_string(k_) + " variables");
  return positions_.at(m.exponents());
}

namespace {

void enumerate(std::vector<int>& e, std::size_t var, int remaining, std::vector<Monomial>& out) {
  if (var + 1 == e.size()) {
    e[var] = remaining;
    out.emplace_back(e);
    return;
  }
  for (int x = remaining; x >= 0; --x) {
    e[var] = x;
    enumerate(e, var + 1, remaining - x, out);
  }
}

}  // namespace

SymBasis sym_basis(int k, int d) {
  if (k < 1) throw std::invalid_argument("sym_basis: k must be at least 1");
  if (d < 0) throw std::invalid_argument("sym_basis: degree must be non-negative");
  std::vector<Monomial> out;
  std::vector<int> e(static_cast<std::size_t>(k), 0);
  enumerate(e, 0, d, out);
  return SymBasis(k, d, std::move(out));
}

std::size_t monomial_index(const SymBasis& basis, const Monomial& m) { return basis.index_of(m); }

QLayout::QLayout(int n, int k) : n_(n), k_(k), cols_(sym_basis(k, n)), rows_(sym_basis(k, n + 1)) {
  grid_.assign(rows_.size() * cols_.size(), 0);
  for (std::size_t j = 1; j <= cols_.size(); ++j)
    for (int alpha = 1; alpha <= k; ++alpha) {
      const std::size_t i = rows_.index_of(multiply_by_var(cols_.at(j), alpha));
      grid_[(i - 1) * cols_.size() + (j - 1)] = alpha;
    }
  for (std::size_t i = 1; i <= rows_.size(); ++i)
    for (std::size_t j = 1; j <= cols_.size(); ++j)
      if (int a = at(i, j)) entries_.push_back({i, j, a});
}

int QLayout::at(std::size_t row, std::size_t col) const {
  if (row < 1 || row > rows_.size() || col < 1 || col > cols_.size())
    throw std::out_of_range("layout position out of range");
  return grid_[(row - 1) * cols_.size() + (col - 1)];
}

QLayout q_layout(int n, int k) {
  if (n < 1) throw std::invalid_argument("q_layout: n must be at least 1");
  if (k < 1) throw std::invalid_argument("q_layout: k must be at least 1");
  return QLayout(n, k);
}

std::string render_layout_table(const QLayout& layout) {
  std::size_t width = ("M" + std::to_string(layout.k())).size();
  for (const auto& m : layout.col_basis().monomials()) width = std::max(width, m.label().size());
  const auto pad = [width](const std::string& s) { return s + std::string(width - s.size(), ' '); };

  std::ostringstream out;
  for (std::size_t i = 1; i <= layout.block_rows(); ++i) {
    for (std::size_t j = 1; j <= layout.block_cols(); ++j) {
      const int a = layout.at(i, j);
      out << "| " << pad(a ? "M" + std::to_string(a) : "") << ' ';
    }
    out << "|| " << layout.row_basis().at(i).label() << '\n';
  }
  for (std::size_t j = 1; j <= layout.block_cols(); ++j) out << "| " << pad(layout.col_basis().at(j).label()) << ' ';
  out << "||\n";
  return out.str();
}

std::string render_layout_csv(const QLayout& layout) {
  std::ostringstream out;
  out << "i,j,alpha\n";
  for (const auto& e : layout.entries()) out << e.row << ',' << e.col << ',' << e.alpha << '\n';
  return out.str();
}

}  // namespace monadlab
