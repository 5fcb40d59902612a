#pragma once

// The matrix Q of W (x) S^n I -> V (x) S^{n+1} I induced by M, its
// determinant, and the syzygy S that kills Q whenever the orthogonal
// quadratic conditions hold.

#include <optional>
#include <string>
#include <vector>

#include "monadlab/monad.hpp"
#include "monadlab/symcomb.hpp"

namespace monadlab {

struct DimensionIdentity {
  Integer lhs;  // (2n+2k) C(k+n-1, n) = dim W (x) S^n I
  Integer rhs;  // (2n+2) C(k+n, n+1) = dim V (x) S^{n+1} I
  bool equal;
};

/// Throws std::invalid_argument for n < 1 or k < 1.
DimensionIdentity dimension_identity(int n, int k);

template <class S>
struct QMatrix {
  QLayout layout;
  Mat<S> matrix;
};

/// Block (i, j) of Q is M_alpha when eta_i = zeta_j * i_alpha, zero otherwise.
template <class S>
QMatrix<S> build_Q(const MonadData<S>& d) {
  QLayout layout = q_layout(d.n(), d.k());
  const Index vr = d.v_dim(), wc = d.w_dim();
  Mat<S> q = zeros<S>(d.field(), vr * static_cast<Index>(layout.block_rows()),
                      wc * static_cast<Index>(layout.block_cols()));
  for (const auto& e : layout.entries())
    q.block(vr * static_cast<Index>(e.row - 1), wc * static_cast<Index>(e.col - 1), vr, wc) = d.block(e.alpha);
  return {std::move(layout), std::move(q)};
}

template <class S>
S det_Q(const MonadData<S>& d) {
  return det(build_Q(d).matrix);
}

template <class S>
struct SyzygyMatrix {
  Mat<S> matrix;
};

/// S = (M_1^t; ...; M_k^t; 0; ...; 0): block row of zeta = i_1^{n-1} i_alpha
/// holds M_alpha^t, all others are zero.
template <class S>
SyzygyMatrix<S> build_syzygy(const MonadData<S>& d) {
  const SymBasis cols = sym_basis(d.k(), d.n());
  const Index wc = d.w_dim();
  Mat<S> s = zeros<S>(d.field(), wc * static_cast<Index>(cols.size()), d.v_dim());
  std::vector<int> base(static_cast<std::size_t>(d.k()), 0);
  base[0] = d.n() - 1;
  const Monomial prefix(base);
  for (int a = 1; a <= d.k(); ++a) {
    const std::size_t j = cols.index_of(multiply_by_var(prefix, a));
    s.middleRows(wc * static_cast<Index>(j - 1), wc) = d.block(a).transpose();
  }
  return {std::move(s)};
}

template <class S>
struct SyzygyReport {
  Mat<S> residual;                            // Q S
  bool residual_zero = false;
  bool syzygy_nonzero = false;
  std::vector<Defect<S>> defects;             // under J = I
  bool defects_zero = false;
  std::vector<std::size_t> nonzero_block_rows;  // 1-based rows of S^{n+1} I basis

  /// The syzygy argument needs S != 0 and the orthogonal conditions.
  bool fact_applicable() const noexcept { return syzygy_nonzero && defects_zero; }
};

/// Residual Q S together with the orthogonal defects. Throws std::logic_error
/// if the defects vanish but the residual does not.
template <class S>
SyzygyReport<S> verify_syzygy(const MonadData<S>& d) {
  const QMatrix<S> q = build_Q(d);
  const SyzygyMatrix<S> s = build_syzygy(d);
  SyzygyReport<S> r;
  r.residual = mat_mul(q.matrix, s.matrix);
  r.residual_zero = is_zero(r.residual);
  r.syzygy_nonzero = !is_zero(s.matrix);
  r.defects = quadratic_defect(d, canonical_J<S>(PairingKind::orthogonal_identity, d.n(), d.k(), d.field()));
  r.defects_zero = !first_nonzero_defect(r.defects).has_value();
  const Index vr = d.v_dim();
  for (std::size_t i = 1; i <= q.layout.block_rows(); ++i)
    if (!is_zero(r.residual.middleRows(vr * static_cast<Index>(i - 1), vr))) r.nonzero_block_rows.push_back(i);
  if (r.defects_zero && !r.residual_zero)
    throw std::logic_error("orthogonal conditions hold but Q S is nonzero");
  return r;
}

enum class OrthogonalOutcome { not_instanton, conditions_violated, degenerate };

template <class S>
struct OrthogonalVerdict {
  OrthogonalOutcome outcome;
  std::optional<std::pair<int, int>> violated;  // first nonzero (alpha, beta)
  std::optional<S> det_q;

  std::string describe() const {
    switch (outcome) {
      case OrthogonalOutcome::not_instanton:
        return "not an instanton: det Q = 0 by syzygy";
      case OrthogonalOutcome::conditions_violated:
        return "orthogonal conditions violated at (alpha,beta)=(" + std::to_string(violated->first) + "," +
               std::to_string(violated->second) + ")";
      case OrthogonalOutcome::degenerate:
        return "degenerate: A = 0, never maximal rank";
    }
    return {};
  }
};

/// Data satisfying the orthogonal conditions with some M_j != 0 has Q S = 0,
/// S != 0, hence det Q = 0 and cannot come from an instanton.
template <class S>
OrthogonalVerdict<S> orthogonal_verdict(const MonadData<S>& d) {
  if (d.all_blocks_zero()) return {OrthogonalOutcome::degenerate, std::nullopt, std::nullopt};
  const SyzygyReport<S> r = verify_syzygy(d);
  if (!r.defects_zero) return {OrthogonalOutcome::conditions_violated, first_nonzero_defect(r.defects), std::nullopt};
  S dq = det_Q(d);
  if (!is_zero(dq) || !r.residual_zero || !r.syzygy_nonzero)
    throw std::logic_error("syzygy present but det Q is nonzero");
  return {OrthogonalOutcome::not_instanton, std::nullopt, std::move(dq)};
}

/// M_j -> M_j g for g acting on W.
template <class S>
MonadData<S> act_on_W(const MonadData<S>& d, const Mat<S>& g) {
  std::vector<Mat<S>> blocks;
  for (const auto& b : d.blocks()) blocks.push_back(mat_mul(b, g));
  return MonadData<S>(d.n(), d.k(), d.field(), std::move(blocks));
}

/// M_j -> h M_j for h acting on V.
template <class S>
MonadData<S> act_on_V(const MonadData<S>& d, const Mat<S>& h) {
  std::vector<Mat<S>> blocks;
  for (const auto& b : d.blocks()) blocks.push_back(mat_mul(h, b));
  return MonadData<S>(d.n(), d.k(), d.field(), std::move(blocks));
}

/// M'_beta = sum_alpha c(beta, alpha) M_alpha for c acting on I.
template <class S>
MonadData<S> act_on_I(const MonadData<S>& d, const Mat<S>& c) {
  if (c.rows() != d.k() || c.cols() != d.k()) throw DimensionMismatch("act_on_I needs a k x k matrix");
  std::vector<Mat<S>> blocks;
  for (int b = 0; b < d.k(); ++b) {
    Mat<S> m = zeros<S>(d.field(), d.v_dim(), d.w_dim());
    for (int a = 0; a < d.k(); ++a) m += c(b, a) * d.blocks()[static_cast<std::size_t>(a)];
    blocks.push_back(std::move(m));
  }
  return MonadData<S>(d.n(), d.k(), d.field(), std::move(blocks));
}

}  // namespace monadlab
