#pragma once

// Monad data: the blocks M_1..M_k packaging the linear-form matrix A, pairing
// forms J, quadratic-condition defects and maximal-rank probes.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "monadlab/linalg.hpp"
#include "monadlab/random.hpp"

namespace monadlab {

/// (n, k, field, M_1..M_k), each block (2n+2) x (2n+2k).
template <class S>
class MonadData {
 public:
  using scalar_type = S;

  /// Validates shapes and binds every entry to `field`.
  /// Throws std::invalid_argument, DimensionMismatch or FieldMismatch.
  MonadData(int n, int k, Field field, std::vector<Mat<S>> blocks)
      : n_(n), k_(k), field_(field), blocks_(std::move(blocks)) {
    if (n < 1 || k < 1) throw std::invalid_argument("monad needs n >= 1 and k >= 1");
    if (!scalar_traits<S>::accepts(field))
      throw FieldMismatch("scalar type does not match field " + field.to_string());
    if (static_cast<int>(blocks_.size()) != k)
      throw DimensionMismatch("monad with k=" + std::to_string(k) + " has " + std::to_string(blocks_.size()) +
                              " blocks");
    for (auto& b : blocks_) {
      if (b.rows() != v_dim() || b.cols() != w_dim())
        throw DimensionMismatch("block is " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                                ", expected " + std::to_string(v_dim()) + "x" + std::to_string(w_dim()));
      conform(b, field_);
    }
  }

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  const Field& field() const noexcept { return field_; }
  /// dim V = 2n+2, the rows of each block.
  Index v_dim() const noexcept { return 2 * n_ + 2; }
  /// dim W = 2n+2k, the columns of each block.
  Index w_dim() const noexcept { return 2 * n_ + 2 * k_; }
  const std::vector<Mat<S>>& blocks() const noexcept { return blocks_; }
  /// M_alpha, 1-based.
  const Mat<S>& block(int alpha) const { return blocks_.at(static_cast<std::size_t>(alpha - 1)); }
  bool all_blocks_zero() const {
    for (const auto& b : blocks_)
      if (!is_zero(b)) return false;
    return true;
  }

  friend bool operator==(const MonadData& a, const MonadData& b) {
    if (a.n_ != b.n_ || a.k_ != b.k_ || !(a.field_ == b.field_)) return false;
    for (std::size_t i = 0; i < a.blocks_.size(); ++i)
      if (!(a.blocks_[i] == b.blocks_[i])) return false;
    return true;
  }

 private:
  int n_, k_;
  Field field_;
  std::vector<Mat<S>> blocks_;
};

/// A point of P^{2n+1}: 2n+2 coordinates, not all zero.
template <class S>
class Point {
 public:
  explicit Point(Vec<S> coords) : coords_(std::move(coords)) {
    if (is_zero(coords_)) throw std::invalid_argument("the zero vector is not a projective point");
  }
  const Vec<S>& coords() const noexcept { return coords_; }

 private:
  Vec<S> coords_;
};

enum class PairingKind { orthogonal_identity, symplectic_canonical, custom };

std::string to_string(PairingKind kind);

/// Non-degenerate symmetric or skew-symmetric form J on W.
template <class S>
class PairingForm {
 public:
  /// Throws std::invalid_argument unless `matrix` is invertible and symmetric or skew.
  static PairingForm custom(Mat<S> matrix) { return PairingForm(PairingKind::custom, std::move(matrix)); }

  PairingKind kind() const noexcept { return kind_; }
  const Mat<S>& matrix() const noexcept { return matrix_; }
  bool symmetric() const { return is_symmetric(matrix_); }
  bool skew() const { return is_skew(matrix_); }

 private:
  template <class T>
  friend PairingForm<T> canonical_J(PairingKind, int, int, const Field&);

  PairingForm(PairingKind kind, Mat<S> matrix) : kind_(kind), matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols()) throw std::invalid_argument("pairing form must be square");
    if (!is_symmetric(matrix_) && !is_skew(matrix_))
      throw std::invalid_argument("pairing form must be symmetric or skew-symmetric");
    if (is_zero(det(matrix_))) throw std::invalid_argument("pairing form is degenerate");
  }

  PairingKind kind_;
  Mat<S> matrix_;
};

/// I_{2n+2k}, or [[0, I], [-I, 0]] with (n+k)-sized blocks.
template <class S>
PairingForm<S> canonical_J(PairingKind kind, int n, int k, const Field& field) {
  const Index w = 2 * n + 2 * k, h = n + k;
  switch (kind) {
    case PairingKind::orthogonal_identity:
      return PairingForm<S>(kind, identity<S>(field, w));
    case PairingKind::symplectic_canonical: {
      Mat<S> j = zeros<S>(field, w, w);
      for (Index i = 0; i < h; ++i) {
        j(i, h + i) = make_scalar<S>(field, 1);
        j(h + i, i) = make_scalar<S>(field, -1);
      }
      return PairingForm<S>(kind, std::move(j));
    }
    case PairingKind::custom:
      break;
  }
  throw std::invalid_argument("canonical_J: no canonical matrix for a custom form");
}

/// Stacked M = (M_1; ...; M_k), a k(2n+2) x (2n+2k) matrix.
template <class S>
Mat<S> assemble_M(const MonadData<S>& d) {
  Mat<S> m = zeros<S>(d.field(), d.k() * d.v_dim(), d.w_dim());
  for (int a = 1; a <= d.k(); ++a) m.middleRows((a - 1) * d.v_dim(), d.v_dim()) = d.block(a);
  return m;
}

namespace detail {
template <class S>
void require_point(const MonadData<S>& d, const Point<S>& x) {
  if (x.coords().size() != d.v_dim())
    throw DimensionMismatch("point has " + std::to_string(x.coords().size()) + " coordinates, expected " +
                            std::to_string(d.v_dim()));
  const std::uint32_t p = modulus_of(x.coords());
  if (p != 0 && p != d.field().modulus()) throw FieldMismatch("point is not over " + d.field().to_string());
}
}  // namespace detail

/// A(x): row j is x^t M_j.
template <class S>
Mat<S> evaluate_A(const MonadData<S>& d, const Point<S>& x) {
  detail::require_point(d, x);
  Mat<S> a = zeros<S>(d.field(), d.k(), d.w_dim());
  for (int j = 1; j <= d.k(); ++j) a.row(j - 1) = x.coords().transpose() * d.block(j);
  return a;
}

/// B(x) = A(x) J.
template <class S>
Mat<S> evaluate_B(const MonadData<S>& d, const PairingForm<S>& form, const Point<S>& x) {
  if (form.matrix().rows() != d.w_dim())
    throw DimensionMismatch("pairing form size does not match dim W = " + std::to_string(d.w_dim()));
  return mat_mul(evaluate_A(d, x), form.matrix());
}

/// D_{alpha beta} = M_alpha J M_beta^t + (M_alpha J M_beta^t)^t for alpha <= beta.
template <class S>
struct Defect {
  int alpha;
  int beta;
  Mat<S> value;
};

/// A(x) J A(x)^t vanishes identically iff every defect is zero. With J = I
/// these are the conditions M_a M_b^t + M_b M_a^t = 0.
template <class S>
std::vector<Defect<S>> quadratic_defect(const MonadData<S>& d, const PairingForm<S>& form) {
  if (form.matrix().rows() != d.w_dim())
    throw DimensionMismatch("pairing form size does not match dim W = " + std::to_string(d.w_dim()));
  std::vector<Defect<S>> out;
  for (int a = 1; a <= d.k(); ++a) {
    const Mat<S> left = mat_mul(d.block(a), form.matrix());
    for (int b = a; b <= d.k(); ++b) {
      Mat<S> prod = mat_mul(left, transpose(d.block(b)));
      Mat<S> sym = prod + prod.transpose();
      out.push_back({a, b, std::move(sym)});
    }
  }
  return out;
}

/// First (alpha, beta) with a nonzero defect, in (alpha, beta) order.
template <class S>
std::optional<std::pair<int, int>> first_nonzero_defect(const std::vector<Defect<S>>& defects) {
  for (const auto& d : defects)
    if (!is_zero(d.value)) return std::pair{d.alpha, d.beta};
  return std::nullopt;
}

enum class MonadMap { alpha, beta };

template <class S>
struct RankCounterexample {
  Vec<S> point;
  MonadMap map;
  Index observed_rank;
};

/// Outcome of Monte Carlo rank sampling. `ok()` is evidence; a counterexample is a certificate.
template <class S>
struct RankProbe {
  std::optional<RankCounterexample<S>> counterexample;
  std::size_t points_checked = 0;
  bool ok() const noexcept { return !counterexample.has_value(); }
};

inline constexpr std::int64_t default_point_box = 10;

/// Samples `trials` nonzero points and checks rank A(x) = k (alpha onto) and
/// rank B(x) = k (beta = B^t injective). Over gf(p) points are distinct
/// vectors, capped at the p^(2n+2) - 1 available; over the rationals they are
/// integer vectors in [-box, box]^(2n+2).
template <class S>
RankProbe<S> max_rank_probe(const MonadData<S>& d, const PairingForm<S>& form, std::size_t trials,
                            std::uint64_t seed, std::int64_t box = default_point_box) {
  if (trials < 1) throw std::invalid_argument("max_rank_probe needs at least one trial");
  if (box < 1) throw std::invalid_argument("max_rank_probe needs a positive sampling box");
  Rng rng(seed);
  const Field& f = d.field();
  RankProbe<S> probe;

  std::size_t budget = trials;
  if (f.is_prime()) {
    // number of nonzero vectors, saturating
    std::uint64_t total = 1;
    for (Index i = 0; i < d.v_dim() && total <= trials; ++i) total *= f.modulus();
    budget = std::min<std::uint64_t>(trials, total - 1);
  }

  std::set<std::vector<std::int64_t>> seen;
  while (probe.points_checked < budget) {
    std::vector<std::int64_t> raw(static_cast<std::size_t>(d.v_dim()));
    bool nonzero = false;
    for (auto& c : raw) {
      c = f.is_prime() ? static_cast<std::int64_t>(uniform_below(rng, f.modulus())) : uniform_in(rng, -box, box);
      nonzero = nonzero || c != 0;
    }
    if (!nonzero) continue;
    if (f.is_prime() && !seen.insert(raw).second) continue;

    Vec<S> coords(d.v_dim());
    for (Index i = 0; i < d.v_dim(); ++i) coords(i) = make_scalar<S>(f, raw[static_cast<std::size_t>(i)]);
    const Point<S> x(coords);
    ++probe.points_checked;

    const Mat<S> a = evaluate_A(d, x);
    if (Index r = rank(a); r < d.k()) {
      probe.counterexample = RankCounterexample<S>{coords, MonadMap::alpha, r};
      return probe;
    }
    if (Index r = rank(mat_mul(a, form.matrix())); r < d.k()) {
      probe.counterexample = RankCounterexample<S>{coords, MonadMap::beta, r};
      return probe;
    }
  }
  return probe;
}

/// [c_0, c_2, c_4, ...] of (1 - t^2)^{-k}: c_{2m} = C(k+m-1, m).
/// Throws std::invalid_argument for k < 1 or terms < 1.
std::vector<Integer> chern_coefficients(int k, int terms);

}  // namespace monadlab
