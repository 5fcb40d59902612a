#pragma once

// Test-data generators. Every generator rechecks its claims through the
// public defect, probe and invariant operations before returning.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monadlab/invariant.hpp"
#include "monadlab/monad.hpp"
#include "monadlab/random.hpp"

namespace monadlab {

inline constexpr std::size_t generator_probe_points = 50;
inline constexpr std::uint64_t generator_probe_seed = 0;

template <class S>
struct GeneratorReport {
  MonadData<S> data;
  PairingForm<S> form;
  bool defects_ok;  // recomputed from data
  RankProbe<S> rank_probe;
  std::optional<S> det_q;
};

/// Special symplectic monad with A = (X | Y R): X, Y the k x (n+k) banded
/// Toeplitz matrices in x_0..x_n and y_0..y_n (row j holds the coordinates
/// shifted j places) and R the column reversal, so A J A^t = X R Y^t - Y R X^t
/// vanishes for the canonical skew J. Throws GeneratorError if the
/// self-check fails.
template <class S>
GeneratorReport<S> gen_special_symplectic(int n, int k, const Field& field) {
  if (n < 1 || k < 1) throw std::invalid_argument("gen_special_symplectic needs n >= 1 and k >= 1");
  const Index half = n + k;
  std::vector<Mat<S>> blocks;
  for (Index j = 0; j < k; ++j) {
    Mat<S> m = zeros<S>(field, 2 * n + 2, 2 * half);
    for (Index c = 0; c <= n; ++c) {
      m(c, j + c) = make_scalar<S>(field, 1);                         // x_c at X(j, j+c)
      m(n + 1 + c, half + (half - 1 - j - c)) = make_scalar<S>(field, 1);  // y_c at (Y R)(j, n+k-1-j-c)
    }
    blocks.push_back(std::move(m));
  }
  MonadData<S> data(n, k, field, std::move(blocks));
  PairingForm<S> form = canonical_J<S>(PairingKind::symplectic_canonical, n, k, field);

  const bool defects_ok = !first_nonzero_defect(quadratic_defect(data, form)).has_value();
  if (!defects_ok) throw GeneratorError("special symplectic data violate A J A^t = 0");
  RankProbe<S> probe = max_rank_probe(data, form, generator_probe_points, generator_probe_seed);
  if (!probe.ok()) throw GeneratorError("special symplectic data fail the maximal-rank probe");
  S dq = det_Q(data);
  return {std::move(data), std::move(form), defects_ok, std::move(probe), std::move(dq)};
}

/// Basis (as rows) of a maximal totally isotropic subspace of gf(p)^dim for
/// the dot product: dim/2 when -1 is a square or dim = 0 mod 4, else dim/2-1
/// for even dim. Throws std::invalid_argument when none exists.
Mat<Zp> isotropic_basis(Index dim, std::uint32_t p);

/// Square root of a quadratic residue mod p, nullopt for non-residues.
std::optional<std::uint32_t> sqrt_mod(std::uint32_t a, std::uint32_t p);

/// Random product of elementary transvections: determinant exactly 1.
template <class S>
Mat<S> random_unimodular(const Field& field, Index size, Rng& rng, std::size_t steps = 0) {
  Mat<S> g = identity<S>(field, size);
  if (size < 2) return g;
  if (steps == 0) steps = static_cast<std::size_t>(4 * size * size);
  for (std::size_t s = 0; s < steps; ++s) {
    const Index i = static_cast<Index>(uniform_below(rng, static_cast<std::uint64_t>(size)));
    Index j = static_cast<Index>(uniform_below(rng, static_cast<std::uint64_t>(size - 1)));
    if (j >= i) ++j;
    std::int64_t c = field.is_prime() ? uniform_in(rng, 1, field.modulus() - 1) : uniform_in(rng, -2, 2);
    if (c == 0) c = 1;
    g.row(i) += make_scalar<S>(field, c) * g.row(j);
  }
  return g;
}

/// Random gf(p) matrix.
Mat<Zp> random_matrix(const Field& field, Index rows, Index cols, Rng& rng);

/// Blocks whose rows all lie in a random maximal totally isotropic subspace U,
/// so M_a M_b^t = 0 for all a, b. Throws GeneratorError if the self-check fails.
GeneratorReport<Zp> gen_isotropic_orthogonal(int n, int k, std::uint32_t p, std::uint64_t seed);

/// Orthogonal-condition data with M_1 M_2^t skew and nonzero (k >= 2, p = 1 mod 4).
GeneratorReport<Zp> gen_skew_orthogonal(int n, int k, std::uint32_t p, std::uint64_t seed);

struct SearchRow {
  std::uint64_t seed;
  bool defects_ok;
  bool det_q_zero;
  bool rank_counterexample;
  MonadData<Zp> data;
  /// Passes every checked instanton requirement.
  bool instanton() const noexcept { return defects_ok && !det_q_zero && !rank_counterexample; }
};

struct SearchSummary {
  int n, k;
  std::uint32_t p;
  std::uint64_t seed;
  std::vector<SearchRow> rows;
  std::size_t defects_ok = 0, det_q_zero = 0, rank_counterexamples = 0, instanton_candidates = 0;
};

/// `trials` isotropic draws, each followed by random row operations inside U,
/// all rechecked from scratch. Throws std::invalid_argument for trials = 0.
SearchSummary search_orthogonal(int n, int k, std::uint32_t p, std::size_t trials, std::uint64_t seed,
                                std::size_t probe_points = generator_probe_points);

/// Table `seed defects_ok detQ_zero rank_counterexample` plus a summary line.
std::string render_search_table(const SearchSummary& summary);

}  // namespace monadlab
