#include "monadlab/gens.hpp"

#include <sstream>

namespace monadlab {

namespace {

bool is_residue(std::uint32_t a, std::uint32_t p) { return a == 0 || pow_mod(a, (p - 1) / 2, p) == 1; }

Zp dot(const Vec<Zp>& a, const Vec<Zp>& b) { return a.dot(b); }

/// Product of random reflections x -> x - 2 (x.v)/(v.v) v, an isometry of the dot product.
Mat<Zp> random_isometry(const Field& f, Index dim, Rng& rng) {
  Mat<Zp> o = identity<Zp>(f, dim);
  const Zp two = make_scalar<Zp>(f, 2);
  for (Index r = 0; r < 2 * dim; ++r) {
    Vec<Zp> v(dim);
    Zp q;
    do {
      for (Index i = 0; i < dim; ++i) v(i) = make_scalar<Zp>(f, static_cast<std::int64_t>(uniform_below(rng, f.modulus())));
      q = dot(v, v);
    } while (q.is_zero());
    const Mat<Zp> ov = o * v;
    o -= (two / q) * ov * v.transpose();
  }
  return o;
}

std::vector<Mat<Zp>> transform(std::vector<Mat<Zp>> blocks, const Mat<Zp>& g) {
  for (auto& b : blocks) b = b * g;
  return blocks;
}

bool products_vanish(const MonadData<Zp>& d) {
  for (int a = 1; a <= d.k(); ++a)
    for (int b = a; b <= d.k(); ++b)
      if (!is_zero(mat_mul(d.block(a), transpose(d.block(b))))) return false;
  return true;
}

GeneratorReport<Zp> finish_orthogonal(MonadData<Zp> data, std::uint64_t seed) {
  PairingForm<Zp> form = canonical_J<Zp>(PairingKind::orthogonal_identity, data.n(), data.k(), data.field());
  const bool defects_ok = !first_nonzero_defect(quadratic_defect(data, form)).has_value();
  if (!defects_ok) throw GeneratorError("orthogonal candidate violates M_a M_b^t + M_b M_a^t = 0");
  RankProbe<Zp> probe = max_rank_probe(data, form, generator_probe_points, derive_seed(seed, 1));
  Zp dq = det_Q(data);
  if (!dq.is_zero()) throw GeneratorError("orthogonal candidate has det Q != 0");
  return {std::move(data), std::move(form), defects_ok, std::move(probe), dq};
}

}  // namespace

std::optional<std::uint32_t> sqrt_mod(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) return 0;
  if (!is_residue(a, p)) return std::nullopt;
  if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
  // Tonelli-Shanks
  std::uint32_t q = p - 1, s = 0;
  while (q % 2 == 0) q /= 2, ++s;
  std::uint32_t z = 2;
  while (is_residue(z, p)) ++z;
  std::uint64_t m = s, c = pow_mod(z, q, p), t = pow_mod(a, q, p), r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) tt = tt * tt % p, ++i;
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

Mat<Zp> isotropic_basis(Index dim, std::uint32_t p) {
  const Field f = Field::prime(p);
  std::vector<Vec<Zp>> rows;
  const auto put = [&](std::initializer_list<std::pair<Index, std::int64_t>> entries) {
    Vec<Zp> v = Vec<Zp>::Constant(dim, make_scalar<Zp>(f, 0));
    for (auto [i, x] : entries) v(i) = make_scalar<Zp>(f, x);
    rows.push_back(std::move(v));
  };
  if (auto i = sqrt_mod(p - 1, p)) {
    for (Index t = 0; 2 * t + 1 < dim; ++t) put({{2 * t, 1}, {2 * t + 1, *i}});
  } else {
    // a^2 + b^2 = -1 always has a solution mod an odd prime
    std::int64_t a = 0, b = 0;
    for (std::uint32_t x = 0; x < p; ++x) {
      auto y = sqrt_mod(static_cast<std::uint32_t>((2ULL * p - 1 - std::uint64_t{x} * x % p) % p), p);
      if (y) {
        a = x, b = *y;
        break;
      }
    }
    Index q = 0;
    for (; 4 * q + 3 < dim; ++q) {
      put({{4 * q, 1}, {4 * q + 2, a}, {4 * q + 3, b}});
      put({{4 * q + 1, 1}, {4 * q + 2, b}, {4 * q + 3, -a}});
    }
    if (dim - 4 * q == 3) put({{4 * q, a}, {4 * q + 1, b}, {4 * q + 2, 1}});
  }
  if (rows.empty()) throw std::invalid_argument("no isotropic vectors in dimension " + std::to_string(dim));
  Mat<Zp> u(static_cast<Index>(rows.size()), dim);
  for (std::size_t r = 0; r < rows.size(); ++r) u.row(static_cast<Index>(r)) = rows[r].transpose();
  return u;
}

Mat<Zp> random_matrix(const Field& field, Index rows, Index cols, Rng& rng) {
  Mat<Zp> m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      m(i, j) = make_scalar<Zp>(field, static_cast<std::int64_t>(uniform_below(rng, field.modulus())));
  return m;
}

GeneratorReport<Zp> gen_isotropic_orthogonal(int n, int k, std::uint32_t p, std::uint64_t seed) {
  if (n < 1 || k < 1) throw std::invalid_argument("gen_isotropic_orthogonal needs n >= 1 and k >= 1");
  const Field f = Field::prime(p);
  const Index wdim = 2 * n + 2 * k, vdim = 2 * n + 2;
  Rng rng(seed);
  const Mat<Zp> u = isotropic_basis(wdim, p) * random_isometry(f, wdim, rng);

  std::vector<Mat<Zp>> blocks;
  do {
    blocks.clear();
    for (int j = 0; j < k; ++j) blocks.push_back(random_matrix(f, vdim, u.rows(), rng) * u);
  } while (MonadData<Zp>(n, k, f, blocks).all_blocks_zero());

  MonadData<Zp> data(n, k, f, std::move(blocks));
  if (!products_vanish(data)) throw GeneratorError("isotropic blocks have M_a M_b^t != 0");
  return finish_orthogonal(std::move(data), seed);
}

GeneratorReport<Zp> gen_skew_orthogonal(int n, int k, std::uint32_t p, std::uint64_t seed) {
  if (n < 1 || k < 2) throw std::invalid_argument("gen_skew_orthogonal needs n >= 1 and k >= 2");
  const auto i = sqrt_mod(p - 1, p);
  if (!i) throw std::invalid_argument("gen_skew_orthogonal needs p = 1 mod 4");
  const Field f = Field::prime(p);
  const Index wdim = 2 * n + 2 * k, vdim = 2 * n + 2, pairs = n + k;
  Rng rng(seed);

  // f_t = e_{2t} + i e_{2t+1} and g_t = e_{2t} - i e_{2t+1}: isotropic, f_s.g_t = 2 [s = t]
  const auto fvec = [&](Index t, std::int64_t sign) {
    Vec<Zp> v = Vec<Zp>::Constant(wdim, make_scalar<Zp>(f, 0));
    v(2 * t) = make_scalar<Zp>(f, 1);
    v(2 * t + 1) = make_scalar<Zp>(f, sign * *i);
    return v;
  };
  const Mat<Zp> iso = random_isometry(f, wdim, rng);

  for (;;) {
    const Mat<Zp> a = random_matrix(f, vdim, 2, rng);
    const Vec<Zp> a1 = a.col(0), a2 = a.col(1);
    std::vector<Mat<Zp>> blocks;
    blocks.push_back(a1 * fvec(0, 1).transpose() + a2 * fvec(1, 1).transpose());
    blocks.push_back(a2 * fvec(0, -1).transpose() - a1 * fvec(1, -1).transpose());
    Mat<Zp> rest(pairs - 2, wdim);
    for (Index t = 2; t < pairs; ++t) rest.row(t - 2) = fvec(t, 1).transpose();
    for (int j = 2; j < k; ++j) blocks.push_back(random_matrix(f, vdim, rest.rows(), rng) * rest);

    MonadData<Zp> data(n, k, f, transform(std::move(blocks), iso));
    if (is_zero(mat_mul(data.block(1), transpose(data.block(2))))) continue;
    return finish_orthogonal(std::move(data), seed);
  }
}

SearchSummary search_orthogonal(int n, int k, std::uint32_t p, std::size_t trials, std::uint64_t seed,
                                std::size_t probe_points) {
  if (trials < 1) throw std::invalid_argument("search_orthogonal needs at least one trial");
  SearchSummary summary{n, k, p, seed, {}};
  const Field f = Field::prime(p);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t s = derive_seed(seed, t);
    GeneratorReport<Zp> draw = gen_isotropic_orthogonal(n, k, p, s);

    // row operations across all blocks keep every row inside U
    Rng rng(derive_seed(s, 2));
    std::vector<Mat<Zp>> blocks = draw.data.blocks();
    const Index vdim = draw.data.v_dim();
    const std::size_t ops = static_cast<std::size_t>(k * vdim);
    for (std::size_t o = 0; o < ops; ++o) {
      const auto a = uniform_below(rng, static_cast<std::uint64_t>(k)), b = uniform_below(rng, static_cast<std::uint64_t>(k));
      const auto r = static_cast<Index>(uniform_below(rng, static_cast<std::uint64_t>(vdim)));
      const auto q = static_cast<Index>(uniform_below(rng, static_cast<std::uint64_t>(vdim)));
      if (a == b && r == q) continue;
      const Zp c = make_scalar<Zp>(f, uniform_in(rng, 1, p - 1));
      const Mat<Zp> source = blocks[b].row(q);
      blocks[a].row(r) += c * source;
    }
    MonadData<Zp> data(n, k, f, std::move(blocks));

    const PairingForm<Zp> form = canonical_J<Zp>(PairingKind::orthogonal_identity, n, k, f);
    const bool defects_ok = !first_nonzero_defect(quadratic_defect(data, form)).has_value();
    const bool det_zero = det_Q(data).is_zero();
    const bool counterexample = !max_rank_probe(data, form, probe_points, derive_seed(s, 3)).ok();
    SearchRow row{s, defects_ok, det_zero, counterexample, std::move(data)};
    summary.defects_ok += defects_ok;
    summary.det_q_zero += det_zero;
    summary.rank_counterexamples += counterexample;
    summary.instanton_candidates += row.instanton();
    summary.rows.push_back(std::move(row));
  }
  return summary;
}

std::string render_search_table(const SearchSummary& summary) {
  const auto flag = [](bool b) { return b ? "true" : "false"; };
  std::ostringstream out;
  out << "seed defects_ok detQ_zero rank_counterexample\n";
  for (const auto& r : summary.rows)
    out << r.seed << ' ' << flag(r.defects_ok) << ' ' << flag(r.det_q_zero) << ' ' << flag(r.rank_counterexample)
        << '\n';
  out << "summary n=" << summary.n << " k=" << summary.k << " field=gf:" << summary.p
      << " trials=" << summary.rows.size() << " defects_ok=" << summary.defects_ok
      << " detQ_zero=" << summary.det_q_zero << " rank_counterexample=" << summary.rank_counterexamples
      << " instanton_candidates=" << summary.instanton_candidates << '\n';
  return out.str();
}

}  // namespace monadlab
