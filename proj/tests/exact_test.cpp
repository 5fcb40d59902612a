#include <gtest/gtest.h>

#include "monadlab/linalg.hpp"
#include "oracles.hpp"

namespace monadlab {
namespace {

Mat<Rational> rmat(std::initializer_list<std::initializer_list<int>> rows) {
  Mat<Rational> m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (auto r : rows) {
    Index j = 0;
    for (int v : r) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

constexpr std::uint32_t kPrimes[] = {101, 32003, 65537};

TEST(Rational, CanonicalParse) {
  EXPECT_EQ(Rational::parse("-3/4"), Rational(Integer(-3), Integer(4)));
  EXPECT_EQ(Rational::parse("7").to_string(), "7");
  EXPECT_EQ(Rational(Integer(6), Integer(-4)).to_string(), "-3/2");
  for (const char* bad : {"2/4", "1/-2", "-0", "1/0", "+1", "01", "1/1", "", "1.5", "a", "3/"})
    EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
}

TEST(Rational, Arithmetic) {
  const Rational a = Rational::parse("1/3"), b = Rational::parse("-1/6");
  EXPECT_EQ((a + b).to_string(), "1/6");
  EXPECT_EQ((a * b).to_string(), "-1/18");
  EXPECT_EQ((a / b).to_string(), "-2");
  EXPECT_THROW(a / Rational(0), std::domain_error);
}

TEST(Zp, FieldAxiomsInGF7) {
  for (int x = 1; x < 7; ++x) {
    const Zp z(x, 7);
    EXPECT_EQ(z * z.inverse(), Zp(1, 7));
    EXPECT_EQ(z + (-z), Zp(0, 7));
  }
  EXPECT_EQ(Zp(-1, 7).value(), 6);
  EXPECT_EQ((Zp(5, 7) + Zp(4, 7)).value(), 2);
  EXPECT_EQ((Zp(3, 7) / Zp(5, 7)).value(), 2);  // 2 * 5 = 10 = 3
  EXPECT_THROW(Zp(0, 7).inverse(), std::domain_error);
}

TEST(Zp, UnboundConstantsAdoptModulus) {
  const Zp one(1);
  EXPECT_FALSE(one.is_bound());
  const Zp s = Zp(6, 7) + one;
  EXPECT_TRUE(s.is_bound());
  EXPECT_EQ(s.value(), 0);
  EXPECT_EQ(Zp(8), Zp(1, 7));
  EXPECT_THROW(Zp(1, 5) + Zp(1, 7), FieldMismatch);
  EXPECT_THROW(Zp(1, 5).bind(7), FieldMismatch);
}

TEST(Zp, ParseRejectsNonCanonical) {
  EXPECT_EQ(Zp::parse("100", 101).value(), 100);
  for (const char* bad : {"101", "-1", "01", "", "x"}) EXPECT_THROW(Zp::parse(bad, 101), ParseError) << bad;
}

TEST(Field, ParseAndValidate) {
  EXPECT_TRUE(Field::parse("rational").is_rational());
  EXPECT_EQ(Field::parse("gf:32003").modulus(), 32003u);
  EXPECT_EQ(Field::prime(65537).to_string(), "gf:65537");
  for (const char* bad : {"gf:2", "gf:9", "gf:1", "gf:", "gf:007", "gf:2147483659", "real"})
    EXPECT_THROW(Field::parse(bad), ParseError) << bad;
  EXPECT_THROW(Field::prime(2), std::invalid_argument);
  EXPECT_NO_THROW(Field::prime(2147483647));
}

TEST(MatMul, Examples) {
  Rng rng(1);
  const Mat<Rational> x = oracle::random_int_matrix(rng, 3, 4);
  EXPECT_EQ(mat_mul(identity<Rational>(Field::rational(), 3), x), x);
  EXPECT_TRUE(is_zero(mat_mul(zeros<Rational>(Field::rational(), 2, 3), x.topRows(3).eval())));
  EXPECT_EQ(mat_mul(zeros<Rational>(Field::rational(), 2, 3), x.topRows(3).eval()).cols(), 4);

  const Mat<Rational> a = rmat({{1, 2}, {3, 4}}), b = rmat({{0, 1}, {1, 0}});
  EXPECT_EQ(oracle::naive_mul(a, b), rmat({{2, 1}, {4, 3}}));
  EXPECT_EQ(mat_mul(a, b), rmat({{2, 1}, {4, 3}}));
}

TEST(MatMul, Errors) {
  EXPECT_THROW(mat_mul(rmat({{1, 2}}), rmat({{1, 2}})), DimensionMismatch);
  Rng rng(2);
  EXPECT_THROW(mat_mul(oracle::random_gf_matrix(rng, 2, 2, 5), oracle::random_gf_matrix(rng, 2, 2, 7)),
               FieldMismatch);
}

TEST(Transpose, Examples) {
  const Mat<Rational> i4 = identity<Rational>(Field::rational(), 4);
  EXPECT_EQ(transpose(i4), i4);
  Rng rng(3);
  const Mat<Rational> x = oracle::random_int_matrix(rng, 3, 5);
  EXPECT_EQ(transpose(transpose(x)), x);
  const Mat<Rational> row = rmat({{1, 2, 3}});
  const Mat<Rational> col = transpose(row);
  EXPECT_EQ(col.rows(), 3);
  EXPECT_EQ(col.cols(), 1);
  EXPECT_EQ(col(2, 0), Rational(3));
}

TEST(Det, Examples) {
  for (Index n = 0; n <= 5; ++n) {
    EXPECT_EQ(det(identity<Rational>(Field::rational(), n)), Rational(1));
    EXPECT_EQ(det(identity<Zp>(Field::prime(101), n)), Zp(1));
  }
  EXPECT_EQ(det(rmat({{1, 2, 3}, {4, 5, 6}, {1, 2, 3}})), Rational(0));
  const Mat<Rational> a = rmat({{1, 2}, {3, 4}});
  EXPECT_EQ(oracle::cofactor_det(a), Rational(-2));
  EXPECT_EQ(det(a), Rational(-2));
  EXPECT_EQ(det(oracle::reduce(a, 7)), Zp(5, 7));
  EXPECT_THROW(det(rmat({{1, 2}})), DimensionMismatch);
  EXPECT_THROW(det(Mat<Zp>(Mat<Zp>::Zero(2, 3))), DimensionMismatch);
}

TEST(Det, FractionalEntries) {
  Mat<Rational> a(2, 2);
  a << Rational::parse("1/2"), Rational::parse("1/3"), Rational::parse("-2/5"), Rational(7);
  EXPECT_EQ(det(a), oracle::cofactor_det(a));
  EXPECT_EQ(det(a).to_string(), "109/30");
}

TEST(Rank, Examples) {
  const Field q = Field::rational();
  EXPECT_EQ(rank(zeros<Rational>(q, 3, 4)), 0);
  EXPECT_EQ(rank(identity<Rational>(q, 5)), 5);
  const Mat<Rational> u = rmat({{1}, {-2}, {3}}), v = rmat({{4, 0, 5, 1}});
  EXPECT_EQ(rank(Mat<Rational>(u * v)), 1);
}

TEST(Kernel, Examples) {
  const Field q = Field::rational();
  EXPECT_TRUE(kernel_basis(identity<Rational>(q, 4)).empty());
  const auto zk = kernel_basis(zeros<Rational>(q, 2, 3));
  ASSERT_EQ(zk.size(), 3u);
  Mat<Rational> stacked(3, 3);
  for (Index i = 0; i < 3; ++i) stacked.col(i) = zk[static_cast<std::size_t>(i)];
  EXPECT_EQ(rank(stacked), 3);

  const auto k1 = kernel_basis(rmat({{1, 1}}));
  ASSERT_EQ(k1.size(), 1u);
  EXPECT_EQ(k1[0](0), -k1[0](1));
  EXPECT_FALSE(is_zero(k1[0]));
}

TEST(Kernel, GfVectorsAreBound) {
  Rng rng(4);
  const Mat<Zp> a = oracle::random_gf_matrix(rng, 2, 5, 101);
  for (const auto& v : kernel_basis(a)) {
    EXPECT_EQ(modulus_of(v), 101u);
    EXPECT_TRUE(is_zero(Vec<Zp>(a * v)));
  }
}

// Properties over random instances, both fields.

TEST(ExactProperties, AssociativityAndTransposeOfProduct) {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Index r = uniform_in(rng, 1, 5), s = uniform_in(rng, 1, 5), t = uniform_in(rng, 1, 5), u = uniform_in(rng, 1, 5);
    const auto a = oracle::random_int_matrix(rng, r, s), b = oracle::random_int_matrix(rng, s, t),
               c = oracle::random_int_matrix(rng, t, u);
    EXPECT_EQ(mat_mul(mat_mul(a, b), c), mat_mul(a, mat_mul(b, c)));
    EXPECT_EQ(transpose(mat_mul(a, b)), mat_mul(transpose(b), transpose(a)));
    const auto x = oracle::random_gf_matrix(rng, r, s, 101), y = oracle::random_gf_matrix(rng, s, t, 101),
               z = oracle::random_gf_matrix(rng, t, u, 101);
    EXPECT_EQ(mat_mul(mat_mul(x, y), z), mat_mul(x, mat_mul(y, z)));
    EXPECT_EQ(transpose(mat_mul(x, y)), mat_mul(transpose(y), transpose(x)));
    EXPECT_EQ(mat_mul(x, y), oracle::naive_mul(x, y));
  }
}

TEST(ExactProperties, DetIsMultiplicative) {
  Rng rng(12);
  for (Index n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      const auto a = oracle::random_int_matrix(rng, n, n), b = oracle::random_int_matrix(rng, n, n);
      EXPECT_EQ(det(mat_mul(a, b)), det(a) * det(b));
      const auto x = oracle::random_gf_matrix(rng, n, n, 32003), y = oracle::random_gf_matrix(rng, n, n, 32003);
      EXPECT_EQ(det(mat_mul(x, y)), det(x) * det(y));
    }
}

TEST(ExactProperties, RankNullity) {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const Index rows = uniform_in(rng, 1, 6), cols = uniform_in(rng, 1, 6), r = uniform_in(rng, 0, 4);
    const Mat<Rational> a = r == 0 ? zeros<Rational>(Field::rational(), rows, cols)
                                   : oracle::random_rank_matrix(rng, rows, cols, r);
    const auto kernel = kernel_basis(a);
    EXPECT_EQ(rank(a) + static_cast<Index>(kernel.size()), cols);
    for (const auto& v : kernel) EXPECT_TRUE(is_zero(Vec<Rational>(a * v)));
    const Mat<Zp> g = oracle::reduce(a, 65537);
    EXPECT_EQ(rank(g) + static_cast<Index>(kernel_basis(g).size()), cols);
  }
}

TEST(ExactProperties, RationalDetReducesModP) {
  Rng rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = uniform_in(rng, 1, 6);
    const auto a = oracle::random_int_matrix(rng, n, n, -50, 50);
    const Rational d = det(a);
    ASSERT_TRUE(d.is_integer());
    for (std::uint32_t p : kPrimes) {
      const Integer r = d.numerator() % Integer(p);
      EXPECT_EQ(det(oracle::reduce(a, p)), Zp(r.get_si(), p));
    }
  }
}

TEST(ExactProperties, BareissMatchesCofactorExpansion) {
  Rng rng(15);
  for (int trial = 0; trial < 60; ++trial) {
    const Index n = uniform_in(rng, 1, 6);
    const auto a = oracle::random_int_matrix(rng, n, n);
    EXPECT_EQ(det(a), oracle::cofactor_det(a));
    const auto g = oracle::random_gf_matrix(rng, n, n, 101);
    EXPECT_EQ(det(g), oracle::cofactor_det(g));
  }
}

}  // namespace
}  // namespace monadlab
