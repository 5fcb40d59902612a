#include <gtest/gtest.h>

#include "monadlab/matrix_io.hpp"
#include "monadlab/monad_io.hpp"
#include "oracles.hpp"

namespace monadlab {
namespace {

TEST(MatrixIo, ReadsCommentsAndBothFields) {
  const auto any = parse_matrix("# a comment\nmatrix rows=2 cols=2 field=rational\n1 -1/2\n# mid\n0 3\n");
  const auto& fm = std::get<FieldMatrix<Rational>>(any);
  EXPECT_EQ(fm.matrix(0, 1), Rational::parse("-1/2"));
  EXPECT_EQ(format_matrix(fm.matrix, fm.field), "matrix rows=2 cols=2 field=rational\n1 -1/2\n0 3\n");

  const auto gf = std::get<FieldMatrix<Zp>>(parse_matrix("matrix rows=1 cols=3 field=gf:7\n0 6 3\n"));
  EXPECT_EQ(gf.field.modulus(), 7u);
  EXPECT_EQ(gf.matrix(0, 1).value(), 6);
}

TEST(MatrixIo, RejectsMalformedInput) {
  for (const char* bad : {
           "",
           "matrix rows=2 cols=2\n1 0\n0 1\n",
           "matrix cols=2 rows=2 field=rational\n1 0\n0 1\n",
           "matrix rows=2 cols=2 field=rational\n1 0\n",
           "matrix rows=2 cols=2 field=rational\n1 0\n0 1 2\n",
           "matrix rows=1 cols=1 field=rational\n2/4\n",
           "matrix rows=1 cols=1 field=gf:7\n7\n",
           "matrix rows=1 cols=1 field=gf:8\n1\n",
           "matrix rows=1 cols=1 field=rational\n1\n1\n",
           "matrix rows=-1 cols=1 field=rational\n",
       })
    EXPECT_THROW(parse_matrix(bad), ParseError) << bad;
}

TEST(MatrixIo, ErrorsCarryLineNumbers) {
  try {
    parse_matrix("matrix rows=2 cols=2 field=rational\n# c\n1 0\n0 x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
}

TEST(MatrixIo, PrintParseRoundTrip) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Index r = uniform_in(rng, 0, 4), c = uniform_in(rng, 0, 4);
    Mat<Rational> q(r, c);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < c; ++j) q(i, j) = Rational(Integer(uniform_in(rng, -9, 9)), Integer(uniform_in(rng, 1, 9)));
    const std::string text = format_matrix(q, Field::rational());
    const auto back = std::get<FieldMatrix<Rational>>(parse_matrix(text));
    EXPECT_EQ(back.matrix, q);
    EXPECT_EQ(format_matrix(back.matrix, back.field), text);

    const Field f = Field::prime(32003);
    const Mat<Zp> g = oracle::random_gf_matrix(rng, r, c, 32003);
    const std::string gtext = format_matrix(g, f);
    EXPECT_EQ(format_matrix(std::get<FieldMatrix<Zp>>(parse_matrix(gtext)).matrix, f), gtext);
  }
}

TEST(MonadIo, RoundTripAndValidation) {
  const std::string text =
      "monad n=1 k=1 field=gf:5\n"
      "# M_1\n"
      "block 1\n"
      "1 2 0 0\n1 2 0 0\n1 2 0 0\n1 2 0 0\n";
  const auto d = std::get<MonadData<Zp>>(parse_monad(text));
  EXPECT_EQ(d.n(), 1);
  EXPECT_EQ(d.block(1)(3, 1).value(), 2);
  EXPECT_EQ(format_monad(d), "monad n=1 k=1 field=gf:5\nblock 1\n1 2 0 0\n1 2 0 0\n1 2 0 0\n1 2 0 0\n");

  for (const char* bad : {
           "monad n=0 k=1 field=rational\n",
           "monad n=1 k=1 field=rational\nblock 2\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n",
           "monad n=1 k=1 field=rational\nblock 1\n1 0 0\n0 1 0\n0 0 1\n0 0 0\n",
           "monad n=1 k=1 field=rational\nblock 1\n1 0 0 0\n0 1 0 0\n0 0 1 0\n",
           "monad n=1 k=2 field=rational\nblock 1\n1 0 0 0 0 0\n0 1 0 0 0 0\n0 0 1 0 0 0\n0 0 0 1 0 0\n",
           "matrix rows=1 cols=1 field=rational\n1\n",
       })
    EXPECT_THROW(parse_monad(bad), ParseError) << bad;
}

}  // namespace
}  // namespace monadlab
