#pragma once

// Matrix text format:
//
//   matrix rows=<R> cols=<C> field=<rational|gf:P>
//   <R lines of C whitespace-separated entries>
//
// Rational entries are `a` or `a/b` in lowest terms, gf entries canonical
// residues. Lines starting with `#` are comments.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>

#include "monadlab/linalg.hpp"
#include "monadlab/text.hpp"

namespace monadlab {

template <class S>
struct FieldMatrix {
  Field field;
  Mat<S> matrix;
};

using AnyMatrix = std::variant<FieldMatrix<Rational>, FieldMatrix<Zp>>;

AnyMatrix read_matrix(std::istream& in);
AnyMatrix parse_matrix(const std::string& text);

/// Reads `rows` lines of `cols` entries into a matrix over `field`.
template <class S>
Mat<S> read_rows(text::LineReader& reader, const Field& field, Index rows, Index cols) {
  Mat<S> m = zeros<S>(field, rows, cols);
  if (cols == 0) return m;  // empty rows are not written
  for (Index i = 0; i < rows; ++i) {
    auto line = reader.next();
    if (!line) throw ParseError("unexpected end of input, expected " + std::to_string(rows - i) + " more rows");
    auto tokens = text::split(*line);
    if (static_cast<Index>(tokens.size()) != cols)
      throw ParseError("expected " + std::to_string(cols) + " entries, found " + std::to_string(tokens.size()),
                       reader.line_number());
    for (Index j = 0; j < cols; ++j) {
      try {
        m(i, j) = scalar_traits<S>::parse(tokens[static_cast<std::size_t>(j)], field);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), reader.line_number());
      }
    }
  }
  return m;
}

template <class S>
void write_rows(std::ostream& out, const Mat<S>& m, const Field& field) {
  if (m.cols() == 0) return;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << scalar_traits<S>::format(m(i, j), field);
    }
    out << '\n';
  }
}

template <class S>
void write_matrix(std::ostream& out, const Mat<S>& m, const Field& field) {
  out << "matrix rows=" << m.rows() << " cols=" << m.cols() << " field=" << field.to_string() << '\n';
  write_rows(out, m, field);
}

template <class S>
std::string format_matrix(const Mat<S>& m, const Field& field) {
  std::ostringstream out;
  write_matrix(out, m, field);
  return out.str();
}

}  // namespace monadlab
