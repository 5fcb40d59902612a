#include "monadlab/matrix_io.hpp"

#include <sstream>

namespace monadlab {


namespace {

template <class S>
AnyMatrix finish(text::LineReader& reader, const Field& field, Index rows, Index cols) {
  FieldMatrix<S> fm{field, read_rows<S>(reader, field, rows, cols)};
  if (reader.next()) throw ParseError("trailing data after matrix", reader.line_number());
  return fm;
}

}  // namespace

AnyMatrix read_matrix(std::istream& in) {
  text::LineReader reader(in);
  auto header = reader.next();
  if (!header) throw ParseError("empty matrix input");
  auto kv = text::parse_header(*header, "matrix", {"rows", "cols", "field"}, reader.line_number());
  const Index rows = text::parse_count(kv["rows"], reader.line_number());
  const Index cols = text::parse_count(kv["cols"], reader.line_number());
  Field field = Field::rational();
  try {
    field = Field::parse(kv["field"]);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), reader.line_number());
  }
  if (field.is_rational()) return finish<Rational>(reader, field, rows, cols);
  return finish<Zp>(reader, field, rows, cols);
}

AnyMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

}  // namespace monadlab
