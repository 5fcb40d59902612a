#include "monadlab/monad_io.hpp"

#include <fstream>
#include <sstream>

namespace monadlab {

namespace {

template <class S>
AnyMonad read_blocks(text::LineReader& reader, int n, int k, const Field& field) {
  const Index rows = 2 * n + 2, cols = 2 * n + 2 * k;
  std::vector<Mat<S>> blocks;
  for (int a = 1; a <= k; ++a) {
    auto line = reader.next();
    if (!line) throw ParseError("unexpected end of input, expected 'block " + std::to_string(a) + "'");
    auto tokens = text::split(*line);
    if (tokens.size() != 2 || tokens[0] != "block" || tokens[1] != std::to_string(a))
      throw ParseError("expected 'block " + std::to_string(a) + "'", reader.line_number());
    blocks.push_back(read_rows<S>(reader, field, rows, cols));
  }
  if (reader.next()) throw ParseError("trailing data after block " + std::to_string(k), reader.line_number());
  return MonadData<S>(n, k, field, std::move(blocks));
}

}  // namespace

AnyMonad read_monad(std::istream& in) {
  text::LineReader reader(in);
  auto header = reader.next();
  if (!header) throw ParseError("empty monad input");
  const std::size_t line = reader.line_number();
  auto kv = text::parse_header(*header, "monad", {"n", "k", "field"}, line);
  const long n = text::parse_count(kv["n"], line);
  const long k = text::parse_count(kv["k"], line);
  if (n < 1 || k < 1) throw ParseError("monad needs n >= 1 and k >= 1", line);
  if (n > 64 || k > 64) throw ParseError("monad parameters too large", line);
  Field field = Field::rational();
  try {
    field = Field::parse(kv["field"]);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
  if (field.is_rational()) return read_blocks<Rational>(reader, int(n), int(k), field);
  return read_blocks<Zp>(reader, int(n), int(k), field);
}

AnyMonad parse_monad(const std::string& text) {
  std::istringstream in(text);
  return read_monad(in);
}

AnyMonad load_monad(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_monad(in);
}

}  // namespace monadlab
