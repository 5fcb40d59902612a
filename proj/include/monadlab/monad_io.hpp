#pragma once

// Monad text format:
//
//   monad n=<N> k=<K> field=<rational|gf:P>
//   block 1
//   <2n+2 rows of 2n+2k entries>
//   ...
//   block K
//   ...

#include <istream>
#include <ostream>
#include <string>
#include <variant>

#include "monadlab/matrix_io.hpp"
#include "monadlab/monad.hpp"

namespace monadlab {

using AnyMonad = std::variant<MonadData<Rational>, MonadData<Zp>>;

AnyMonad read_monad(std::istream& in);
AnyMonad parse_monad(const std::string& text);
AnyMonad load_monad(const std::string& path);

template <class S>
void write_monad(std::ostream& out, const MonadData<S>& d) {
  out << "monad n=" << d.n() << " k=" << d.k() << " field=" << d.field().to_string() << '\n';
  for (int a = 1; a <= d.k(); ++a) {
    out << "block " << a << '\n';
    write_rows(out, d.block(a), d.field());
  }
}

template <class S>
std::string format_monad(const MonadData<S>& d) {
  std::ostringstream out;
  write_monad(out, d);
  return out.str();
}

}  // namespace monadlab
