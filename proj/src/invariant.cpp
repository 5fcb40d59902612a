#include "monadlab/invariant.hpp"

namespace monadlab {

DimensionIdentity dimension_identity(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("dimension_identity needs n >= 1 and k >= 1");
  const auto un = static_cast<unsigned long>(n), uk = static_cast<unsigned long>(k);
  Integer lhs = Integer(2 * n + 2 * k) * binomial(uk + un - 1, un);
  Integer rhs = Integer(2 * n + 2) * binomial(uk + un, un + 1);
  const bool equal = lhs == rhs;
  return {std::move(lhs), std::move(rhs), equal};
}

}  // namespace monadlab
