#include "monadlab/monad.hpp"

#include "monadlab/symcomb.hpp"

namespace monadlab {

std::string to_string(PairingKind kind) {
  switch (kind) {
    case PairingKind::orthogonal_identity: return "orthogonal-identity";
    case PairingKind::symplectic_canonical: return "symplectic-canonical";
    case PairingKind::custom: return "custom";
  }
  return "custom";
}

std::vector<Integer> chern_coefficients(int k, int terms) {
  if (k < 1) throw std::invalid_argument("chern_coefficients: k must be at least 1");
  if (terms < 1) throw std::invalid_argument("chern_coefficients: terms must be at least 1");
  std::vector<Integer> c;
  c.reserve(static_cast<std::size_t>(terms));
  for (int m = 0; m < terms; ++m)
    c.push_back(binomial(static_cast<unsigned long>(k + m - 1), static_cast<unsigned long>(m)));
  return c;
}

}  // namespace monadlab
