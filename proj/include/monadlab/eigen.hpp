#pragma once

// Eigen glue for the exact scalar types. Include this instead of <Eigen/Core>.

#include <Eigen/Core>

#include "monadlab/rational.hpp"
#include "monadlab/zp.hpp"

namespace Eigen {

template <>
struct NumTraits<monadlab::Rational> : GenericNumTraits<monadlab::Rational> {
  using Real = monadlab::Rational;
  using NonInteger = monadlab::Rational;
  using Literal = monadlab::Rational;
  using Nested = monadlab::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 20,
    MulCost = 40
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<monadlab::Zp> : GenericNumTraits<monadlab::Zp> {
  using Real = monadlab::Zp;
  using NonInteger = monadlab::Zp;
  using Literal = monadlab::Zp;
  using Nested = monadlab::Zp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    // elements must be constructed so unbound entries never hold garbage moduli
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace monadlab {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

}  // namespace monadlab
