#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include "l2dim/laurent.hpp"
#include "l2dim/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<l2dim::LaurentPoly> : GenericNumTraits<l2dim::LaurentPoly> {
  typedef l2dim::LaurentPoly Real;
  typedef l2dim::LaurentPoly NonInteger;
  typedef l2dim::LaurentPoly Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 120,
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace l2dim {

using Index = Eigen::Index;

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = MatrixX<Int>;
using RatMatrix = MatrixX<Rat>;
using LaurentMatrix = MatrixX<LaurentPoly>;

template <class Scalar>
bool isZeroMatrix(const MatrixX<Scalar>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!(m(i, j) == Scalar(0))) return false;
  return true;
}

/// Per-scalar operations used by the exact elimination kernels.
template <class Scalar>
struct RingOps;

template <>
struct RingOps<Int> {
  static bool isZero(const Int& x) { return x == 0; }
  static Int exactDiv(const Int& a, const Int& b) {
    Int q = a / b;
    if (q * b != a) throw DomainError("non-exact integer division in elimination");
    return q;
  }
  static bool lighter(const Int& a, const Int& b) { return abs(a) < abs(b); }
};

template <>
struct RingOps<Rat> {
  static bool isZero(const Rat& x) { return x == 0; }
  static Rat exactDiv(const Rat& a, const Rat& b) { return a / b; }
  static bool lighter(const Rat&, const Rat&) { return false; }
};

template <>
struct RingOps<LaurentPoly> {
  static bool isZero(const LaurentPoly& x) { return x.isZero(); }
  static LaurentPoly exactDiv(const LaurentPoly& a, const LaurentPoly& b) {
    return laurentExactDiv(a, b);
  }
  static bool lighter(const LaurentPoly& a, const LaurentPoly& b) {
    return a.termCount() < b.termCount();
  }
};

}  // namespace l2dim
