#pragma once

#include <Eigen/Core>

#include <vector>

#include "lagcoh/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<lagcoh::Rational> : GenericNumTraits<lagcoh::Rational> {
  using Real = lagcoh::Rational;
  using NonInteger = lagcoh::Rational;
  using Nested = lagcoh::Rational;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 64,
  };
  static inline Real epsilon() { return lagcoh::Rational(0); }
  static inline Real dummy_precision() { return lagcoh::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace lagcoh {

using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

struct RrefResult {
  QMatrix mat;                  // reduced row echelon form
  std::vector<int> pivot_cols;  // ascending; size == rank
};

// Gauss-Jordan over Q with positional pivoting: in each column the first
// unprocessed row with a nonzero entry is the pivot.  No magnitude pivoting
// anywhere, so results are bit-for-bit reproducible.
RrefResult rref(QMatrix a);

long rank(const QMatrix& a);

// Columns form the canonical kernel basis: one column per free variable of
// rref(a), ascending, with the free coordinate set to 1.
QMatrix kernel_basis(const QMatrix& a);

// Solves a x = b exactly; free coordinates are set to 0.  Returns false when
// the system is inconsistent.
bool solve(const QMatrix& a, const QVector& b, QVector* x);

}  // namespace lagcoh
