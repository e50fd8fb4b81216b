#include "lagcoh/linalg.hpp"

namespace lagcoh {

RrefResult rref(QMatrix a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<int> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!a(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    Rational inv = inverse(a(r, c));
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Rational f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return RrefResult{std::move(a), std::move(pivots)};
}

long rank(const QMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return static_cast<long>(rref(a).pivot_cols.size());
}

QMatrix kernel_basis(const QMatrix& a) {
  const Eigen::Index cols = a.cols();
  if (cols == 0) return QMatrix(0, 0);
  RrefResult e = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(static_cast<int>(c));
  QMatrix k = QMatrix::Constant(cols, static_cast<Eigen::Index>(free_cols.size()), Rational(0));
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    int fc = free_cols[j];
    k(fc, static_cast<Eigen::Index>(j)) = Rational(1);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
      k(e.pivot_cols[i], static_cast<Eigen::Index>(j)) = -e.mat(static_cast<Eigen::Index>(i), fc);
  }
  return k;
}

bool solve(const QMatrix& a, const QVector& b, QVector* x) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  QMatrix aug(rows, cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  RrefResult e = rref(std::move(aug));
  for (int c : e.pivot_cols)
    if (c == static_cast<int>(cols)) return false;  // pivot in the rhs column
  QVector sol = QVector::Constant(cols, Rational(0));
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
    sol(e.pivot_cols[i]) = e.mat(static_cast<Eigen::Index>(i), cols);
  if (x) *x = std::move(sol);
  return true;
}

}  // namespace lagcoh
