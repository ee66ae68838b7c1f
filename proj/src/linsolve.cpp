#include "ptcat/linsolve.hpp"

namespace ptcat {

RrefResult rref(const Matrix& a) {
  RrefResult r;
  r.reduced = a;
  Matrix& m = r.reduced;
  int lead = 0;
  for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
    int piv = -1;
    for (int i = lead; i < m.rows(); ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(lead, j));
    Rat inv = Rat(1) / m.at(lead, col);
    for (int j = col; j < m.cols(); ++j) m.at(lead, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == lead) continue;
      Rat f = m.at(i, col);
      if (f == 0) continue;
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(lead, j);
    }
    r.pivot_cols.push_back(col);
    ++lead;
  }
  r.rank = static_cast<int>(r.pivot_cols.size());
  return r;
}

int rank(const Matrix& a) { return rref(a).rank; }

Kleene<Matrix> solve_right(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows())
    throw shape_error("solve_right: row counts differ, " + a.describe() + " vs " +
                      b.describe());
  // Eliminate on [a | b]; a pivot landing in the b-columns certifies an
  // inconsistent column.
  Matrix aug(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
  }
  RrefResult r = rref(aug);
  for (int p : r.pivot_cols)
    if (p >= a.cols()) return Kleene<Matrix>::undefined();
  Matrix x(a.cols(), b.cols());
  for (int row = 0; row < r.rank; ++row) {
    int p = r.pivot_cols[static_cast<size_t>(row)];
    for (int j = 0; j < b.cols(); ++j)
      x.at(p, j) = r.reduced.at(row, a.cols() + j);
  }
  return Kleene<Matrix>::defined(std::move(x));
}

Kleene<Matrix> solve_left(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols())
    throw shape_error("solve_left: column counts differ, " + a.describe() +
                      " vs " + b.describe());
  return solve_right(a.transpose(), b.transpose()).map([](const Matrix& xt) {
    return xt.transpose();
  });
}

Kleene<Matrix> inverse(const Matrix& a) {
  if (!a.is_square())
    throw shape_error("inverse of non-square matrix " + a.describe());
  const int n = a.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult r = rref(aug);
  if (r.rank < n) return Kleene<Matrix>::undefined();
  for (int i = 0; i < n; ++i)
    if (r.pivot_cols[static_cast<size_t>(i)] != i) return Kleene<Matrix>::undefined();
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = r.reduced.at(i, n + j);
  return Kleene<Matrix>::defined(std::move(inv));
}

Matrix kernel_basis(const Matrix& a) {
  RrefResult r = rref(a);
  const int n = a.cols();
  std::vector<int> free_cols;
  {
    size_t pi = 0;
    for (int c = 0; c < n; ++c) {
      if (pi < r.pivot_cols.size() && r.pivot_cols[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  Matrix k(n, static_cast<int>(free_cols.size()));
  for (int idx = 0; idx < static_cast<int>(free_cols.size()); ++idx) {
    int fc = free_cols[static_cast<size_t>(idx)];
    k.at(fc, idx) = 1;
    for (int row = 0; row < r.rank; ++row)
      k.at(r.pivot_cols[static_cast<size_t>(row)], idx) = -r.reduced.at(row, fc);
  }
  return k;
}

Matrix left_kernel_basis(const Matrix& a) {
  return kernel_basis(a.transpose()).transpose();
}

}  // namespace ptcat
