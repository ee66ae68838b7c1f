// Exact Gaussian elimination: the decision substrate for every definedness
// question in the trace operators (invertibility, image membership, kernel
// inclusion). All answers are exact; "no solution" means provably
// inconsistent, not numerically doubtful.
#pragma once

#include <vector>

#include "ptcat/kleene.hpp"
#include "ptcat/matrix.hpp"

namespace ptcat {

struct RrefResult {
  Matrix reduced;              // the unique reduced row-echelon form
  std::vector<int> pivot_cols; // strictly increasing
  int rank = 0;                // = pivot_cols.size()
};

RrefResult rref(const Matrix& a);

int rank(const Matrix& a);

// Any x with a·x = b, or Undefined when inconsistent. The canonical choice
// is the rref particular solution with free variables set to zero.
Kleene<Matrix> solve_right(const Matrix& a, const Matrix& b);

// Any x with x·a = b, or Undefined. Reduced to solve_right by transposition.
Kleene<Matrix> solve_left(const Matrix& a, const Matrix& b);

// Defined(a⁻¹) iff a is square with full rank. The 0×0 matrix is its own
// inverse.
Kleene<Matrix> inverse(const Matrix& a);

// Columns form a basis of { x : a·x = 0 }; shape cols × (cols − rank).
Matrix kernel_basis(const Matrix& a);

// Columns of the transpose span { x : x·a = 0 }; shape (rows − rank) × rows,
// one row per basis covector.
Matrix left_kernel_basis(const Matrix& a);

}  // namespace ptcat
