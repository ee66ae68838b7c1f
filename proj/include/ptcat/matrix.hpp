// Dense matrices over exact rationals: the carrier of all morphisms in
// (Vect, ⊕) and (Vect, ⊗).
//
// Dimension 0 is first-class: 0×n and n×0 matrices represent morphisms
// into/out of the zero space, and (r×0)·(0×c) is the r×c zero matrix
// (empty sum convention).
#pragma once

#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptcat/rational.hpp"

namespace ptcat {

struct shape_error : std::invalid_argument {
  explicit shape_error(const std::string& what) : std::invalid_argument(what) {}
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);  // zero-filled
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(int n);
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const {
    return entries_[static_cast<size_t>(i) * cols_ + j];
  }

  bool operator==(const Matrix& o) const = default;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const;

  std::string describe() const;  // "RxC", for error messages

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> entries_;
};

// Exact product; throws shape_error naming both shapes on a mismatch.
Matrix mul(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix scale(const Rat& c, const Matrix& a);

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mul(a, b); }
inline Matrix operator+(const Matrix& a, const Matrix& b) { return add(a, b); }
inline Matrix operator-(const Matrix& a, const Matrix& b) { return sub(a, b); }

// Block diagonal [a 0; 0 b] — the ⊕ tensor on morphisms.
Matrix direct_sum(const Matrix& a, const Matrix& b);

// Kronecker product with row-major index pairing (i,k) ↦ i·b.rows + k —
// the ⊗ tensor on morphisms.
Matrix kron(const Matrix& a, const Matrix& b);

// 0-1 matrix reordering a direct sum of blocks: output block r is input
// block perm[r]; dims[i] is the dimension of input block i. perm must be a
// permutation of {0, …, dims.size()-1}.
Matrix block_permutation(const std::vector<int>& perm, const std::vector<int>& dims);

// σ on X⊕Y as a block permutation: X⊕Y → Y⊕X.
Matrix block_swap(int dim_x, int dim_y);

// Text format: first line "rows cols", then row-major entries as "p/q" or
// integer tokens. Round-trips bit-exactly.
std::string format_matrix(const Matrix& m);
Matrix parse_matrix(std::istream& in);
Matrix parse_matrix(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace ptcat
