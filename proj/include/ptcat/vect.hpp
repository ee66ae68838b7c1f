// Objects and block structure of (Vect over ℚ, ⊕) and (Vect over ℚ, ⊗),
// presented strictly: an object is its dimension, a morphism is its matrix
// (cod.dim × dom.dim), and the symmetries are block permutations.
#pragma once

#include <cmath>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ptcat/matrix.hpp"

namespace ptcat {

struct VObj {
  int dim = 0;
  bool operator==(const VObj&) const = default;
};

inline VObj dsum(VObj a, VObj b) { return {a.dim + b.dim}; }    // ⊕ on objects
inline VObj tensor(VObj a, VObj b) { return {a.dim * b.dim}; }  // ⊗ on objects

// The four blocks of f : A⊕U → B⊕U2, with f_ij = π_i ∘ f ∘ ι_j.
struct BlockView {
  Matrix f11;  // B × A
  Matrix f12;  // B × U
  Matrix f21;  // U2 × A
  Matrix f22;  // U2 × U
};

BlockView blocks(const Matrix& f, int dim_a, int dim_u, int dim_b, int dim_u2);

inline BlockView blocks(const Matrix& f, int dim_a, int dim_u, int dim_b) {
  return blocks(f, dim_a, dim_u, dim_b, dim_u);
}

// Exact inverse of blocks().
Matrix reassemble(const BlockView& v);

// An ordered list of named ⊕-blocks. perm_to computes the block permutation
// matrix onto a reordering, addressing blocks by name; this keeps the wiring
// composites in the Int-construction readable and hard to mistype.
class Layout {
 public:
  Layout() = default;
  Layout(std::initializer_list<std::pair<std::string, int>> blocks);

  Layout& add(const std::string& name, int dim);
  int dim() const { return total_; }
  int dim_of(const std::string& name) const;

  // Block permutation sending this layout to the given block order. The
  // target must list exactly the names of this layout.
  Matrix perm_to(const std::vector<std::string>& target) const;

  Layout reordered(const std::vector<std::string>& target) const;

 private:
  std::vector<std::string> names_;
  std::vector<int> dims_;
  int total_ = 0;
  int index_of(const std::string& name) const;
};

// Plain double-precision matrices, used only by the float-mode sum trace to
// exhibit the divergence phenomena that exact arithmetic rules out.
struct FMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  FMatrix() = default;
  FMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

  double& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

FMatrix to_float(const Matrix& m);
FMatrix fmul(const FMatrix& a, const FMatrix& b);
FMatrix fadd(const FMatrix& a, const FMatrix& b);
FMatrix fdirect_sum(const FMatrix& a, const FMatrix& b);
bool approx_eq(const FMatrix& a, const FMatrix& b, double tol);
std::string format_fmatrix(const FMatrix& m);

}  // namespace ptcat
