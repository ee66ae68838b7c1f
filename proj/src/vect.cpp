#include "ptcat/vect.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace ptcat {

BlockView blocks(const Matrix& f, int dim_a, int dim_u, int dim_b, int dim_u2) {
  if (dim_a < 0 || dim_u < 0 || dim_b < 0 || dim_u2 < 0 ||
      f.cols() != dim_a + dim_u || f.rows() != dim_b + dim_u2)
    throw shape_error("blocks: splits " + std::to_string(dim_a) + "+" +
                      std::to_string(dim_u) + " / " + std::to_string(dim_b) + "+" +
                      std::to_string(dim_u2) + " do not partition " + f.describe());
  BlockView v;
  v.f11 = Matrix(dim_b, dim_a);
  v.f12 = Matrix(dim_b, dim_u);
  v.f21 = Matrix(dim_u2, dim_a);
  v.f22 = Matrix(dim_u2, dim_u);
  for (int i = 0; i < dim_b; ++i) {
    for (int j = 0; j < dim_a; ++j) v.f11.at(i, j) = f.at(i, j);
    for (int j = 0; j < dim_u; ++j) v.f12.at(i, j) = f.at(i, dim_a + j);
  }
  for (int i = 0; i < dim_u2; ++i) {
    for (int j = 0; j < dim_a; ++j) v.f21.at(i, j) = f.at(dim_b + i, j);
    for (int j = 0; j < dim_u; ++j) v.f22.at(i, j) = f.at(dim_b + i, dim_a + j);
  }
  return v;
}

Matrix reassemble(const BlockView& v) {
  const int dim_b = v.f11.rows(), dim_a = v.f11.cols();
  const int dim_u2 = v.f22.rows(), dim_u = v.f22.cols();
  Matrix f(dim_b + dim_u2, dim_a + dim_u);
  for (int i = 0; i < dim_b; ++i) {
    for (int j = 0; j < dim_a; ++j) f.at(i, j) = v.f11.at(i, j);
    for (int j = 0; j < dim_u; ++j) f.at(i, dim_a + j) = v.f12.at(i, j);
  }
  for (int i = 0; i < dim_u2; ++i) {
    for (int j = 0; j < dim_a; ++j) f.at(dim_b + i, j) = v.f21.at(i, j);
    for (int j = 0; j < dim_u; ++j) f.at(dim_b + i, dim_a + j) = v.f22.at(i, j);
  }
  return f;
}

Layout::Layout(std::initializer_list<std::pair<std::string, int>> blocks) {
  for (const auto& [name, dim] : blocks) add(name, dim);
}

Layout& Layout::add(const std::string& name, int dim) {
  if (dim < 0) throw shape_error("negative block dimension for '" + name + "'");
  if (std::find(names_.begin(), names_.end(), name) != names_.end())
    throw shape_error("duplicate block name '" + name + "'");
  names_.push_back(name);
  dims_.push_back(dim);
  total_ += dim;
  return *this;
}

int Layout::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw shape_error("unknown block '" + name + "'");
  return static_cast<int>(it - names_.begin());
}

int Layout::dim_of(const std::string& name) const {
  return dims_[static_cast<size_t>(index_of(name))];
}

Matrix Layout::perm_to(const std::vector<std::string>& target) const {
  if (target.size() != names_.size())
    throw shape_error("block reordering must mention every block exactly once");
  std::vector<int> perm;
  perm.reserve(target.size());
  for (const auto& name : target) perm.push_back(index_of(name));
  return block_permutation(perm, dims_);
}

Layout Layout::reordered(const std::vector<std::string>& target) const {
  Layout out;
  for (const auto& name : target) out.add(name, dim_of(name));
  return out;
}

FMatrix to_float(const Matrix& m) {
  FMatrix f(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) f.at(i, j) = to_double(m.at(i, j));
  return f;
}

FMatrix fmul(const FMatrix& a, const FMatrix& b) {
  if (a.cols != b.rows)
    throw shape_error("cannot multiply float matrices of mismatched shape");
  FMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k)
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
  return c;
}

FMatrix fadd(const FMatrix& a, const FMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw shape_error("cannot add float matrices of mismatched shape");
  FMatrix c = a;
  for (size_t i = 0; i < c.a.size(); ++i) c.a[i] += b.a[i];
  return c;
}

FMatrix fdirect_sum(const FMatrix& a, const FMatrix& b) {
  FMatrix c(a.rows + b.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) c.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) c.at(a.rows + i, a.cols + j) = b.at(i, j);
  return c;
}

bool approx_eq(const FMatrix& a, const FMatrix& b, double tol) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  for (size_t i = 0; i < a.a.size(); ++i)
    if (std::abs(a.a[i] - b.a[i]) > tol) return false;
  return true;
}

std::string format_fmatrix(const FMatrix& m) {
  std::ostringstream os;
  os << m.rows << ' ' << m.cols << '\n';
  char buf[64];
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      if (j) os << ' ';
      // %.17g round-trips doubles exactly
      std::snprintf(buf, sizeof buf, "%.17g", m.at(i, j));
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace ptcat
