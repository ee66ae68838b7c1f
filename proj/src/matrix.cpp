#include "ptcat/matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace ptcat {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw shape_error("negative matrix dimension");
  entries_.assign(static_cast<size_t>(rows) * cols, Rat(0));
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  entries_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      throw shape_error("ragged initializer for matrix");
    for (long v : r) entries_.emplace_back(v);
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::string Matrix::describe() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

Matrix mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw shape_error("cannot multiply " + a.describe() + " by " + b.describe());
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Rat& bkj = b.at(k, j);
        if (bkj != 0) c.at(i, j) += aik * bkj;
      }
    }
  return c;
}

Matrix add(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw shape_error("cannot add " + a.describe() + " and " + b.describe());
  Matrix c = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) += b.at(i, j);
  return c;
}

Matrix sub(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw shape_error("cannot subtract " + b.describe() + " from " + a.describe());
  Matrix c = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) -= b.at(i, j);
  return c;
}

Matrix scale(const Rat& c, const Matrix& a) {
  Matrix r = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) *= c;
  return r;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) c.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          c.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return c;
}

Matrix block_permutation(const std::vector<int>& perm, const std::vector<int>& dims) {
  const int k = static_cast<int>(dims.size());
  if (static_cast<int>(perm.size()) != k)
    throw shape_error("block permutation arity mismatch");
  std::vector<bool> seen(k, false);
  for (int p : perm) {
    if (p < 0 || p >= k || seen[p])
      throw shape_error("malformed block permutation");
    seen[p] = true;
  }
  std::vector<int> offset(k, 0);  // input block offsets
  int total = 0;
  for (int i = 0; i < k; ++i) {
    offset[i] = total;
    if (dims[i] < 0) throw shape_error("negative block dimension");
    total += dims[i];
  }
  Matrix m(total, total);
  int row = 0;
  for (int r = 0; r < k; ++r) {
    int src = perm[r];
    for (int t = 0; t < dims[src]; ++t) m.at(row + t, offset[src] + t) = 1;
    row += dims[src];
  }
  return m;
}

Matrix block_swap(int dim_x, int dim_y) {
  return block_permutation({1, 0}, {dim_x, dim_y});
}

std::string format_matrix(const Matrix& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << format_rational(m.at(i, j));
    }
    os << '\n';
  }
  return os.str();
}

Matrix parse_matrix(std::istream& in) {
  long long rows = -1, cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0)
    throw std::invalid_argument("matrix header must be 'rows cols'");
  Matrix m(static_cast<int>(rows), static_cast<int>(cols));
  std::string tok;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (!(in >> tok))
        throw std::invalid_argument("matrix body ended early at entry (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
      m.at(i, j) = parse_rational(tok);
    }
  return m;
}

Matrix parse_matrix(const std::string& text) {
  std::istringstream is(text);
  return parse_matrix(is);
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  return os << format_matrix(m);
}

}  // namespace ptcat
