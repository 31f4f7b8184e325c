#include "pflab/qmatrix.hpp"

#include <algorithm>
#include <utility>

#include "pflab/errors.hpp"

namespace pflab {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Coefficient(1);
  return m;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Coefficient& c) { return c.is_zero(); });
}

Coefficient QMatrix::trace() const {
  Coefficient t(0);
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Rational QMatrix::row_sum_norm() const {
  Rational best = 0;
  for (int i = 0; i < rows_; ++i) {
    Rational s = 0;
    for (int j = 0; j < cols_; ++j) s += (*this)(i, j).magnitude();
    if (s > best) best = s;
  }
  return best;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
  for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
  for (size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
  QMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Coefficient& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

QMatrix operator*(const Coefficient& c, QMatrix a) {
  for (auto& v : a.data_) v *= c;
  return a;
}

std::string QMatrix::to_string() const {
  std::string out = "[";
  for (int i = 0; i < rows_; ++i) {
    out += i ? ", [" : "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += (*this)(i, j).to_exact_string();
    }
    out += "]";
  }
  return out + "]";
}

Coefficient determinant(QMatrix m) {
  const int n = m.rows();
  if (n != m.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  if (n == 0) return Coefficient(1);
  Coefficient prev(1);
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k).is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m(i, k).is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return Coefficient(0);
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = Coefficient(0);
    }
    prev = m(k, k);
  }
  Coefficient d = m(n - 1, n - 1);
  return negate ? -d : d;
}

namespace {

// Reduced row echelon form in place over an augmented column count `ncols`;
// returns the pivot column of each pivot row.
std::vector<int> row_reduce(QMatrix& m, int ncols) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < ncols && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Coefficient inv = Coefficient(1) / m(row, col);
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Coefficient f = m(i, col);
      for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(QMatrix m) { return static_cast<int>(row_reduce(m, m.cols()).size()); }

std::optional<std::vector<Coefficient>> solve_linear(QMatrix m, std::vector<Coefficient> b) {
  if (static_cast<int>(b.size()) != m.rows()) throw Error(ErrorKind::InvalidArgument, "rhs size mismatch");
  const int n = m.cols();
  QMatrix aug(m.rows(), n + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = std::move(m(i, j));
    aug(i, n) = std::move(b[static_cast<size_t>(i)]);
  }
  std::vector<int> pivots = row_reduce(aug, n);
  for (int i = static_cast<int>(pivots.size()); i < aug.rows(); ++i)
    if (!aug(i, n).is_zero()) return std::nullopt;
  std::vector<Coefficient> x(static_cast<size_t>(n), Coefficient(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[static_cast<size_t>(pivots[r])] = aug(static_cast<int>(r), n);
  return x;
}

}  // namespace pflab
