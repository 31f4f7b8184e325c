#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pflab/coefficient.hpp"

namespace pflab {

/// Dense exact matrix over the Gaussian rationals, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols)) {}

  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Coefficient& operator()(int i, int j) { return data_[static_cast<size_t>(i * cols_ + j)]; }
  const Coefficient& operator()(int i, int j) const { return data_[static_cast<size_t>(i * cols_ + j)]; }

  bool is_zero() const;
  Coefficient trace() const;
  /// Maximum absolute row sum, with |c| taken as the exact magnitude |re| + |im|.
  Rational row_sum_norm() const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const Coefficient& c, QMatrix a);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Rows as "[a, b, ...]" with exact "p/q" entries.
  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Coefficient> data_;
};

/// Determinant by fraction-free (Bareiss) elimination.
Coefficient determinant(QMatrix m);

/// Rank by exact elimination.
int rank(QMatrix m);

/// Solves m * x = b by exact Gauss-Jordan elimination. The pivot in each column is the
/// first row (top to bottom) with a nonzero entry; free variables are set to zero.
/// Returns nullopt when the system is inconsistent.
std::optional<std::vector<Coefficient>> solve_linear(QMatrix m, std::vector<Coefficient> b);

}  // namespace pflab
