#pragma once

#include <Eigen/Dense>

#include "pflab/qmatrix.hpp"

namespace pflab {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

CMatrix to_complex(const QMatrix& m);

/// Maximum absolute row sum.
double row_sum_norm(const CMatrix& m);

/// "[[[re, im], ...], ...]" row-major.
std::string format_matrix(const CMatrix& m);

}  // namespace pflab
