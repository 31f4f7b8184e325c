#include "pflab/cmatrix.hpp"

#include "pflab/format.hpp"

namespace pflab {

CMatrix to_complex(const QMatrix& m) {
  CMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_complex();
  return out;
}

double row_sum_norm(const CMatrix& m) {
  double best = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) best = std::max(best, m.row(i).cwiseAbs().sum());
  return best;
}

std::string format_matrix(const CMatrix& m) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) out += ", ";
    out += "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += format_complex(m(i, j));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace pflab
