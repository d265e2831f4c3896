#include "clfbench/linalg.hpp"

#include <cmath>

#include "clfbench/common.hpp"

namespace clfbench {

Matrix gram(const Eigen::Ref<const Matrix>& g) {
  const auto n = g.rows();
  Matrix out = Matrix::Zero(n, n);
  out.selfadjointView<Eigen::Lower>().rankUpdate(g);
  out.triangularView<Eigen::StrictlyUpper>() =
      out.triangularView<Eigen::StrictlyLower>().transpose();
  return out;
}

bool is_symmetric(const Eigen::Ref<const Matrix>& m, double tol) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (std::fabs(m(i, j) - m(j, i)) > tol) return false;
  return true;
}

Vector sym_eigenvalues(const Eigen::Ref<const Matrix>& m, double tol) {
  if (!is_symmetric(m, tol))
    throw ValidationError("sym_eigenvalues: matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericError("sym_eigenvalues: eigensolver failed to converge");
  return solver.eigenvalues();  // ascending
}

}  // namespace clfbench
