#pragma once

#include <Eigen/Dense>

namespace clfbench {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Gram product G*G^T. Computed as a self-adjoint rank update so the result
/// is exactly symmetric entry-for-entry.
Matrix gram(const Eigen::Ref<const Matrix>& g);

bool is_symmetric(const Eigen::Ref<const Matrix>& m, double tol = 1e-12);

/// All eigenvalues of a symmetric matrix, ascending. Throws ValidationError
/// when the input is not symmetric within `tol` (absolute, entrywise).
Vector sym_eigenvalues(const Eigen::Ref<const Matrix>& m, double tol = 1e-12);

}  // namespace clfbench
