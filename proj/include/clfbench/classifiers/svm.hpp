#pragma once

#include <vector>

#include "clfbench/linalg.hpp"

namespace clfbench::svm {

enum class KernelType { Poly, NormalizedPoly, Rbf, Puk };

struct KernelSpec {
  KernelType type = KernelType::Poly;
  int exponent = 1;    // -E (poly, np)
  double gamma = 0.5;  // -G (rbf)
  double sigma = 1.0;  // -S (puk)
  double omega = 1.0;  // puk shape
};

/// Kernel value for two feature vectors of equal dimension.
double kernel_eval(const KernelSpec& kernel, const Eigen::Ref<const Vector>& x,
                   const Eigen::Ref<const Vector>& y);

enum class Scaling { Normalize = 0, Standardize = 1, None = 2 };

struct Params {
  double c = 1.0;        // -C
  double tolerance = 1e-3;  // -L
  double epsilon = 1e-12;   // -P, round-off guard
  Scaling scaling = Scaling::Normalize;  // -N
  KernelSpec kernel;
};

/// One pairwise machine of the one-vs-one decomposition. Rows index into the
/// model's scaled training matrix; y holds +1 for the lower class.
struct BinaryMachine {
  int pos_class_index = 0;
  int neg_class_index = 0;
  std::vector<int> rows;
  std::vector<double> alpha;
  std::vector<int> y;
  double b = 0.0;
};

struct Model {
  Params params;
  std::vector<int> class_ids;
  Matrix train_x;  // scaled
  Vector shift, scale;
  std::vector<BinaryMachine> machines;

  Vector apply_scaling(const Eigen::Ref<const Vector>& x) const;
};

/// Trains pairwise machines by sequential minimal optimization. Throws
/// NumericError with the worst KKT violation if a subproblem fails to
/// converge within the iteration budget.
Model fit(const Params& params, const Matrix& x, const std::vector<int>& y);

/// Decision value of one machine at x (positive favors the lower class).
double decision_value(const Model& model, std::size_t machine,
                      const Eigen::Ref<const Vector>& x);

int predict(const Model& model, const Eigen::Ref<const Vector>& x);

/// Largest KKT violation across the machine's training points.
double max_kkt_violation(const Model& model, const BinaryMachine& machine);

/// |sum alpha_i y_i| of the dual equality constraint.
double equality_gap(const BinaryMachine& machine);

}  // namespace clfbench::svm
