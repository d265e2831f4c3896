#pragma once

#include <vector>

#include "clfbench/linalg.hpp"

namespace clfbench::knn {

struct Params {
  int k = 1;
  bool inverse_distance = false;  // -I
  bool similarity = false;        // -F, weight max(1 - d, 0)
  bool cv_select = false;         // -X, leave-one-out pick of K' in 1..K
};

struct Model {
  Params params;
  Matrix train_x;
  std::vector<int> labels;
  std::vector<int> class_ids;
  int effective_k = 1;  // after -X selection
};

Model fit(const Params& params, const Matrix& x, const std::vector<int>& y);

int predict(const Model& model, const Eigen::Ref<const Vector>& x);

}  // namespace clfbench::knn
