#pragma once

#include <cstdint>
#include <vector>

#include "clfbench/classifiers/tree.hpp"

namespace clfbench::forest {

struct Params {
  int trees = 10;  // -I
  int k = 0;       // -K candidate features per split; 0 = floor(log2 F) + 1
  int depth = 0;   // -depth; 0 = unlimited
  int seed = 1;    // -S
};

struct Model {
  std::vector<tree::Tree> trees;
  std::vector<int> class_ids;
  int n_features = 0;
};

Model fit(const Params& params, const Matrix& x, const std::vector<int>& y);

/// Votes per class (class_ids order); they sum to the number of trees.
std::vector<int> vote_counts(const Model& model,
                             const Eigen::Ref<const Vector>& x);

int predict(const Model& model, const Eigen::Ref<const Vector>& x);

}  // namespace clfbench::forest
