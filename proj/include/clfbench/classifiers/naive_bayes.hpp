#pragma once

#include <vector>

#include "clfbench/linalg.hpp"

namespace clfbench::nb {

struct Params {
  bool kernel = false;      // -K, per-feature kernel density estimate
  bool discretize = false;  // -D, 10 equal-frequency bins (wins over -K)
};

struct Model {
  Params params;
  std::vector<int> class_ids;
  std::vector<double> log_prior;

  // gaussian variant
  Matrix mean;  // class x feature
  Matrix var;   // class x feature, floored at 1e-9

  // kernel variant: per-class training columns plus a shared per-feature
  // bandwidth max(range/sqrt(n), 1e-3)
  std::vector<Matrix> class_values;  // rows x feature per class
  Vector bandwidth;

  // discretized variant: global equal-frequency bin edges and per-class
  // Laplace-smoothed bin log-probabilities
  Matrix bin_edges;                       // feature x (bins-1) inner edges
  std::vector<Matrix> log_bin_prob;       // per class: feature x bins

  int n_features = 0;
};

constexpr double kVarianceFloor = 1e-9;
constexpr int kBins = 10;

Model fit(const Params& params, const Matrix& x, const std::vector<int>& y);

/// Class posterior in class_ids order; entries sum to 1.
Vector posterior(const Model& model, const Eigen::Ref<const Vector>& x);

int predict(const Model& model, const Eigen::Ref<const Vector>& x);

}  // namespace clfbench::nb
