#pragma once

#include <vector>

#include "clfbench/linalg.hpp"

namespace clfbench::logistic {

struct Params {
  double ridge = 1e-8;      // -R, applied to non-intercept weights
  int max_iterations = 200;  // -M
};

/// Multinomial model with the last class as reference: weights is
/// (n_classes - 1) x (n_features + 1), column 0 holding the intercept.
struct Model {
  Matrix weights;
  std::vector<int> class_ids;
  int iterations = 0;
  double gradient_norm = 0.0;
};

/// Ridge-penalized negative log-likelihood and its gradient at `weights`.
/// y_index holds class positions 0..n_classes-1. Exposed so the gradient can
/// be checked against finite differences.
double nll_and_gradient(const Matrix& weights, const Matrix& x,
                        const std::vector<int>& y_index, int n_classes,
                        double ridge, Matrix& gradient);

/// Damped Newton fit; stops when the gradient infinity norm falls to 1e-6 or
/// after max_iterations. Throws NumericError if the loss turns non-finite.
Model fit(const Params& params, const Matrix& x, const std::vector<int>& y);

int predict(const Model& model, const Eigen::Ref<const Vector>& x);

/// Per-class scores (softmax logits, reference class fixed at 0).
Vector scores(const Model& model, const Eigen::Ref<const Vector>& x);

}  // namespace clfbench::logistic
