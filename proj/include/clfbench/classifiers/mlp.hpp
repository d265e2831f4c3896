#pragma once

#include <cstdint>
#include <vector>

#include "clfbench/linalg.hpp"

namespace clfbench::mlp {

struct Params {
  bool decay = false;    // -D, halve the learning rate each epoch
  int hidden = 0;        // -H, 0 resolves to round((F + C) / 2)
  double learning_rate = 0.3;  // -L
  double momentum = 0.2;       // -M
  int epochs = 500;            // -N
  int val_percent = 0;         // -V, stratified holdout; 0 = off
};

struct Weights {
  Matrix w1;  // hidden x features
  Vector b1;
  Matrix w2;  // classes x hidden
  Vector b2;
};

struct Model {
  Weights weights;
  std::vector<int> class_ids;
  int n_features = 0;
  int epochs_run = 0;
};

int resolve_hidden(int hidden, int n_features, int n_classes);

/// Summed cross-entropy of the batch plus gradient (one hidden sigmoid
/// layer, softmax output). Exposed for finite-difference checks.
double loss_and_gradient(const Weights& weights, const Matrix& x,
                         const std::vector<int>& y_index, Weights& gradient);

/// Online backpropagation in shuffled order from a seeded stream.
Model fit(const Params& params, const Matrix& x, const std::vector<int>& y,
          std::uint64_t seed = 1);

int predict(const Model& model, const Eigen::Ref<const Vector>& x);

}  // namespace clfbench::mlp
