#pragma once

#include <vector>

#include "clfbench/linalg.hpp"
#include "clfbench/rng.hpp"

namespace clfbench::tree {

struct Node {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  std::vector<double> class_counts;  // training distribution at this node
  int majority = 0;                  // class index, lowest on ties

  bool is_leaf() const { return feature < 0; }
};

struct Tree {
  std::vector<Node> nodes;  // node 0 is the root; pruned nodes are orphaned
  std::vector<int> class_ids;
  int n_features = 0;
  bool laplace = false;  // -A, affects leaf probabilities only

  int predict_index(const Eigen::Ref<const Vector>& x) const;
  int predict(const Eigen::Ref<const Vector>& x) const;
  /// Leaf class distribution for x (Laplace-smoothed when enabled).
  std::vector<double> distribution(const Eigen::Ref<const Vector>& x) const;

  int n_leaves() const;
  int depth() const;  // single leaf has depth 0
};

struct GrowOptions {
  enum class Criterion { GainRatio, Gini, InfoGain };
  Criterion criterion = Criterion::GainRatio;
  int min_instances = 2;
  int max_depth = 0;    // 0 = unlimited
  int k_features = 0;   // 0 = consider all features, else a random subset
  Rng* rng = nullptr;   // required when k_features > 0
};

/// Grows an unpruned tree on the given rows. y_index holds class positions.
Tree grow_tree(const Matrix& x, const std::vector<int>& y_index,
               const std::vector<int>& rows, int n_classes,
               const GrowOptions& options);

struct C45Params {
  bool unpruned = false;        // -U
  bool subtree_raising = false; // -S (accepted, no effect here)
  bool laplace = false;         // -A
  double confidence = 0.25;     // -C
  int min_instances = 2;        // -M
  int rep_folds = 0;            // -N; >= 2 switches to reduced-error pruning
};

Tree c45_fit(const C45Params& params, const Matrix& x,
             const std::vector<int>& y);

struct CartParams {
  int seed = 1;            // -S, shuffling for the pruning cross-validation
  double size_per = 1.0;   // -C (accepted, no effect here)
  int min_instances = 2;   // -M
  int folds = 5;           // -N
  bool one_se = false;     // -A
  bool heuristic = false;  // -H (accepted, no effect on numeric features)
  bool unpruned = false;   // -U
};

Tree cart_fit(const CartParams& params, const Matrix& x,
              const std::vector<int>& y);

/// Binomial upper confidence bound used by C4.5's error-based pruning.
double pessimistic_errors(double errors, double n, double confidence);

}  // namespace clfbench::tree
