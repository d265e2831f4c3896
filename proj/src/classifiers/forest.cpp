#include "clfbench/classifiers/forest.hpp"

#include <cmath>

#include "clfbench/classifiers/common.hpp"

namespace clfbench::forest {

Model fit(const Params& params, const Matrix& x, const std::vector<int>& y) {
  if (x.rows() == 0) throw ValidationError("forest: empty training set");
  if (params.trees < 1) throw ValidationError("forest: I must be >= 1");
  if (params.k < 0) throw ValidationError("forest: K must be >= 0");

  Model model;
  model.class_ids = collect_class_ids(y);
  model.n_features = static_cast<int>(x.cols());
  const int n_classes = static_cast<int>(model.class_ids.size());
  const int n = static_cast<int>(x.rows());

  std::vector<int> y_index(y.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    y_index[i] = class_index_of(model.class_ids, y[i]);

  int k = params.k;
  if (k == 0)
    k = static_cast<int>(std::floor(std::log2(
            static_cast<double>(model.n_features)))) + 1;
  k = std::min(k, model.n_features);

  Rng base(static_cast<std::uint64_t>(params.seed));
  model.trees.reserve(static_cast<std::size_t>(params.trees));
  for (int t = 0; t < params.trees; ++t) {
    Rng tree_rng = base.derive(static_cast<std::uint64_t>(t));
    // Bootstrap resample of the training set, same size, with replacement.
    std::vector<int> rows(static_cast<std::size_t>(n));
    for (auto& r : rows) r = static_cast<int>(tree_rng.next_int(0, n - 1));

    tree::GrowOptions opt;
    opt.criterion = tree::GrowOptions::Criterion::InfoGain;
    opt.min_instances = 1;
    opt.max_depth = params.depth;
    opt.k_features = k;
    opt.rng = &tree_rng;
    tree::Tree tr = tree::grow_tree(x, y_index, rows, n_classes, opt);
    tr.class_ids = model.class_ids;
    model.trees.push_back(std::move(tr));
  }
  return model;
}

std::vector<int> vote_counts(const Model& model,
                             const Eigen::Ref<const Vector>& x) {
  check_dimension(model.n_features, x.size());
  std::vector<int> votes(model.class_ids.size(), 0);
  for (const auto& tr : model.trees)
    ++votes[static_cast<std::size_t>(tr.predict_index(x))];
  return votes;
}

int predict(const Model& model, const Eigen::Ref<const Vector>& x) {
  const auto votes = vote_counts(model, x);
  std::vector<double> scores(votes.begin(), votes.end());
  return model.class_ids[static_cast<std::size_t>(argmax_lowest(scores))];
}

}  // namespace clfbench::forest
