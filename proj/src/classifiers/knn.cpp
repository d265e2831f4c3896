#include "clfbench/classifiers/knn.hpp"

#include <algorithm>
#include <cmath>

#include "clfbench/classifiers/common.hpp"

namespace clfbench::knn {

namespace {

struct Neighbor {
  double dist;
  int index;
  bool operator<(const Neighbor& o) const {
    return dist != o.dist ? dist < o.dist : index < o.index;
  }
};

// Weighted vote over the given neighbors. Ties go to the class whose nearest
// member is closest, then to the lowest class id.
int vote(const std::vector<Neighbor>& neighbors, std::size_t take,
         const std::vector<int>& labels, const std::vector<int>& class_ids,
         const Params& params) {
  const std::size_t n_classes = class_ids.size();
  std::vector<double> score(n_classes, 0.0);
  std::vector<double> nearest(n_classes,
                              std::numeric_limits<double>::infinity());
  bool any_weight = false;
  for (std::size_t i = 0; i < take; ++i) {
    const auto& nb = neighbors[i];
    const int ci = class_index_of(class_ids, labels[static_cast<std::size_t>(
                                     nb.index)]);
    double w = 1.0;
    if (params.inverse_distance)
      w = 1.0 / std::max(nb.dist, 1e-12);
    else if (params.similarity)
      w = std::max(1.0 - nb.dist, 0.0);
    score[static_cast<std::size_t>(ci)] += w;
    nearest[static_cast<std::size_t>(ci)] =
        std::min(nearest[static_cast<std::size_t>(ci)], nb.dist);
    if (w > 0.0) any_weight = true;
  }
  if (!any_weight) {
    // All similarity weights clipped to zero: plain majority instead.
    std::fill(score.begin(), score.end(), 0.0);
    for (std::size_t i = 0; i < take; ++i)
      score[static_cast<std::size_t>(class_index_of(
          class_ids, labels[static_cast<std::size_t>(neighbors[i].index)]))] +=
          1.0;
  }

  double best_score = -1.0;
  for (double s : score) best_score = std::max(best_score, s);
  int chosen = -1;
  double chosen_nearest = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < n_classes; ++c) {
    if (score[c] != best_score) continue;
    if (chosen < 0 || nearest[c] < chosen_nearest) {
      chosen = static_cast<int>(c);
      chosen_nearest = nearest[c];
    }
  }
  return class_ids[static_cast<std::size_t>(chosen)];
}

std::vector<Neighbor> sorted_neighbors(const Matrix& train,
                                       const Eigen::Ref<const Vector>& x,
                                       int skip = -1) {
  std::vector<Neighbor> nb;
  nb.reserve(static_cast<std::size_t>(train.rows()));
  for (Eigen::Index i = 0; i < train.rows(); ++i) {
    if (static_cast<int>(i) == skip) continue;
    nb.push_back({std::sqrt((train.row(i).transpose() - x).squaredNorm()),
                  static_cast<int>(i)});
  }
  std::sort(nb.begin(), nb.end());
  return nb;
}

}  // namespace

Model fit(const Params& params, const Matrix& x, const std::vector<int>& y) {
  if (x.rows() == 0) throw ValidationError("knn: empty training set");
  if (params.k < 1) throw ValidationError("knn: K must be >= 1");
  Model model;
  model.params = params;
  model.train_x = x;
  model.labels = y;
  model.class_ids = collect_class_ids(y);
  model.effective_k = std::min<int>(params.k, static_cast<int>(x.rows()));

  if (params.cv_select && model.effective_k > 1) {
    const int n = static_cast<int>(x.rows());
    std::vector<int> correct(static_cast<std::size_t>(model.effective_k) + 1,
                             0);
    for (int i = 0; i < n; ++i) {
      const auto nb = sorted_neighbors(x, x.row(i).transpose(), i);
      for (int kk = 1; kk <= model.effective_k; ++kk) {
        const std::size_t take =
            std::min<std::size_t>(static_cast<std::size_t>(kk), nb.size());
        if (take == 0) continue;
        if (vote(nb, take, y, model.class_ids, params) ==
            y[static_cast<std::size_t>(i)])
          ++correct[static_cast<std::size_t>(kk)];
      }
    }
    int best_k = 1;
    for (int kk = 2; kk <= model.effective_k; ++kk)
      if (correct[static_cast<std::size_t>(kk)] >
          correct[static_cast<std::size_t>(best_k)])
        best_k = kk;
    model.effective_k = best_k;
  }
  return model;
}

int predict(const Model& model, const Eigen::Ref<const Vector>& x) {
  check_dimension(static_cast<int>(model.train_x.cols()), x.size());
  const auto nb = sorted_neighbors(model.train_x, x);
  const std::size_t take =
      std::min<std::size_t>(static_cast<std::size_t>(model.effective_k),
                            nb.size());
  return vote(nb, take, model.labels, model.class_ids, model.params);
}

}  // namespace clfbench::knn
