#include "clfbench/classifiers/dispatch.hpp"

#include "clfbench/classifiers/common.hpp"
#include "clfbench/classifiers/forest.hpp"
#include "clfbench/classifiers/knn.hpp"
#include "clfbench/classifiers/logistic.hpp"
#include "clfbench/classifiers/mlp.hpp"
#include "clfbench/classifiers/naive_bayes.hpp"
#include "clfbench/classifiers/svm.hpp"
#include "clfbench/classifiers/tree.hpp"

namespace clfbench {

namespace {

template <typename ModelT, typename PredictFn>
class Wrapper final : public TrainedModel {
 public:
  Wrapper(ModelT model, PredictFn predict_fn, int n_features, int n_classes)
      : model_(std::move(model)), predict_fn_(std::move(predict_fn)) {
    n_features_ = n_features;
    n_classes_ = n_classes;
  }

  int predict(const Eigen::Ref<const Vector>& x) const override {
    return predict_fn_(model_, x);
  }

 private:
  ModelT model_;
  PredictFn predict_fn_;
};

template <typename ModelT, typename PredictFn>
std::unique_ptr<TrainedModel> wrap(ModelT model, PredictFn fn, int n_features,
                                   int n_classes) {
  return std::make_unique<Wrapper<ModelT, PredictFn>>(
      std::move(model), std::move(fn), n_features, n_classes);
}

}  // namespace

std::unique_ptr<TrainedModel> fit(const ClassifierConfig& config,
                                  const Matrix& x, const std::vector<int>& y) {
  if (x.rows() == 0 || y.size() != static_cast<std::size_t>(x.rows()))
    throw ValidationError("fit: empty or inconsistent training set");
  validate_config(config);
  const int f = static_cast<int>(x.cols());
  const int n_classes = static_cast<int>(collect_class_ids(y).size());

  if (config.id == "knn") {
    knn::Params p;
    p.k = static_cast<int>(get_int(config, "K"));
    p.inverse_distance = get_bool(config, "I");
    p.similarity = !p.inverse_distance && get_bool(config, "F");
    p.cv_select = get_bool(config, "X");
    return wrap(knn::fit(p, x, y),
                [](const knn::Model& m, const Eigen::Ref<const Vector>& v) {
                  return knn::predict(m, v);
                },
                f, n_classes);
  }
  if (config.id == "naive_bayes") {
    nb::Params p;
    p.kernel = get_bool(config, "K");
    p.discretize = get_bool(config, "D");
    return wrap(nb::fit(p, x, y),
                [](const nb::Model& m, const Eigen::Ref<const Vector>& v) {
                  return nb::predict(m, v);
                },
                f, n_classes);
  }
  if (config.id == "logistic") {
    logistic::Params p;
    p.ridge = get_real(config, "R");
    p.max_iterations = static_cast<int>(get_int(config, "M"));
    return wrap(logistic::fit(p, x, y),
                [](const logistic::Model& m,
                   const Eigen::Ref<const Vector>& v) {
                  return logistic::predict(m, v);
                },
                f, n_classes);
  }
  if (config.id == "c45") {
    tree::C45Params p;
    p.unpruned = get_bool(config, "U");
    p.subtree_raising = get_bool(config, "S");
    p.laplace = get_bool(config, "A");
    p.confidence = get_real(config, "C");
    p.min_instances = static_cast<int>(get_int(config, "M"));
    p.rep_folds = static_cast<int>(get_int(config, "N"));
    return wrap(tree::c45_fit(p, x, y),
                [](const tree::Tree& m, const Eigen::Ref<const Vector>& v) {
                  return m.predict(v);
                },
                f, n_classes);
  }
  if (config.id == "cart") {
    tree::CartParams p;
    p.seed = static_cast<int>(get_int(config, "S"));
    p.size_per = get_real(config, "C");
    p.min_instances = static_cast<int>(get_int(config, "M"));
    p.folds = static_cast<int>(get_int(config, "N"));
    p.one_se = get_bool(config, "A");
    p.heuristic = get_bool(config, "H");
    p.unpruned = get_bool(config, "U");
    return wrap(tree::cart_fit(p, x, y),
                [](const tree::Tree& m, const Eigen::Ref<const Vector>& v) {
                  return m.predict(v);
                },
                f, n_classes);
  }
  if (config.id == "forest") {
    forest::Params p;
    p.trees = static_cast<int>(get_int(config, "I"));
    p.k = static_cast<int>(get_int(config, "K"));
    p.depth = static_cast<int>(get_int(config, "depth"));
    p.seed = static_cast<int>(get_int(config, "S"));
    return wrap(forest::fit(p, x, y),
                [](const forest::Model& m, const Eigen::Ref<const Vector>& v) {
                  return forest::predict(m, v);
                },
                f, n_classes);
  }
  if (config.id == "svm") {
    svm::Params p;
    p.c = get_real(config, "C");
    p.tolerance = get_real(config, "L");
    p.epsilon = get_real(config, "P");
    p.scaling = static_cast<svm::Scaling>(std::stoi(get_choice(config, "N")));
    const std::string kernel = get_choice(config, "kernel");
    if (kernel == "poly")
      p.kernel.type = svm::KernelType::Poly;
    else if (kernel == "np")
      p.kernel.type = svm::KernelType::NormalizedPoly;
    else if (kernel == "rbf")
      p.kernel.type = svm::KernelType::Rbf;
    else
      p.kernel.type = svm::KernelType::Puk;
    p.kernel.exponent = static_cast<int>(get_int(config, "E"));
    p.kernel.gamma = get_real(config, "G");
    p.kernel.sigma = get_real(config, "S");
    return wrap(svm::fit(p, x, y),
                [](const svm::Model& m, const Eigen::Ref<const Vector>& v) {
                  return svm::predict(m, v);
                },
                f, n_classes);
  }
  if (config.id == "mlp") {
    mlp::Params p;
    p.decay = get_bool(config, "D");
    p.hidden = static_cast<int>(get_int(config, "H"));
    p.learning_rate = get_real(config, "L");
    p.momentum = get_real(config, "M");
    p.epochs = static_cast<int>(get_int(config, "N"));
    p.val_percent = static_cast<int>(get_int(config, "V"));
    return wrap(mlp::fit(p, x, y),
                [](const mlp::Model& m, const Eigen::Ref<const Vector>& v) {
                  return mlp::predict(m, v);
                },
                f, n_classes);
  }
  throw ValidationError("unknown classifier '" + config.id + "'");
}

}  // namespace clfbench
