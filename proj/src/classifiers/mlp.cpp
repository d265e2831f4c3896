#include "clfbench/classifiers/mlp.hpp"

#include <cmath>

#include "clfbench/classifiers/common.hpp"
#include "clfbench/rng.hpp"

namespace clfbench::mlp {

namespace {

void forward(const Weights& w, const Eigen::Ref<const Vector>& x,
             Vector& hidden, Vector& out) {
  hidden.noalias() = w.w1 * x;
  hidden += w.b1;
  hidden = hidden.unaryExpr(
      [](double v) { return 1.0 / (1.0 + std::exp(-v)); });
  out.noalias() = w.w2 * hidden;
  out += w.b2;
  const double m = out.maxCoeff();
  out = (out.array() - m).exp();
  out /= out.sum();
}

}  // namespace

int resolve_hidden(int hidden, int n_features, int n_classes) {
  if (hidden > 0) return hidden;
  return static_cast<int>(
      std::lround((n_features + n_classes) / 2.0));
}

double loss_and_gradient(const Weights& w, const Matrix& x,
                         const std::vector<int>& y_index, Weights& g) {
  g.w1 = Matrix::Zero(w.w1.rows(), w.w1.cols());
  g.b1 = Vector::Zero(w.b1.size());
  g.w2 = Matrix::Zero(w.w2.rows(), w.w2.cols());
  g.b2 = Vector::Zero(w.b2.size());
  Vector hidden(w.b1.size()), out(w.b2.size());
  double loss = 0.0;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    const Vector xi = x.row(i).transpose();
    forward(w, xi, hidden, out);
    const int yi = y_index[static_cast<std::size_t>(i)];
    loss -= std::log(std::max(out(yi), 1e-300));
    Vector d2 = out;
    d2(yi) -= 1.0;
    g.w2.noalias() += d2 * hidden.transpose();
    g.b2 += d2;
    const Vector d1 = (w.w2.transpose() * d2).array() * hidden.array() *
                      (1.0 - hidden.array());
    g.w1.noalias() += d1 * xi.transpose();
    g.b1 += d1;
  }
  return loss;
}

Model fit(const Params& params, const Matrix& x, const std::vector<int>& y,
          std::uint64_t seed) {
  if (x.rows() == 0) throw ValidationError("mlp: empty training set");
  if (!(params.learning_rate > 0.0))
    throw ValidationError("mlp: L must be > 0");
  if (!(params.momentum >= 0.0 && params.momentum < 1.0))
    throw ValidationError("mlp: M must be in [0, 1)");
  if (params.val_percent < 0 || params.val_percent > 50)
    throw ValidationError("mlp: V must be in [0, 50]");
  if (params.epochs < 1) throw ValidationError("mlp: N must be >= 1");

  Model model;
  model.class_ids = collect_class_ids(y);
  model.n_features = static_cast<int>(x.cols());
  const int n_classes = static_cast<int>(model.class_ids.size());
  const int f = model.n_features;
  const int h = resolve_hidden(params.hidden, f, n_classes);

  std::vector<int> y_index(y.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    y_index[i] = class_index_of(model.class_ids, y[i]);

  Rng rng(seed);
  Rng init_rng = rng.derive(0);
  auto init = [&init_rng](Eigen::Index rows, Eigen::Index cols) {
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j)
        m(i, j) = init_rng.next_uniform(-0.5, 0.5);
    return m;
  };
  Weights w{init(h, f), init(h, 1).col(0), init(n_classes, h),
            init(n_classes, 1).col(0)};

  // Stratified validation holdout for early stopping.
  std::vector<int> train_rows, val_rows;
  if (params.val_percent > 0) {
    std::vector<std::vector<int>> by_class(
        static_cast<std::size_t>(n_classes));
    for (int r = 0; r < static_cast<int>(x.rows()); ++r)
      by_class[static_cast<std::size_t>(y_index[static_cast<std::size_t>(r)])]
          .push_back(r);
    Rng split_rng = rng.derive(1);
    for (auto& rows : by_class) {
      for (int i = static_cast<int>(rows.size()) - 1; i > 0; --i) {
        const auto j = static_cast<int>(split_rng.next_int(0, i));
        std::swap(rows[static_cast<std::size_t>(i)],
                  rows[static_cast<std::size_t>(j)]);
      }
      const auto n_val = static_cast<std::size_t>(
          std::lround(rows.size() * params.val_percent / 100.0));
      for (std::size_t i = 0; i < rows.size(); ++i)
        (i < n_val ? val_rows : train_rows).push_back(rows[i]);
    }
    if (train_rows.empty()) {
      train_rows = std::move(val_rows);
      val_rows.clear();
    }
  } else {
    train_rows.resize(static_cast<std::size_t>(x.rows()));
    for (int r = 0; r < static_cast<int>(x.rows()); ++r)
      train_rows[static_cast<std::size_t>(r)] = r;
  }

  Weights velocity{Matrix::Zero(h, f), Vector::Zero(h),
                   Matrix::Zero(n_classes, h), Vector::Zero(n_classes)};
  Vector hidden(h), out(n_classes), d2(n_classes), d1(h);

  auto validation_errors = [&]() {
    int errors = 0;
    for (int r : val_rows) {
      forward(w, x.row(r).transpose(), hidden, out);
      int best = 0;
      for (int c = 1; c < n_classes; ++c)
        if (out(c) > out(best)) best = c;
      if (best != y_index[static_cast<std::size_t>(r)]) ++errors;
    }
    return errors;
  };

  int best_val_errors = std::numeric_limits<int>::max();
  int epochs_since_best = 0;
  Weights best_w = w;
  double lr = params.learning_rate;

  std::vector<int> order = train_rows;
  for (int epoch = 0; epoch < params.epochs; ++epoch) {
    model.epochs_run = epoch + 1;
    Rng shuffle_rng = rng.derive(2 + static_cast<std::uint64_t>(epoch));
    for (int i = static_cast<int>(order.size()) - 1; i > 0; --i) {
      const auto j = static_cast<int>(shuffle_rng.next_int(0, i));
      std::swap(order[static_cast<std::size_t>(i)],
                order[static_cast<std::size_t>(j)]);
    }
    for (int r : order) {
      const Vector xi = x.row(r).transpose();
      forward(w, xi, hidden, out);
      d2 = out;
      d2(y_index[static_cast<std::size_t>(r)]) -= 1.0;
      d1 = (w.w2.transpose() * d2).array() * hidden.array() *
           (1.0 - hidden.array());
      velocity.w2 = params.momentum * velocity.w2 - lr * (d2 * hidden.transpose());
      velocity.b2 = params.momentum * velocity.b2 - lr * d2;
      velocity.w1 = params.momentum * velocity.w1 - lr * (d1 * xi.transpose());
      velocity.b1 = params.momentum * velocity.b1 - lr * d1;
      w.w2 += velocity.w2;
      w.b2 += velocity.b2;
      w.w1 += velocity.w1;
      w.b1 += velocity.b1;
    }
    if (!w.w1.allFinite() || !w.w2.allFinite() || !w.b1.allFinite() ||
        !w.b2.allFinite())
      throw NumericError("mlp: training diverged (non-finite weights)");
    if (params.decay) lr *= 0.5;
    if (!val_rows.empty()) {
      const int errors = validation_errors();
      if (errors < best_val_errors) {
        best_val_errors = errors;
        best_w = w;
        epochs_since_best = 0;
      } else if (++epochs_since_best >= 20) {
        w = best_w;
        break;
      }
    }
  }
  if (!val_rows.empty() && best_val_errors <= validation_errors()) w = best_w;

  model.weights = std::move(w);
  return model;
}

int predict(const Model& model, const Eigen::Ref<const Vector>& x) {
  check_dimension(model.n_features, x.size());
  Vector hidden(model.weights.b1.size()), out(model.weights.b2.size());
  forward(model.weights, x, hidden, out);
  std::vector<double> scores(out.data(), out.data() + out.size());
  return model.class_ids[static_cast<std::size_t>(argmax_lowest(scores))];
}

}  // namespace clfbench::mlp
