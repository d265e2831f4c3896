#include "clfbench/classifiers/logistic.hpp"

#include <cmath>

#include "clfbench/classifiers/common.hpp"

namespace clfbench::logistic {

namespace {

// Class probabilities for one augmented row z = [1, x]; the reference class
// (last) has logit 0.
Vector probabilities(const Matrix& weights, const Vector& z) {
  const auto k = weights.rows();  // n_classes - 1
  Vector logits(k + 1);
  logits.head(k) = weights * z;
  logits(k) = 0.0;
  const double m = logits.maxCoeff();
  Vector p = (logits.array() - m).exp();
  p /= p.sum();
  return p;
}

double penalty(const Matrix& weights, double ridge) {
  if (weights.cols() < 2) return 0.0;
  return ridge * weights.rightCols(weights.cols() - 1).squaredNorm();
}

}  // namespace

double nll_and_gradient(const Matrix& weights, const Matrix& x,
                        const std::vector<int>& y_index, int n_classes,
                        double ridge, Matrix& gradient) {
  const int f = static_cast<int>(x.cols());
  const auto k = weights.rows();
  gradient = Matrix::Zero(k, f + 1);
  double nll = 0.0;
  Vector z(f + 1);
  z(0) = 1.0;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    z.tail(f) = x.row(i).transpose();
    const Vector p = probabilities(weights, z);
    const int yi = y_index[static_cast<std::size_t>(i)];
    nll -= std::log(std::max(p(yi), 1e-300));
    for (Eigen::Index c = 0; c < k; ++c) {
      const double coef = p(c) - (yi == static_cast<int>(c) ? 1.0 : 0.0);
      gradient.row(c) += coef * z.transpose();
    }
  }
  if (f >= 1)
    gradient.rightCols(f) += 2.0 * ridge * weights.rightCols(f);
  (void)n_classes;
  return nll + penalty(weights, ridge);
}

namespace {

double nll_only(const Matrix& weights, const Matrix& x,
                const std::vector<int>& y_index, double ridge) {
  const int f = static_cast<int>(x.cols());
  double nll = 0.0;
  Vector z(f + 1);
  z(0) = 1.0;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    z.tail(f) = x.row(i).transpose();
    const Vector p = probabilities(weights, z);
    nll -= std::log(std::max(p(y_index[static_cast<std::size_t>(i)]), 1e-300));
  }
  return nll + penalty(weights, ridge);
}

}  // namespace

Model fit(const Params& params, const Matrix& x, const std::vector<int>& y) {
  if (x.rows() == 0) throw ValidationError("logistic: empty training set");
  if (params.ridge < 0.0) throw ValidationError("logistic: R must be >= 0");
  if (params.max_iterations < 1)
    throw ValidationError("logistic: M must be >= 1");

  Model model;
  model.class_ids = collect_class_ids(y);
  const int n_classes = static_cast<int>(model.class_ids.size());
  const int f = static_cast<int>(x.cols());
  const int k = n_classes - 1;
  model.weights = Matrix::Zero(k, f + 1);
  if (k == 0) return model;

  std::vector<int> y_index(y.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    y_index[i] = class_index_of(model.class_ids, y[i]);

  const int dim = k * (f + 1);
  Matrix gradient;
  double loss = nll_and_gradient(model.weights, x, y_index, n_classes,
                                 params.ridge, gradient);

  Vector z(f + 1);
  z(0) = 1.0;
  for (int iter = 0; iter < params.max_iterations; ++iter) {
    model.iterations = iter + 1;
    model.gradient_norm = gradient.cwiseAbs().maxCoeff();
    if (model.gradient_norm <= 1e-6) break;

    // Newton direction from the exact Hessian, assembled block-wise:
    // H[(c,·),(d,·)] = sum_i p_ic (delta_cd - p_id) z_i z_i^T.
    Matrix hessian = Matrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      z.tail(f) = x.row(i).transpose();
      const Vector p = probabilities(model.weights, z);
      const Matrix outer = z * z.transpose();
      for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d) {
          const double coef = p(c) * ((c == d ? 1.0 : 0.0) - p(d));
          hessian.block(c * (f + 1), d * (f + 1), f + 1, f + 1) +=
              coef * outer;
        }
    }
    for (int c = 0; c < k; ++c)
      for (int j = 1; j <= f; ++j) {
        const int idx = c * (f + 1) + j;
        hessian(idx, idx) += 2.0 * params.ridge;
      }
    // Small diagonal damping keeps the solve well posed near separability.
    hessian.diagonal().array() += 1e-10;

    Vector g_vec(dim);
    for (int c = 0; c < k; ++c)
      for (int j = 0; j <= f; ++j) g_vec(c * (f + 1) + j) = gradient(c, j);
    Vector step = hessian.ldlt().solve(-g_vec);

    double t = 1.0;
    Matrix trial = model.weights;
    bool accepted = false;
    for (int ls = 0; ls < 40; ++ls) {
      for (int c = 0; c < k; ++c)
        for (int j = 0; j <= f; ++j)
          trial(c, j) = model.weights(c, j) + t * step(c * (f + 1) + j);
      const double trial_loss = nll_only(trial, x, y_index, params.ridge);
      if (std::isfinite(trial_loss) && trial_loss <= loss) {
        model.weights = trial;
        loss = trial_loss;
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) break;  // no further progress possible at this scale
    loss = nll_and_gradient(model.weights, x, y_index, n_classes, params.ridge,
                            gradient);
    if (!std::isfinite(loss))
      throw NumericError("logistic: training diverged (non-finite loss)");
  }
  model.gradient_norm = gradient.cwiseAbs().maxCoeff();
  return model;
}

Vector scores(const Model& model, const Eigen::Ref<const Vector>& x) {
  const auto k = model.weights.rows();
  check_dimension(static_cast<int>(model.weights.cols()) - 1, x.size());
  Vector z(x.size() + 1);
  z(0) = 1.0;
  z.tail(x.size()) = x;
  Vector s(k + 1);
  s.head(k) = model.weights * z;
  s(k) = 0.0;
  return s;
}

int predict(const Model& model, const Eigen::Ref<const Vector>& x) {
  if (model.class_ids.size() == 1) {
    check_dimension(static_cast<int>(model.weights.cols()) - 1, x.size());
    return model.class_ids[0];
  }
  const Vector s = scores(model, x);
  std::vector<double> sc(s.data(), s.data() + s.size());
  return model.class_ids[static_cast<std::size_t>(argmax_lowest(sc))];
}

}  // namespace clfbench::logistic
