#include "clfbench/classifiers/naive_bayes.hpp"

#include <algorithm>
#include <cmath>

#include "clfbench/classifiers/common.hpp"

namespace clfbench::nb {

namespace {

constexpr double kLogSqrt2Pi = 0.9189385332046727;  // log(sqrt(2*pi))

double log_gaussian(double x, double mean, double var) {
  const double d = x - mean;
  return -0.5 * d * d / var - 0.5 * std::log(var) - kLogSqrt2Pi;
}

int bin_of(const Model& model, int feature, double value) {
  // Inner edges partition the line into kBins cells; out-of-range values
  // clamp into the first/last bin.
  for (int e = 0; e < kBins - 1; ++e)
    if (value <= model.bin_edges(feature, e)) return e;
  return kBins - 1;
}

}  // namespace

Model fit(const Params& params, const Matrix& x, const std::vector<int>& y) {
  if (x.rows() == 0) throw ValidationError("naive_bayes: empty training set");
  Model model;
  model.params = params;
  model.class_ids = collect_class_ids(y);
  model.n_features = static_cast<int>(x.cols());
  const int n_classes = static_cast<int>(model.class_ids.size());
  const int f = model.n_features;
  const auto n = x.rows();

  std::vector<std::vector<int>> rows_of(static_cast<std::size_t>(n_classes));
  for (Eigen::Index r = 0; r < n; ++r)
    rows_of[static_cast<std::size_t>(
                class_index_of(model.class_ids, y[static_cast<std::size_t>(r)]))]
        .push_back(static_cast<int>(r));

  model.log_prior.resize(static_cast<std::size_t>(n_classes));
  for (int c = 0; c < n_classes; ++c)
    model.log_prior[static_cast<std::size_t>(c)] =
        std::log(static_cast<double>(rows_of[static_cast<std::size_t>(c)].size()) /
                 static_cast<double>(n));

  if (params.discretize) {
    // Global equal-frequency edges from the pooled training values.
    model.bin_edges = Matrix(f, kBins - 1);
    std::vector<double> column(static_cast<std::size_t>(n));
    for (int j = 0; j < f; ++j) {
      for (Eigen::Index r = 0; r < n; ++r)
        column[static_cast<std::size_t>(r)] = x(r, j);
      std::sort(column.begin(), column.end());
      for (int e = 0; e < kBins - 1; ++e) {
        const double pos = static_cast<double>(e + 1) * n / kBins;
        const auto idx = std::min<std::size_t>(
            static_cast<std::size_t>(pos), column.size() - 1);
        model.bin_edges(j, e) = column[idx];
      }
    }
    for (int c = 0; c < n_classes; ++c) {
      Matrix counts = Matrix::Zero(f, kBins);
      for (int r : rows_of[static_cast<std::size_t>(c)])
        for (int j = 0; j < f; ++j) ++counts(j, bin_of(model, j, x(r, j)));
      const double denom =
          static_cast<double>(rows_of[static_cast<std::size_t>(c)].size()) +
          kBins;
      Matrix logp(f, kBins);
      for (int j = 0; j < f; ++j)
        for (int b = 0; b < kBins; ++b)
          logp(j, b) = std::log((counts(j, b) + 1.0) / denom);
      model.log_bin_prob.push_back(std::move(logp));
    }
    return model;
  }

  if (params.kernel) {
    model.bandwidth = Vector(f);
    for (int j = 0; j < f; ++j) {
      const double range = x.col(j).maxCoeff() - x.col(j).minCoeff();
      model.bandwidth(j) =
          std::max(range / std::sqrt(static_cast<double>(n)), 1e-3);
    }
    for (int c = 0; c < n_classes; ++c) {
      const auto& rows = rows_of[static_cast<std::size_t>(c)];
      Matrix values(static_cast<Eigen::Index>(rows.size()), f);
      for (std::size_t i = 0; i < rows.size(); ++i)
        values.row(static_cast<Eigen::Index>(i)) = x.row(rows[i]);
      model.class_values.push_back(std::move(values));
    }
    return model;
  }

  model.mean = Matrix(n_classes, f);
  model.var = Matrix(n_classes, f);
  for (int c = 0; c < n_classes; ++c) {
    const auto& rows = rows_of[static_cast<std::size_t>(c)];
    for (int j = 0; j < f; ++j) {
      double sum = 0.0;
      for (int r : rows) sum += x(r, j);
      const double mean = sum / static_cast<double>(rows.size());
      double ss = 0.0;
      for (int r : rows) {
        const double d = x(r, j) - mean;
        ss += d * d;
      }
      model.mean(c, j) = mean;
      model.var(c, j) =
          std::max(ss / static_cast<double>(rows.size()), kVarianceFloor);
    }
  }
  return model;
}

Vector posterior(const Model& model, const Eigen::Ref<const Vector>& x) {
  check_dimension(model.n_features, x.size());
  const int n_classes = static_cast<int>(model.class_ids.size());
  Vector logp(n_classes);

  for (int c = 0; c < n_classes; ++c) {
    double lp = model.log_prior[static_cast<std::size_t>(c)];
    if (model.params.discretize) {
      for (int j = 0; j < model.n_features; ++j)
        lp += model.log_bin_prob[static_cast<std::size_t>(c)](
            j, bin_of(model, j, x(j)));
    } else if (model.params.kernel) {
      const Matrix& values = model.class_values[static_cast<std::size_t>(c)];
      for (int j = 0; j < model.n_features; ++j) {
        const double h = model.bandwidth(j);
        // log of the average of Gaussian kernels, via log-sum-exp
        double max_term = -std::numeric_limits<double>::infinity();
        for (Eigen::Index r = 0; r < values.rows(); ++r)
          max_term =
              std::max(max_term, log_gaussian(x(j), values(r, j), h * h));
        double sum = 0.0;
        for (Eigen::Index r = 0; r < values.rows(); ++r)
          sum += std::exp(log_gaussian(x(j), values(r, j), h * h) - max_term);
        lp += max_term + std::log(sum) -
              std::log(static_cast<double>(values.rows()));
      }
    } else {
      for (int j = 0; j < model.n_features; ++j)
        lp += log_gaussian(x(j), model.mean(c, j), model.var(c, j));
    }
    logp(c) = lp;
  }

  const double max_lp = logp.maxCoeff();
  Vector p = (logp.array() - max_lp).exp();
  p /= p.sum();
  return p;
}

int predict(const Model& model, const Eigen::Ref<const Vector>& x) {
  const Vector p = posterior(model, x);
  std::vector<double> scores(p.data(), p.data() + p.size());
  return model.class_ids[static_cast<std::size_t>(argmax_lowest(scores))];
}

}  // namespace clfbench::nb
