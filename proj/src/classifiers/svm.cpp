#include "clfbench/classifiers/svm.hpp"

#include <cmath>
#include <sstream>

#include "clfbench/classifiers/common.hpp"

namespace clfbench::svm {

namespace {

double int_pow(double base, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

double kernel_eval(const KernelSpec& kernel, const Eigen::Ref<const Vector>& x,
                   const Eigen::Ref<const Vector>& y) {
  if (x.size() != y.size())
    throw ValidationError("kernel_eval: dimension mismatch");
  switch (kernel.type) {
    case KernelType::Poly:
      return int_pow(x.dot(y), kernel.exponent);
    case KernelType::NormalizedPoly: {
      const double denom =
          int_pow(x.dot(x), kernel.exponent) * int_pow(y.dot(y), kernel.exponent);
      if (denom <= 0.0) return 0.0;
      return int_pow(x.dot(y), kernel.exponent) / std::sqrt(denom);
    }
    case KernelType::Rbf:
      return std::exp(-kernel.gamma * (x - y).squaredNorm());
    case KernelType::Puk: {
      const double d2 = (x - y).squaredNorm();
      const double c = 4.0 * (std::pow(2.0, 1.0 / kernel.omega) - 1.0) /
                       (kernel.sigma * kernel.sigma);
      return 1.0 / std::pow(1.0 + c * d2, kernel.omega);
    }
  }
  throw ValidationError("kernel_eval: bad kernel type");
}

namespace {

// Sequential minimal optimization on a precomputed kernel matrix, choosing
// the maximal violating pair each round (dual-threshold termination).
// Decision values follow u_i = sum_j alpha_j y_j K(j,i) - b.
class SmoSolver {
 public:
  SmoSolver(const Matrix& kernel, const std::vector<int>& y, double c,
            double tol, double eps)
      : k_(kernel),
        y_(y),
        c_(c),
        tol_(tol),
        eps_(std::max(eps, 1e-15)),
        n_(static_cast<int>(y.size())),
        alpha_(y.size(), 0.0),
        f_(y.size()) {
    // f_i = sum_j alpha_j y_j K(j,i) - y_i, zero alphas to start
    for (int i = 0; i < n_; ++i)
      f_[static_cast<std::size_t>(i)] = -y_[static_cast<std::size_t>(i)];
  }

  void solve() {
    const long long budget = std::max<long long>(200000, 2000LL * n_);
    for (long long iter = 0;; ++iter) {
      if (iter >= budget) {
        std::ostringstream os;
        os << "svm: SMO did not converge within " << budget
           << " iterations (worst KKT violation " << worst_kkt() << ")";
        throw NumericError(os.str());
      }
      // maximal violating pair: i raises its alpha*y, j lowers
      int up = -1, low = -1;
      for (int i = 0; i < n_; ++i) {
        const double f = f_[static_cast<std::size_t>(i)];
        if (in_up(i) && (up < 0 || f < f_[static_cast<std::size_t>(up)]))
          up = i;
        if (in_low(i) && (low < 0 || f > f_[static_cast<std::size_t>(low)]))
          low = i;
      }
      if (up < 0 || low < 0) break;
      const double gap = f_[static_cast<std::size_t>(low)] -
                         f_[static_cast<std::size_t>(up)];
      if (gap <= 2.0 * tol_) break;
      if (!step(up, low)) break;  // floating point cannot move this pair
    }
    // threshold from the active band
    double b_up = std::numeric_limits<double>::infinity();
    double b_low = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_; ++i) {
      if (in_up(i)) b_up = std::min(b_up, f_[static_cast<std::size_t>(i)]);
      if (in_low(i)) b_low = std::max(b_low, f_[static_cast<std::size_t>(i)]);
    }
    if (std::isfinite(b_up) && std::isfinite(b_low))
      b_ = 0.5 * (b_up + b_low);
    else if (std::isfinite(b_up))
      b_ = b_up;
    else if (std::isfinite(b_low))
      b_ = b_low;
  }

  const std::vector<double>& alpha() const { return alpha_; }
  double b() const { return b_; }

  double worst_kkt() const {
    double worst = 0.0;
    for (int i = 0; i < n_; ++i) {
      const double margin =
          y_[static_cast<std::size_t>(i)] *
          (f_[static_cast<std::size_t>(i)] + y_[static_cast<std::size_t>(i)] -
           b_);
      const double a = alpha_[static_cast<std::size_t>(i)];
      if (a <= 0.0)
        worst = std::max(worst, 1.0 - margin);
      else if (a >= c_)
        worst = std::max(worst, margin - 1.0);
      else
        worst = std::max(worst, std::fabs(margin - 1.0));
    }
    return worst;
  }

 private:
  bool in_up(int i) const {
    const double a = alpha_[static_cast<std::size_t>(i)];
    return y_[static_cast<std::size_t>(i)] > 0 ? a < c_ : a > 0.0;
  }
  bool in_low(int i) const {
    const double a = alpha_[static_cast<std::size_t>(i)];
    return y_[static_cast<std::size_t>(i)] > 0 ? a > 0.0 : a < c_;
  }

  bool step(int i1, int i2) {
    const double alph1 = alpha_[static_cast<std::size_t>(i1)];
    const double alph2 = alpha_[static_cast<std::size_t>(i2)];
    const double y1 = y_[static_cast<std::size_t>(i1)];
    const double y2 = y_[static_cast<std::size_t>(i2)];
    const double s = y1 * y2;

    double lo, hi;  // bounds for the new alpha2
    if (s < 0.0) {
      lo = std::max(0.0, alph2 - alph1);
      hi = std::min(c_, c_ + alph2 - alph1);
    } else {
      lo = std::max(0.0, alph1 + alph2 - c_);
      hi = std::min(c_, alph1 + alph2);
    }
    if (lo >= hi) return false;

    const double k11 = k_(i1, i1), k12 = k_(i1, i2), k22 = k_(i2, i2);
    const double eta = std::max(k11 + k22 - 2.0 * k12, 1e-12);
    const double f1 = f_[static_cast<std::size_t>(i1)];
    const double f2 = f_[static_cast<std::size_t>(i2)];
    double a2 = std::clamp(alph2 + y2 * (f1 - f2) / eta, lo, hi);
    if (std::fabs(a2 - alph2) < eps_ * (a2 + alph2 + eps_)) return false;
    double a1 = alph1 + s * (alph2 - a2);

    // round-off snap to the box bounds
    const double snap = 1e-12 * std::max(1.0, c_);
    if (std::fabs(a1) < snap) a1 = 0.0;
    if (std::fabs(a1 - c_) < snap) a1 = c_;
    if (std::fabs(a2) < snap) a2 = 0.0;
    if (std::fabs(a2 - c_) < snap) a2 = c_;
    if (a1 == alph1 && a2 == alph2) return false;

    const double d1 = y1 * (a1 - alph1);
    const double d2 = y2 * (a2 - alph2);
    for (int j = 0; j < n_; ++j)
      f_[static_cast<std::size_t>(j)] += d1 * k_(i1, j) + d2 * k_(i2, j);
    alpha_[static_cast<std::size_t>(i1)] = a1;
    alpha_[static_cast<std::size_t>(i2)] = a2;
    return true;
  }

  const Matrix& k_;
  const std::vector<int>& y_;
  double c_, tol_, eps_;
  int n_;
  std::vector<double> alpha_;
  std::vector<double> f_;  // f_i = u_i + b - y_i (threshold-free errors)
  double b_ = 0.0;
};

}  // namespace

Vector Model::apply_scaling(const Eigen::Ref<const Vector>& x) const {
  return (x - shift).cwiseQuotient(scale);
}

Model fit(const Params& params, const Matrix& x, const std::vector<int>& y) {
  if (x.rows() == 0) throw ValidationError("svm: empty training set");
  if (!(params.c > 0.0)) throw ValidationError("svm: C must be > 0");
  if (!(params.tolerance > 0.0)) throw ValidationError("svm: L must be > 0");
  if (params.kernel.exponent < 1)
    throw ValidationError("svm: E must be >= 1");

  Model model;
  model.params = params;
  model.class_ids = collect_class_ids(y);
  const int f = static_cast<int>(x.cols());

  model.shift = Vector::Zero(f);
  model.scale = Vector::Ones(f);
  if (params.scaling == Scaling::Normalize) {
    for (int j = 0; j < f; ++j) {
      const double lo = x.col(j).minCoeff();
      const double hi = x.col(j).maxCoeff();
      model.shift(j) = lo;
      model.scale(j) = hi > lo ? hi - lo : 1.0;
    }
  } else if (params.scaling == Scaling::Standardize) {
    for (int j = 0; j < f; ++j) {
      const double mean = x.col(j).mean();
      const double var = (x.col(j).array() - mean).square().mean();
      model.shift(j) = mean;
      model.scale(j) = var > 0.0 ? std::sqrt(var) : 1.0;
    }
  }
  model.train_x = Matrix(x.rows(), f);
  for (int j = 0; j < f; ++j)
    model.train_x.col(j) = (x.col(j).array() - model.shift(j)) / model.scale(j);

  const int n_classes = static_cast<int>(model.class_ids.size());
  std::vector<std::vector<int>> rows_of(static_cast<std::size_t>(n_classes));
  for (Eigen::Index r = 0; r < x.rows(); ++r)
    rows_of[static_cast<std::size_t>(class_index_of(
                model.class_ids, y[static_cast<std::size_t>(r)]))]
        .push_back(static_cast<int>(r));

  for (int a = 0; a < n_classes; ++a) {
    for (int b = a + 1; b < n_classes; ++b) {
      BinaryMachine machine;
      machine.pos_class_index = a;
      machine.neg_class_index = b;
      for (int r : rows_of[static_cast<std::size_t>(a)]) {
        machine.rows.push_back(r);
        machine.y.push_back(1);
      }
      for (int r : rows_of[static_cast<std::size_t>(b)]) {
        machine.rows.push_back(r);
        machine.y.push_back(-1);
      }
      const int n = static_cast<int>(machine.rows.size());
      Matrix kernel(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
          const double v = kernel_eval(
              params.kernel,
              model.train_x.row(machine.rows[static_cast<std::size_t>(i)])
                  .transpose(),
              model.train_x.row(machine.rows[static_cast<std::size_t>(j)])
                  .transpose());
          kernel(i, j) = v;
          kernel(j, i) = v;
        }
      }
      SmoSolver solver(kernel, machine.y, params.c, params.tolerance,
                       params.epsilon);
      solver.solve();
      machine.alpha = solver.alpha();
      machine.b = solver.b();
      model.machines.push_back(std::move(machine));
    }
  }
  return model;
}

double decision_value(const Model& model, std::size_t machine_index,
                      const Eigen::Ref<const Vector>& x) {
  check_dimension(static_cast<int>(model.train_x.cols()), x.size());
  const BinaryMachine& machine = model.machines[machine_index];
  const Vector xs = model.apply_scaling(x);
  double u = -machine.b;
  for (std::size_t i = 0; i < machine.rows.size(); ++i) {
    if (machine.alpha[i] == 0.0) continue;
    u += machine.alpha[i] * machine.y[i] *
         kernel_eval(model.params.kernel,
                     model.train_x.row(machine.rows[i]).transpose(), xs);
  }
  return u;
}

int predict(const Model& model, const Eigen::Ref<const Vector>& x) {
  check_dimension(static_cast<int>(model.train_x.cols()), x.size());
  std::vector<double> votes(model.class_ids.size(), 0.0);
  for (std::size_t m = 0; m < model.machines.size(); ++m) {
    const auto& machine = model.machines[m];
    const double u = decision_value(model, m, x);
    ++votes[static_cast<std::size_t>(u >= 0.0 ? machine.pos_class_index
                                              : machine.neg_class_index)];
  }
  return model.class_ids[static_cast<std::size_t>(argmax_lowest(votes))];
}

double max_kkt_violation(const Model& model, const BinaryMachine& machine) {
  const double c = model.params.c;
  double worst = 0.0;
  for (std::size_t i = 0; i < machine.rows.size(); ++i) {
    double u = -machine.b;
    for (std::size_t j = 0; j < machine.rows.size(); ++j) {
      if (machine.alpha[j] == 0.0) continue;
      u += machine.alpha[j] * machine.y[j] *
           kernel_eval(model.params.kernel,
                       model.train_x.row(machine.rows[j]).transpose(),
                       model.train_x.row(machine.rows[i]).transpose());
    }
    const double margin = machine.y[i] * u;
    if (machine.alpha[i] <= 0.0)
      worst = std::max(worst, 1.0 - margin);
    else if (machine.alpha[i] >= c)
      worst = std::max(worst, margin - 1.0);
    else
      worst = std::max(worst, std::fabs(margin - 1.0));
  }
  return worst;
}

double equality_gap(const BinaryMachine& machine) {
  double s = 0.0;
  for (std::size_t i = 0; i < machine.alpha.size(); ++i)
    s += machine.alpha[i] * machine.y[i];
  return std::fabs(s);
}

}  // namespace clfbench::svm
