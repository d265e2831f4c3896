#include <doctest.h>

#include <cmath>

#include "clfbench/classifiers/svm.hpp"
#include "clfbench/common.hpp"
#include "clfbench/rng.hpp"

using namespace clfbench;

namespace {

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

}  // namespace

TEST_CASE("kernel identities") {
  const Vector x = vec2(1.0, 2.0);
  const Vector y = vec2(-0.5, 3.0);

  svm::KernelSpec poly;
  poly.type = svm::KernelType::Poly;
  poly.exponent = 1;
  CHECK(svm::kernel_eval(poly, x, y) == doctest::Approx(x.dot(y)));

  svm::KernelSpec rbf;
  rbf.type = svm::KernelType::Rbf;
  rbf.gamma = 2.5;
  CHECK(svm::kernel_eval(rbf, x, x) == doctest::Approx(1.0));

  for (double sigma : {0.1, 1.0, 7.0}) {
    svm::KernelSpec puk;
    puk.type = svm::KernelType::Puk;
    puk.sigma = sigma;
    CHECK(svm::kernel_eval(puk, x, x) == doctest::Approx(1.0));
  }

  svm::KernelSpec np;
  np.type = svm::KernelType::NormalizedPoly;
  np.exponent = 2;
  CHECK(svm::kernel_eval(np, x, x) == doctest::Approx(1.0));

  CHECK_THROWS_AS(svm::kernel_eval(poly, x, Vector::Zero(3)),
                  ValidationError);
}

TEST_CASE("separable two-class problem: accuracy and dual feasibility") {
  Rng rng(12);
  const int n = 40;
  Matrix x(n, 2);
  std::vector<int> y;
  for (int i = 0; i < n; ++i) {
    const int c = i % 2;
    x(i, 0) = (c == 0 ? -2.0 : 2.0) + 0.3 * rng.next_normal();
    x(i, 1) = rng.next_normal();
    y.push_back(c);
  }
  svm::Params p;  // defaults: linear poly kernel, C=1, normalize
  const auto model = svm::fit(p, x, y);
  REQUIRE(model.machines.size() == 1);
  const auto& machine = model.machines[0];

  int correct = 0;
  for (int i = 0; i < n; ++i)
    if (svm::predict(model, x.row(i).transpose()) ==
        y[static_cast<std::size_t>(i)])
      ++correct;
  CHECK(correct == n);

  CHECK(svm::equality_gap(machine) <= 1e-9);
  for (double a : machine.alpha) {
    CHECK(a >= 0.0);
    CHECK(a <= p.c);
  }
  CHECK(svm::max_kkt_violation(model, machine) <= p.tolerance + 1e-9);
}

TEST_CASE("XOR with an RBF kernel reaches 100% training accuracy") {
  Matrix x(4, 2);
  x << 0, 0, 1, 1, 0, 1, 1, 0;
  const std::vector<int> y{0, 0, 1, 1};
  svm::Params p;
  p.c = 10.0;
  p.kernel.type = svm::KernelType::Rbf;
  p.kernel.gamma = 1.0;
  p.scaling = svm::Scaling::None;
  const auto model = svm::fit(p, x, y);
  for (int i = 0; i < 4; ++i)
    CHECK(svm::predict(model, x.row(i).transpose()) ==
          y[static_cast<std::size_t>(i)]);
  // direct decision-function check: strictly positive margin side for class 0
  CHECK(svm::decision_value(model, 0, vec2(0.0, 0.0)) > 0.0);
  CHECK(svm::decision_value(model, 0, vec2(0.0, 1.0)) < 0.0);
}

TEST_CASE("every trained machine of a multiclass fit satisfies the dual") {
  Rng rng(9);
  const int n = 90;
  Matrix x(n, 3);
  std::vector<int> y;
  for (int i = 0; i < n; ++i) {
    const int c = i % 3;
    for (int j = 0; j < 3; ++j)
      x(i, j) = 1.5 * c * (j == c ? 1.0 : 0.2) + 0.6 * rng.next_normal();
    y.push_back(c);
  }
  for (auto scaling : {svm::Scaling::Normalize, svm::Scaling::Standardize,
                       svm::Scaling::None}) {
    svm::Params p;
    p.scaling = scaling;
    const auto model = svm::fit(p, x, y);
    CHECK(model.machines.size() == 3);
    for (const auto& machine : model.machines) {
      CHECK(svm::equality_gap(machine) <= 1e-9);
      CHECK(svm::max_kkt_violation(model, machine) <= p.tolerance + 1e-9);
      for (double a : machine.alpha) {
        CHECK(a >= 0.0);
        CHECK(a <= p.c + 1e-12);
      }
    }
  }
}

TEST_CASE("puk and poly kernels train on overlapping data") {
  Rng rng(40);
  const int n = 60;
  Matrix x(n, 2);
  std::vector<int> y;
  for (int i = 0; i < n; ++i) {
    const int c = i % 2;
    x(i, 0) = c + 0.8 * rng.next_normal();
    x(i, 1) = 0.8 * rng.next_normal();
    y.push_back(c);
  }
  for (auto type : {svm::KernelType::Puk, svm::KernelType::Poly,
                    svm::KernelType::NormalizedPoly}) {
    svm::Params p;
    p.kernel.type = type;
    p.kernel.exponent = 2;
    const auto model = svm::fit(p, x, y);
    for (const auto& machine : model.machines)
      CHECK(svm::equality_gap(machine) <= 1e-9);
    int correct = 0;
    for (int i = 0; i < n; ++i)
      if (svm::predict(model, x.row(i).transpose()) ==
          y[static_cast<std::size_t>(i)])
        ++correct;
    CHECK(correct > n / 2);
  }
}

TEST_CASE("single-class training set predicts that class") {
  Matrix x(5, 2);
  x << 0, 0, 1, 0, 0, 1, 1, 1, 2, 2;
  const std::vector<int> y{3, 3, 3, 3, 3};
  const auto model = svm::fit({}, x, y);
  CHECK(model.machines.empty());
  CHECK(svm::predict(model, vec2(9, 9)) == 3);
}

TEST_CASE("parameter validation") {
  Matrix x(4, 1);
  x << 0, 1, 2, 3;
  const std::vector<int> y{0, 0, 1, 1};
  svm::Params p;
  p.c = 0.0;
  CHECK_THROWS_AS(svm::fit(p, x, y), ValidationError);
  p = {};
  p.kernel.exponent = 0;
  CHECK_THROWS_AS(svm::fit(p, x, y), ValidationError);
}
