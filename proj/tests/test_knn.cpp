#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "clfbench/classifiers/knn.hpp"
#include "clfbench/common.hpp"
#include "clfbench/rng.hpp"

using namespace clfbench;

namespace {

Matrix rows(std::initializer_list<std::initializer_list<double>> data) {
  Matrix m(static_cast<Eigen::Index>(data.size()),
           static_cast<Eigen::Index>(data.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : data) {
    Eigen::Index c = 0;
    for (double v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

// exhaustive-scan oracle with the same tie rules: unweighted majority among
// the K nearest by (distance, index); class ties by nearest member then id
int knn_oracle(const Matrix& x, const std::vector<int>& y, const Vector& probe,
               int k) {
  std::vector<std::pair<double, int>> d;
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    d.push_back({(x.row(i).transpose() - probe).norm(), static_cast<int>(i)});
  std::sort(d.begin(), d.end());
  std::map<int, int> votes;
  std::map<int, double> nearest;
  for (int i = 0; i < k && i < static_cast<int>(d.size()); ++i) {
    const auto& [dist, index] = d[static_cast<std::size_t>(i)];
    const int label = y[static_cast<std::size_t>(index)];
    ++votes[label];
    if (!nearest.count(label) || dist < nearest[label]) nearest[label] = dist;
  }
  int best_label = -1;
  for (const auto& [label, count] : votes) {
    if (best_label < 0) {
      best_label = label;
      continue;
    }
    if (count > votes[best_label] ||
        (count == votes[best_label] && nearest[label] < nearest[best_label]))
      best_label = label;  // map order already gives lowest id on full ties
  }
  return best_label;
}

}  // namespace

TEST_CASE("single nearest neighbor") {
  const Matrix x = rows({{0, 0}, {1, 1}});
  const std::vector<int> y{0, 1};
  knn::Params p;
  p.k = 1;
  const auto model = knn::fit(p, x, y);
  CHECK(knn::predict(model, vec2(0.1, 0.0)) == 0);
  CHECK_THROWS_AS(knn::predict(model, Vector::Zero(3)), ValidationError);
}

TEST_CASE("majority beats proximity at K=3") {
  const Matrix x = rows({{0, 0}, {1, 0}, {1.1, 0}});
  const std::vector<int> y{0, 1, 1};
  knn::Params p;
  p.k = 3;
  const auto model = knn::fit(p, x, y);
  // hand count: class 1 has two of the three neighbors
  CHECK(knn::predict(model, vec2(0.5, 0.0)) == 1);
}

TEST_CASE("inverse-distance weighting flips the majority near a point") {
  const Matrix x = rows({{0, 0}, {1, 0}, {1.1, 0}});
  const std::vector<int> y{0, 1, 1};
  knn::Params p;
  p.k = 3;
  p.inverse_distance = true;
  const auto model = knn::fit(p, x, y);
  // weights: 1/0.05 = 20 for class 0 vs 1/0.95 + 1/1.05 ~ 2.0 for class 1
  CHECK(knn::predict(model, vec2(0.05, 0.0)) == 0);
}

TEST_CASE("weighting is inert for a single neighbor") {
  Rng rng(5);
  Matrix x(30, 2);
  std::vector<int> y;
  for (int i = 0; i < 30; ++i) {
    x(i, 0) = rng.next_normal();
    x(i, 1) = rng.next_normal();
    y.push_back(i % 3);
  }
  knn::Params plain, inv, sim;
  plain.k = inv.k = sim.k = 1;
  inv.inverse_distance = true;
  sim.similarity = true;
  const auto m0 = knn::fit(plain, x, y);
  const auto m1 = knn::fit(inv, x, y);
  const auto m2 = knn::fit(sim, x, y);
  for (int t = 0; t < 50; ++t) {
    const Vector probe = vec2(rng.next_normal(), rng.next_normal());
    const int base = knn::predict(m0, probe);
    CHECK(knn::predict(m1, probe) == base);
    CHECK(knn::predict(m2, probe) == base);
  }
}

TEST_CASE("matches the exhaustive-scan oracle on random data") {
  Rng rng(31);
  Matrix x(100, 3);
  std::vector<int> y;
  for (int i = 0; i < 100; ++i) {
    for (int j = 0; j < 3; ++j) x(i, j) = rng.next_normal();
    y.push_back(static_cast<int>(rng.next_int(0, 4)));
  }
  for (int k : {1, 3, 5}) {
    knn::Params p;
    p.k = k;
    const auto model = knn::fit(p, x, y);
    for (int t = 0; t < 200; ++t) {
      Vector probe(3);
      for (int j = 0; j < 3; ++j) probe(j) = rng.next_normal();
      CHECK(knn::predict(model, probe) == knn_oracle(x, y, probe, k));
    }
  }
}

TEST_CASE("cv_select at K=1 is inert; with larger K it picks a valid K'") {
  Rng rng(77);
  Matrix x(60, 2);
  std::vector<int> y;
  for (int i = 0; i < 60; ++i) {
    const int c = i % 2;
    x(i, 0) = c + 0.3 * rng.next_normal();
    x(i, 1) = 0.3 * rng.next_normal();
    y.push_back(c);
  }
  knn::Params p;
  p.k = 1;
  p.cv_select = true;
  CHECK(knn::fit(p, x, y).effective_k == 1);
  p.k = 9;
  const auto model = knn::fit(p, x, y);
  CHECK(model.effective_k >= 1);
  CHECK(model.effective_k <= 9);
}

TEST_CASE("single-class training predicts that class everywhere") {
  const Matrix x = rows({{0, 0}, {1, 1}});
  const std::vector<int> y{4, 4};
  knn::Params p;
  p.k = 5;
  const auto model = knn::fit(p, x, y);
  CHECK(knn::predict(model, vec2(-3.0, 2.0)) == 4);
}
