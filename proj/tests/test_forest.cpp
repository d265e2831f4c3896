#include <doctest.h>

#include <numeric>

#include "clfbench/classifiers/forest.hpp"
#include "clfbench/classifiers/knn.hpp"
#include "clfbench/common.hpp"
#include "clfbench/datagen.hpp"

using namespace clfbench;

namespace {

std::vector<Dataset> alpha7_family(int count) {
  GeneratorSpec spec;
  spec.n_classes = 10;
  spec.n_features = 2;
  spec.per_class = 40;
  spec.alpha = 7.0;
  spec.n_datasets = count;
  spec.seed = 99;
  return gen_family(spec);
}

}  // namespace

TEST_CASE("same seed gives identical predictions, different seeds may not") {
  Rng rng(1);
  Matrix x(80, 3);
  std::vector<int> y;
  for (int i = 0; i < 80; ++i) {
    for (int j = 0; j < 3; ++j) x(i, j) = rng.next_normal() + (i % 4);
    y.push_back(i % 4);
  }
  forest::Params p;
  p.trees = 15;
  const auto m1 = forest::fit(p, x, y);
  const auto m2 = forest::fit(p, x, y);
  Matrix probes(40, 3);
  for (int i = 0; i < 40; ++i)
    for (int j = 0; j < 3; ++j) probes(i, j) = 4.0 * rng.next_unit();
  for (int i = 0; i < 40; ++i)
    CHECK(forest::predict(m1, probes.row(i).transpose()) ==
          forest::predict(m2, probes.row(i).transpose()));
}

TEST_CASE("votes always sum to the number of trees") {
  Rng rng(2);
  Matrix x(60, 2);
  std::vector<int> y;
  for (int i = 0; i < 60; ++i) {
    x(i, 0) = rng.next_normal();
    x(i, 1) = rng.next_normal();
    y.push_back(i % 3);
  }
  forest::Params p;
  p.trees = 23;
  const auto model = forest::fit(p, x, y);
  for (int t = 0; t < 30; ++t) {
    Vector probe(2);
    probe << rng.next_normal(), rng.next_normal();
    const auto votes = forest::vote_counts(model, probe);
    CHECK(std::accumulate(votes.begin(), votes.end(), 0) == 23);
  }
}

TEST_CASE("near-separable alpha=7 data classifies above 95%") {
  double correct_total = 0.0, agree_total = 0.0, n_total = 0.0;
  for (const Dataset& d : alpha7_family(3)) {
    // split even/odd rows into train and test halves (stratified by layout)
    std::vector<int> train_rows, test_rows;
    for (int r = 0; r < d.n_rows(); ++r)
      (r % 2 == 0 ? train_rows : test_rows).push_back(r);
    Matrix train_x(train_rows.size(), 2), test_x(test_rows.size(), 2);
    std::vector<int> train_y, test_y;
    for (std::size_t i = 0; i < train_rows.size(); ++i) {
      train_x.row(static_cast<Eigen::Index>(i)) =
          d.instances.row(train_rows[i]);
      train_y.push_back(d.labels[static_cast<std::size_t>(train_rows[i])]);
    }
    for (std::size_t i = 0; i < test_rows.size(); ++i) {
      test_x.row(static_cast<Eigen::Index>(i)) = d.instances.row(test_rows[i]);
      test_y.push_back(d.labels[static_cast<std::size_t>(test_rows[i])]);
    }
    forest::Params p;
    p.trees = 100;
    const auto model = forest::fit(p, train_x, train_y);
    knn::Params kp;
    kp.k = 1;
    const auto reference = knn::fit(kp, train_x, train_y);
    for (std::size_t i = 0; i < test_rows.size(); ++i) {
      const Vector probe =
          test_x.row(static_cast<Eigen::Index>(i)).transpose();
      const int predicted = forest::predict(model, probe);
      if (predicted == test_y[i]) correct_total += 1.0;
      if (predicted == knn::predict(reference, probe)) agree_total += 1.0;
      n_total += 1.0;
    }
  }
  CHECK(100.0 * correct_total / n_total >= 95.0);
  CHECK(100.0 * agree_total / n_total >= 95.0);  // 1-NN near-separable oracle
}

TEST_CASE("depth limit and K are honored") {
  Rng rng(5);
  Matrix x(100, 4);
  std::vector<int> y;
  for (int i = 0; i < 100; ++i) {
    for (int j = 0; j < 4; ++j) x(i, j) = rng.next_normal() + (i % 2) * j;
    y.push_back(i % 2);
  }
  forest::Params p;
  p.trees = 5;
  p.depth = 2;
  const auto model = forest::fit(p, x, y);
  for (const auto& t : model.trees) CHECK(t.depth() <= 2);

  p.k = 100;  // clamped to F
  CHECK_NOTHROW(forest::fit(p, x, y));
  p.trees = 0;
  CHECK_THROWS_AS(forest::fit(p, x, y), ValidationError);
}
