#include <doctest.h>

#include <cmath>

#include "clfbench/classifiers/tree.hpp"
#include "clfbench/common.hpp"
#include "clfbench/rng.hpp"

using namespace clfbench;

namespace {

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

Vector vec1(double a) {
  Vector v(1);
  v << a;
  return v;
}

// exhaustive split enumeration on the XOR set: no single axis-aligned cut
// separates it, two levels do
constexpr double kXor[4][2] = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};

}  // namespace

TEST_CASE("single-class training set yields a single leaf") {
  Matrix x(4, 2);
  x << 0, 0, 1, 1, 2, 2, 3, 3;
  const std::vector<int> y{2, 2, 2, 2};
  const auto c45 = tree::c45_fit({}, x, y);
  CHECK(c45.n_leaves() == 1);
  CHECK(c45.predict(vec2(5, 5)) == 2);
  const auto cart = tree::cart_fit({}, x, y);
  CHECK(cart.n_leaves() == 1);
  CHECK(cart.predict(vec2(-1, 9)) == 2);
}

TEST_CASE("XOR needs exactly depth 2 when unpruned with M=1") {
  Matrix x(4, 2);
  std::vector<int> y;
  for (int i = 0; i < 4; ++i) {
    x(i, 0) = kXor[i][0];
    x(i, 1) = kXor[i][1];
    y.push_back(i < 2 ? 0 : 1);
  }
  tree::C45Params p;
  p.unpruned = true;
  p.min_instances = 1;
  const auto t = tree::c45_fit(p, x, y);
  CHECK(t.depth() == 2);
  for (int i = 0; i < 4; ++i)
    CHECK(t.predict(x.row(i).transpose()) == y[static_cast<std::size_t>(i)]);

  tree::CartParams cp;
  cp.unpruned = true;
  cp.min_instances = 1;
  const auto ct = tree::cart_fit(cp, x, y);
  CHECK(ct.depth() == 2);
  for (int i = 0; i < 4; ++i)
    CHECK(ct.predict(x.row(i).transpose()) == y[static_cast<std::size_t>(i)]);
}

TEST_CASE("first split lands between 2 and 3 for the 1-D step data") {
  // hand check: candidates are 1.5, 2.5, 3.5; both entropy and Gini pick
  // the clean cut at 2.5
  Matrix x(4, 1);
  x << 1, 2, 3, 4;
  const std::vector<int> y{0, 0, 1, 1};
  tree::C45Params p;
  p.unpruned = true;
  p.min_instances = 1;
  const auto t = tree::c45_fit(p, x, y);
  REQUIRE_FALSE(t.nodes[0].is_leaf());
  CHECK(t.nodes[0].threshold > 2.0);
  CHECK(t.nodes[0].threshold < 3.0);

  tree::CartParams cp;
  cp.unpruned = true;
  cp.min_instances = 1;
  const auto ct = tree::cart_fit(cp, x, y);
  REQUIRE_FALSE(ct.nodes[0].is_leaf());
  CHECK(ct.nodes[0].threshold > 2.0);
  CHECK(ct.nodes[0].threshold < 3.0);
}

TEST_CASE("min-instances bound stops splitting") {
  Matrix x(6, 1);
  x << 1, 2, 3, 4, 5, 6;
  const std::vector<int> y{0, 1, 0, 1, 0, 1};
  tree::C45Params p;
  p.unpruned = true;
  p.min_instances = 4;  // no split can give both children >= 4
  const auto t = tree::c45_fit(p, x, y);
  CHECK(t.n_leaves() == 1);
}

TEST_CASE("confidence pruning collapses noise but keeps signal") {
  Rng rng(8);
  const int n = 200;
  Matrix x(n, 2);
  std::vector<int> y;
  for (int i = 0; i < n; ++i) {
    const int c = i % 2;
    x(i, 0) = c * 2.0 + 0.4 * rng.next_normal();
    x(i, 1) = rng.next_normal();  // pure noise feature
    y.push_back(c);
  }
  tree::C45Params pruned;
  tree::C45Params unpruned;
  unpruned.unpruned = true;
  const auto tp = tree::c45_fit(pruned, x, y);
  const auto tu = tree::c45_fit(unpruned, x, y);
  CHECK(tp.n_leaves() <= tu.n_leaves());
  int correct = 0;
  for (int i = 0; i < n; ++i)
    if (tp.predict(x.row(i).transpose()) == y[static_cast<std::size_t>(i)])
      ++correct;
  CHECK(correct >= 180);
}

TEST_CASE("pessimistic error bound behaves like an upper confidence bound") {
  // zero observed errors still predict some; more confidence = less added
  CHECK(tree::pessimistic_errors(0.0, 10.0, 0.25) > 0.0);
  CHECK(tree::pessimistic_errors(2.0, 10.0, 0.25) >
        tree::pessimistic_errors(2.0, 10.0, 0.45));
  CHECK(tree::pessimistic_errors(2.0, 10.0, 0.25) > 2.0);
}

TEST_CASE("reduced-error pruning produces a tree no larger than unpruned") {
  Rng rng(15);
  const int n = 120;
  Matrix x(n, 2);
  std::vector<int> y;
  for (int i = 0; i < n; ++i) {
    const int c = i % 3;
    x(i, 0) = c + 0.5 * rng.next_normal();
    x(i, 1) = rng.next_normal();
    y.push_back(c);
  }
  tree::C45Params rep;
  rep.rep_folds = 3;
  tree::C45Params unpruned;
  unpruned.unpruned = true;
  const auto tr = tree::c45_fit(rep, x, y);
  const auto tu = tree::c45_fit(unpruned, x, y);
  CHECK(tr.n_leaves() <= tu.n_leaves());
  // deterministic
  const auto tr2 = tree::c45_fit(rep, x, y);
  CHECK(tr.n_leaves() == tr2.n_leaves());
}

TEST_CASE("cart cost-complexity pruning shrinks noisy trees") {
  Rng rng(23);
  const int n = 240;
  Matrix x(n, 3);
  std::vector<int> y;
  for (int i = 0; i < n; ++i) {
    const int c = i % 2;
    x(i, 0) = c * 2.0 + 0.5 * rng.next_normal();
    x(i, 1) = rng.next_normal();
    x(i, 2) = rng.next_normal();
    y.push_back(c);
  }
  tree::CartParams pruned;
  tree::CartParams unpruned;
  unpruned.unpruned = true;
  const auto tp = tree::cart_fit(pruned, x, y);
  const auto tu = tree::cart_fit(unpruned, x, y);
  CHECK(tp.n_leaves() <= tu.n_leaves());
  CHECK(tp.n_leaves() >= 2);

  tree::CartParams one_se = pruned;
  one_se.one_se = true;
  const auto ts = tree::cart_fit(one_se, x, y);
  CHECK(ts.n_leaves() <= tp.n_leaves());
}

TEST_CASE("laplace smoothing changes probabilities, never the argmax") {
  Matrix x(6, 1);
  x << 1, 2, 3, 4, 5, 6;
  const std::vector<int> y{0, 0, 0, 1, 1, 0};
  tree::C45Params plain;
  plain.unpruned = true;
  plain.min_instances = 1;
  tree::C45Params laplace = plain;
  laplace.laplace = true;
  const auto t0 = tree::c45_fit(plain, x, y);
  const auto t1 = tree::c45_fit(laplace, x, y);
  for (double probe : {0.5, 2.5, 4.5, 5.5, 9.0}) {
    CHECK(t0.predict(vec1(probe)) == t1.predict(vec1(probe)));
    const auto d0 = t0.distribution(vec1(probe));
    const auto d1 = t1.distribution(vec1(probe));
    const double s1 = d1[0] + d1[1];
    CHECK(s1 == doctest::Approx(1.0));
    CHECK(d1[0] > 0.0);  // smoothed away from 0/1
    CHECK(d1[0] < 1.0);
    (void)d0;
  }
}

TEST_CASE("parameter validation") {
  Matrix x(4, 1);
  x << 1, 2, 3, 4;
  const std::vector<int> y{0, 0, 1, 1};
  tree::C45Params p;
  p.min_instances = 0;
  CHECK_THROWS_AS(tree::c45_fit(p, x, y), ValidationError);
  p = {};
  p.confidence = 0.0;
  CHECK_THROWS_AS(tree::c45_fit(p, x, y), ValidationError);
  tree::CartParams cp;
  cp.folds = 1;
  CHECK_THROWS_AS(tree::cart_fit(cp, x, y), ValidationError);
}
