#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "clfbench/classifiers/knn.hpp"
#include "clfbench/common.hpp"
#include "clfbench/datagen.hpp"
#include "clfbench/dataset_io.hpp"

using namespace clfbench;
namespace fs = std::filesystem;

namespace {

GeneratorSpec small_spec() {
  GeneratorSpec spec;
  spec.n_classes = 10;
  spec.n_features = 2;
  spec.per_class = 40;
  spec.alpha = 1.0;
  spec.n_datasets = 4;
  spec.seed = 7;
  return spec;
}

fs::path temp_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("clfbench_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("moment_match solves the stated cases") {
  // uniform(-1,1) correlations: mean 0, variance 1/3
  const RootSpec a = moment_match(1.0, 0.0, 1.0 / 3.0, 2);
  CHECK(a.m == 3);
  CHECK(a.mu_g == 0.0);
  CHECK(a.sigma_g2 == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  const RootSpec b = moment_match(1.0, 0.0, 1.0 / 12.0, 2);
  CHECK(b.m == 12);
  CHECK(b.mu_g == 0.0);
  CHECK(b.sigma_g2 == doctest::Approx(1.0 / 12.0).epsilon(1e-12));

  // full-rank floor: m raised to F and moments recomputed
  const RootSpec c = moment_match(1.0, 0.0, 1.0 / 3.0, 10);
  CHECK(c.m == 10);
  CHECK(c.sigma_g2 == doctest::Approx(0.1).epsilon(1e-12));

  CHECK_THROWS_AS(moment_match(1.0, -0.1, 0.3, 2), ValidationError);
  CHECK_THROWS_AS(moment_match(0.0, 0.0, 0.3, 2), ValidationError);
}

TEST_CASE("moment_match Monte-Carlo oracle: realized gram moments") {
  // 1e4 root matrices from the spec solved for uniform(-1,1) targets; the
  // pooled off-diagonal mean and variance must match the requested moments.
  const RootSpec spec = moment_match(1.0, 0.0, 1.0 / 3.0, 2);
  Rng rng(123);
  double sum = 0.0, sum2 = 0.0;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    Matrix g(2, spec.m);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < spec.m; ++j)
        g(i, j) = spec.mu_g + std::sqrt(spec.sigma_g2) * rng.next_normal();
    const double off = gram(g)(0, 1);
    sum += off;
    sum2 += off * off;
  }
  const double mean = sum / trials;
  const double var = sum2 / trials - mean * mean;
  CHECK(std::fabs(mean) < 0.02);
  CHECK(std::fabs(var - 1.0 / 3.0) < 0.1 / 3.0);
}

TEST_CASE("draw_class_model satisfies the construction invariants") {
  const DistributionSpec f_sigma{DistributionSpec::Kind::Uniform, 0.5, 1.5};
  const DistributionSpec f_c{DistributionSpec::Kind::Uniform, -1.0, 1.0};
  Rng rng(3);
  for (int f : {2, 5, 10}) {
    for (int t = 0; t < 30; ++t) {
      Rng stream = rng.derive(static_cast<std::uint64_t>(f * 1000 + t));
      const ClassModel model =
          draw_class_model(f, 2.0, f_sigma, f_c, stream);
      for (int i = 0; i < f; ++i) {
        CHECK(model.mean(i) >= -1.0);
        CHECK(model.mean(i) <= 1.0);
      }
      const Matrix cov = gram(model.root);
      for (int i = 0; i < f; ++i) {
        const double target = model.target_stds(i) * model.target_stds(i);
        CHECK(std::fabs(cov(i, i) - target) <= 1e-10 * target);
      }
      CHECK(sym_eigenvalues(cov)(0) >= -1e-9);
    }
  }
}

TEST_CASE("realized correlation moments match f_c over 2000 draws") {
  const DistributionSpec f_sigma{DistributionSpec::Kind::Uniform, 0.5, 1.5};
  const DistributionSpec f_c{DistributionSpec::Kind::Uniform, -1.0, 1.0};
  Rng rng(19);
  double sum = 0.0, sum2 = 0.0;
  long long count = 0;
  for (int t = 0; t < 2000; ++t) {
    Rng stream = rng.derive(static_cast<std::uint64_t>(t));
    const ClassModel model = draw_class_model(2, 1.0, f_sigma, f_c, stream);
    for (double r : model.realized_correlations) {
      sum += r;
      sum2 += r * r;
      ++count;
    }
  }
  const double mean = sum / static_cast<double>(count);
  const double var = sum2 / static_cast<double>(count) - mean * mean;
  CHECK(std::fabs(mean) <= 0.03);
  CHECK(std::fabs(var - 1.0 / 3.0) <= 0.25 / 3.0);
}

TEST_CASE("alpha scaling law is exact") {
  const DistributionSpec f_sigma{DistributionSpec::Kind::Uniform, 0.5, 1.5};
  const DistributionSpec f_c{DistributionSpec::Kind::Uniform, -1.0, 1.0};
  Rng a(77), b(77);
  const ClassModel m1 = draw_class_model(4, 1.0, f_sigma, f_c, a);
  const ClassModel m2 = draw_class_model(4, 2.0, f_sigma, f_c, b);
  CHECK(m1.mean == m2.mean);
  const Matrix c1 = gram(m1.root);
  const Matrix c2 = gram(m2.root);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(c2(i, j) == c1(i, j) / 4.0);
}

TEST_CASE("sample_instances converges to the model moments") {
  const DistributionSpec f_sigma{DistributionSpec::Kind::Uniform, 0.5, 1.5};
  const DistributionSpec f_c{DistributionSpec::Kind::Uniform, -1.0, 1.0};
  Rng rng(41);
  const ClassModel model = draw_class_model(3, 1.0, f_sigma, f_c, rng);

  Rng sample_rng(42);
  CHECK(sample_instances(model, 0, sample_rng).rows() == 0);

  const int n = 200000;
  const Matrix x = sample_instances(model, n, sample_rng);
  const Vector mean = x.colwise().mean().transpose();
  for (int i = 0; i < 3; ++i)
    CHECK(std::fabs(mean(i) - model.mean(i)) < 0.01);

  Matrix centered = x.rowwise() - mean.transpose();
  const Matrix sample_cov = centered.transpose() * centered / double(n);
  const Matrix cov = gram(model.root);
  CHECK((sample_cov - cov).norm() / cov.norm() < 0.02);
}

TEST_CASE("gen_family shape, balance and determinism") {
  const GeneratorSpec spec = small_spec();
  const auto family = gen_family(spec);
  REQUIRE(family.size() == 4);
  for (const auto& d : family) {
    CHECK(d.n_rows() == 400);
    CHECK(d.n_features() == 2);
    std::vector<int> counts(10, 0);
    for (int label : d.labels) ++counts[static_cast<std::size_t>(label)];
    for (int c : counts) CHECK(c == 40);
    CHECK(d.instances.allFinite());
  }

  const auto family2 = gen_family(spec);
  for (std::size_t k = 0; k < family.size(); ++k)
    CHECK(family[k] == family2[k]);
}

TEST_CASE("gen_family at alpha 7 is nearly separable (1-NN leave-one-out)") {
  GeneratorSpec spec = small_spec();
  spec.alpha = 7.0;
  spec.n_datasets = 3;
  const auto family = gen_family(spec);
  double total = 0.0;
  for (const auto& d : family) {
    knn::Params params;
    params.k = 1;
    int correct = 0;
    const int n = d.n_rows();
    for (int i = 0; i < n; ++i) {
      Matrix rest(n - 1, d.n_features());
      std::vector<int> rest_y;
      Eigen::Index w = 0;
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        rest.row(w++) = d.instances.row(r);
        rest_y.push_back(d.labels[static_cast<std::size_t>(r)]);
      }
      const auto model = knn::fit(params, rest, rest_y);
      if (knn::predict(model, d.instances.row(i).transpose()) ==
          d.labels[static_cast<std::size_t>(i)])
        ++correct;
    }
    total += 100.0 * correct / n;
  }
  CHECK(total / 3.0 >= 95.0);
}

TEST_CASE("degenerate generator specs are rejected") {
  GeneratorSpec spec = small_spec();
  spec.alpha = 0.0;
  CHECK_THROWS_AS(spec.validate(), ValidationError);
  spec = small_spec();
  spec.per_class = spec.n_features;  // needs F + 1
  CHECK_THROWS_AS(spec.validate(), ValidationError);
  spec = small_spec();
  spec.f_c = {DistributionSpec::Kind::Uniform, -1.5, 1.0};
  CHECK_THROWS_AS(spec.validate(), ValidationError);
}

TEST_CASE("dataset save/load round trip is bit exact") {
  GeneratorSpec spec = small_spec();
  spec.n_datasets = 1;
  const Dataset d = gen_dataset(spec, 0);
  const auto dir = temp_dir("roundtrip");
  const auto csv = dir / "ds_000.csv";
  save_dataset(d, csv);

  const Dataset loaded = load_dataset(csv);
  CHECK(loaded == d);
  CHECK(loaded.instances == d.instances);  // bit-identical features
  CHECK(loaded.meta.spec.seed == spec.seed);
  CHECK(loaded.meta.spec.alpha == spec.alpha);

  // header + F+1 columns per row
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "f1,f2,label");
  std::string row;
  std::getline(in, row);
  CHECK(std::count(row.begin(), row.end(), ',') == 2);
  fs::remove_all(dir);
}

TEST_CASE("malformed dataset files name the first bad line") {
  const auto dir = temp_dir("badfile");
  const auto csv = dir / "ds_000.csv";
  {
    std::ofstream out(csv);
    out << "f1,f2,label\n0.5,0.25,3\nnot-a-number,1.0,2\n";
  }
  try {
    load_dataset(csv);
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find(":3") != std::string::npos);
  }
  CHECK_THROWS_AS(load_dataset(dir / "missing.csv"), IoError);
  fs::remove_all(dir);
}

TEST_CASE("family save/load preserves order and content") {
  GeneratorSpec spec = small_spec();
  spec.n_datasets = 3;
  const auto family = gen_family(spec);
  const auto dir = temp_dir("family");
  save_family(family, dir);
  const auto loaded = load_family(dir);
  REQUIRE(loaded.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(loaded[k] == family[k]);
    CHECK(loaded[k].meta.dataset_index == static_cast<int>(k));
  }
  CHECK_THROWS_AS(load_family(dir / "nope"), IoError);
  fs::remove_all(dir);
}

TEST_CASE("generator validity sweep across F (acceptance-style)") {
  // 9 x 30 class models: PSD and exact diagonals everywhere
  const DistributionSpec f_sigma{DistributionSpec::Kind::Uniform, 0.5, 1.5};
  const DistributionSpec f_c{DistributionSpec::Kind::Uniform, -1.0, 1.0};
  Rng rng(55);
  for (int f = 2; f <= 10; ++f) {
    for (int t = 0; t < 30; ++t) {
      Rng stream = rng.derive(static_cast<std::uint64_t>(f * 100 + t));
      const ClassModel model = draw_class_model(f, 1.0, f_sigma, f_c, stream);
      const Matrix cov = gram(model.root);
      CHECK(sym_eigenvalues(cov)(0) >= -1e-9);
      for (int i = 0; i < f; ++i) {
        const double target = model.target_stds(i) * model.target_stds(i);
        CHECK(std::fabs(cov(i, i) - target) <= 1e-10 * target);
      }
    }
  }
}
