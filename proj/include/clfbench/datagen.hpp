#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clfbench/linalg.hpp"
#include "clfbench/rng.hpp"

namespace clfbench {

/// A fixed scalar distribution: either uniform on [a, b) or Gaussian with
/// mean a and standard deviation b.
struct DistributionSpec {
  enum class Kind { Uniform, Gaussian };

  Kind kind = Kind::Uniform;
  double a = 0.0;
  double b = 1.0;

  double mean() const;
  double variance() const;
  double sample(Rng& rng) const;

  void validate(const std::string& what) const;

  /// Parses "uniform:lo,hi" or "gaussian:mean,std".
  static DistributionSpec parse(const std::string& text);
  std::string to_string() const;

  bool operator==(const DistributionSpec&) const = default;
};

/// Full recipe for one dataset family (the paper-style DB{F}F directory).
struct GeneratorSpec {
  int n_classes = 10;
  int n_features = 2;
  int per_class = 40;
  double alpha = 1.0;
  // Feature std deviations sized so that alpha = 1 puts ten classes with
  // means in [-1,1]^F at partial overlap and alpha = 7 makes them nearly
  // disjoint.
  DistributionSpec f_sigma{DistributionSpec::Kind::Uniform, 0.1, 0.3};
  DistributionSpec f_c{DistributionSpec::Kind::Uniform, -1.0, 1.0};
  int n_datasets = 50;
  std::uint64_t seed = 1;

  void validate() const;

  bool operator==(const GeneratorSpec&) const = default;
};

/// Shape and entry moments of the random root matrix G: F x m with i.i.d.
/// Gaussian entries of mean mu_g and variance sigma_g2.
struct RootSpec {
  int m = 0;
  double mu_g = 0.0;
  double sigma_g2 = 0.0;

  bool operator==(const RootSpec&) const = default;
};

/// One class of one dataset: mean vector, rescaled root matrix (so that
/// gram(root) has the requested diagonal exactly), and bookkeeping.
struct ClassModel {
  Vector mean;
  Matrix root;         // F x m
  Vector target_stds;  // sigma_i / alpha, per feature
  RootSpec root_spec;
  std::vector<double> realized_correlations;  // upper off-diagonal, row-major
};

struct CorrelationMoments {
  double mean = 0.0;
  double variance = 0.0;
  long long count = 0;

  bool operator==(const CorrelationMoments&) const = default;
};

/// The part of a ClassModel that is persisted in the metadata sidecar.
struct ClassSummary {
  Vector mean;
  Vector target_stds;
  RootSpec root_spec;

  bool operator==(const ClassSummary& o) const {
    return root_spec == o.root_spec && mean == o.mean &&
           target_stds == o.target_stds;
  }
};

struct DatasetMeta {
  GeneratorSpec spec;
  int dataset_index = 0;
  std::vector<ClassSummary> class_models;
  CorrelationMoments realized_correlation_moments;

  bool operator==(const DatasetMeta&) const = default;
};

struct Dataset {
  Matrix instances;         // (per_class * n_classes) x n_features
  std::vector<int> labels;  // class index per row
  DatasetMeta meta;

  int n_features() const { return static_cast<int>(instances.cols()); }
  int n_rows() const { return static_cast<int>(instances.rows()); }

  bool operator==(const Dataset& o) const {
    return labels == o.labels && instances == o.instances && meta == o.meta;
  }
};

/// Solves for the root-matrix shape whose Gram product matches the requested
/// second moments: diagonal mean mu_d, off-diagonal mean mu_o and variance
/// s_o2. The column count is then floored at n_features so the generated
/// covariances have full rank, and the entry moments are recomputed for the
/// floored m. Throws NumericError when the targets are infeasible.
RootSpec moment_match(double mu_d, double mu_o, double s_o2, int n_features);

/// Draws one class: mean uniform on [-1,1]^F, per-feature standard
/// deviations sampled from f_sigma and divided by alpha, and a root matrix
/// whose normalized Gram product matches f_c's first two moments in
/// expectation. Rows are rescaled afterwards so the covariance diagonal is
/// exact.
ClassModel draw_class_model(int n_features, double alpha,
                            const DistributionSpec& f_sigma,
                            const DistributionSpec& f_c, Rng& rng);

/// n i.i.d. draws of x = mean + root * z with z ~ N(0, I_m); one row per
/// instance.
Matrix sample_instances(const ClassModel& model, int n, Rng& rng);

/// Dataset k of the family described by spec; depends only on (spec, k).
Dataset gen_dataset(const GeneratorSpec& spec, int index);

std::vector<Dataset> gen_family(const GeneratorSpec& spec);

/// Conventional directory name for a family: "DB{F}F".
std::string family_dir_name(int n_features);

}  // namespace clfbench
