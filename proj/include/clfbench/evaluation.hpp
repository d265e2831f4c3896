#pragma once

#include <functional>
#include <string>
#include <vector>

#include "clfbench/classifiers/dispatch.hpp"
#include "clfbench/datagen.hpp"
#include "clfbench/params.hpp"

namespace clfbench {

/// Runs fn(0..n-1) on up to `jobs` worker threads. Results must be written
/// to per-index slots; the caller aggregates in index order afterwards, so
/// the thread schedule can never change any emitted number.
void parallel_for(std::size_t n, int jobs,
                  const std::function<void(std::size_t)>& fn);

struct CvSpec {
  int folds = 10;
  std::uint64_t seed = 1;
};

/// k disjoint index sets covering 0..labels.size()-1, per-class counts
/// differing by at most one across folds. Throws ValidationError when a
/// class has fewer than k instances.
std::vector<std::vector<int>> stratified_folds(const std::vector<int>& labels,
                                               int k, std::uint64_t seed);

/// 100 * correct / total.
double accuracy(const std::vector<int>& predicted,
                const std::vector<int>& truth);

/// Pooled k-fold accuracy: hold out each fold in turn, collect every
/// prediction, apply `accuracy` once over the whole dataset.
double cross_val_accuracy(const ClassifierConfig& config, const Dataset& d,
                          const CvSpec& cv);

struct EvalStats {
  double mean = 0.0;
  double deviation = 0.0;  // population standard deviation
  double best = 0.0;
  double worst = 0.0;
};

EvalStats stats_over(const std::vector<double>& values);

struct BenchResult {
  std::string id;
  EvalStats stats;
  std::vector<double> per_dataset;
};

/// Cross-validates every config on every dataset of the family; results are
/// sorted by mean accuracy, descending (ties by id).
std::vector<BenchResult> default_benchmark(
    const std::vector<Dataset>& family,
    const std::vector<ClassifierConfig>& configs, const CvSpec& cv,
    int jobs = 1);

struct SweepReport {
  std::string id;
  std::string param;
  std::string display;  // row label, e.g. "SVM (rbf kernel) G"
  double mean_s = 0.0;
  double std_s = 0.0;
  double max_s = 0.0;
  std::vector<double> per_dataset_s;
  std::vector<double> gamma_def;
  std::vector<double> gamma_max;
};

/// One-dimensional sensitivity: per dataset, S = (best accuracy over the
/// grid applied on top of `base`) - (accuracy of the all-default config).
/// The grid excludes the default, so S may be negative.
SweepReport sweep_parameter(
    const ClassifierConfig& base, const std::string& param,
    const std::vector<Dataset>& family, const CvSpec& cv, int jobs = 1,
    const std::vector<ParamValue>* grid_override = nullptr,
    const std::vector<double>* gamma_def_cache = nullptr);

struct SearchReport {
  std::string id;
  int n_configs = 0;
  std::uint64_t seed = 0;
  double p_value = 0.0;  // percent of improving (dataset, config) trials
  std::vector<double> per_dataset_p;
  double mean = 0.0;       // over improving trials only
  double deviation = 0.0;
  double maximum = 0.0;
  std::vector<double> default_accuracy;        // per dataset
  std::vector<double> best_accuracy;           // per dataset
  std::vector<ClassifierConfig> best_config;   // per dataset
  std::vector<double> deltas;  // trial-major: dataset * n_configs + config
};

using TrialEvaluator =
    std::function<double(int dataset_index, const ClassifierConfig&)>;

/// Core of the multidimensional protocol with an injectable evaluator.
/// Config j is sampled from stream derive(seed, j), identically for every
/// dataset.
SearchReport random_search_with(const ClassifierSchema& schema,
                                int n_datasets, int n_configs,
                                std::uint64_t seed,
                                const TrialEvaluator& evaluator,
                                const std::vector<double>& default_accuracy,
                                int jobs = 1);

SearchReport random_search(const std::string& id,
                           const std::vector<Dataset>& family, int n_configs,
                           std::uint64_t seed, const CvSpec& cv, int jobs = 1);

struct RankedEntry {
  std::string id;
  double mean = 0.0;
  double deviation = 0.0;
};

/// Mean and deviation over datasets of each classifier's per-dataset best
/// random accuracy, sorted descending by mean. All reports must cover the
/// same family.
std::vector<RankedEntry> best_of_random_ranking(
    const std::vector<SearchReport>& reports, std::size_t family_size);

struct CurveSeries {
  std::string id;
  std::vector<std::pair<int, double>> points;  // (F, mean accuracy)
};

/// Mean default accuracy per classifier per family, sorted by F.
std::vector<CurveSeries> feature_curve(
    const std::vector<std::vector<Dataset>>& families,
    const std::vector<ClassifierConfig>& configs, const CvSpec& cv,
    int jobs = 1);

}  // namespace clfbench
