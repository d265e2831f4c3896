#include "clfbench/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "clfbench/classifiers/common.hpp"

namespace clfbench {

void parallel_for(std::size_t n, int jobs,
                  const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers =
      std::min<std::size_t>(n, jobs >= 1 ? static_cast<std::size_t>(jobs)
                                         : static_cast<std::size_t>(hw));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::vector<std::vector<int>> stratified_folds(const std::vector<int>& labels,
                                               int k, std::uint64_t seed) {
  if (k < 2) throw ValidationError("stratified_folds: k must be >= 2");
  if (labels.empty()) throw ValidationError("stratified_folds: no instances");

  const auto class_ids = collect_class_ids(labels);
  std::vector<std::vector<int>> by_class(class_ids.size());
  for (int r = 0; r < static_cast<int>(labels.size()); ++r)
    by_class[static_cast<std::size_t>(class_index_of(
                 class_ids, labels[static_cast<std::size_t>(r)]))]
        .push_back(r);
  for (std::size_t c = 0; c < by_class.size(); ++c)
    if (static_cast<int>(by_class[c].size()) < k)
      throw ValidationError(
          "stratified_folds: class " + std::to_string(class_ids[c]) +
          " has fewer than " + std::to_string(k) + " instances");

  Rng rng(seed);
  std::vector<std::vector<int>> folds(static_cast<std::size_t>(k));
  int spill = 0;  // rotates per-class remainders across folds
  for (std::size_t c = 0; c < by_class.size(); ++c) {
    auto& rows = by_class[c];
    Rng shuffle_rng = rng.derive(static_cast<std::uint64_t>(c));
    for (int i = static_cast<int>(rows.size()) - 1; i > 0; --i) {
      const auto j = static_cast<int>(shuffle_rng.next_int(0, i));
      std::swap(rows[static_cast<std::size_t>(i)],
                rows[static_cast<std::size_t>(j)]);
    }
    for (std::size_t i = 0; i < rows.size(); ++i)
      folds[static_cast<std::size_t>((static_cast<int>(i) + spill) % k)]
          .push_back(rows[i]);
    spill = (spill + static_cast<int>(rows.size())) % k;
  }
  for (auto& fold : folds) std::sort(fold.begin(), fold.end());
  return folds;
}

double accuracy(const std::vector<int>& predicted,
                const std::vector<int>& truth) {
  if (predicted.empty()) throw ValidationError("accuracy: empty input");
  if (predicted.size() != truth.size())
    throw ValidationError("accuracy: length mismatch");
  std::size_t correct = 0;
  for (std::size_t i = 0; i < truth.size(); ++i)
    if (predicted[i] == truth[i]) ++correct;
  return 100.0 * static_cast<double>(correct) /
         static_cast<double>(truth.size());
}

double cross_val_accuracy(const ClassifierConfig& config, const Dataset& d,
                          const CvSpec& cv) {
  const auto folds = stratified_folds(d.labels, cv.folds, cv.seed);
  std::vector<int> predicted(d.labels.size(), -1);
  const int f = d.n_features();
  for (std::size_t v = 0; v < folds.size(); ++v) {
    std::vector<char> held(d.labels.size(), 0);
    for (int r : folds[v]) held[static_cast<std::size_t>(r)] = 1;
    const auto n_train =
        static_cast<Eigen::Index>(d.labels.size() - folds[v].size());
    Matrix train_x(n_train, f);
    std::vector<int> train_y;
    train_y.reserve(static_cast<std::size_t>(n_train));
    Eigen::Index w = 0;
    for (std::size_t r = 0; r < d.labels.size(); ++r) {
      if (held[r]) continue;
      train_x.row(w++) = d.instances.row(static_cast<Eigen::Index>(r));
      train_y.push_back(d.labels[r]);
    }
    const auto model = fit(config, train_x, train_y);
    for (int r : folds[v])
      predicted[static_cast<std::size_t>(r)] =
          model->predict(d.instances.row(r).transpose());
  }
  return accuracy(predicted, d.labels);
}

EvalStats stats_over(const std::vector<double>& values) {
  if (values.empty()) throw ValidationError("stats_over: empty input");
  EvalStats s;
  double sum = 0.0;
  s.best = values.front();
  s.worst = values.front();
  for (double v : values) {
    sum += v;
    s.best = std::max(s.best, v);
    s.worst = std::min(s.worst, v);
  }
  s.mean = sum / static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.deviation = std::sqrt(ss / static_cast<double>(values.size()));
  return s;
}

std::vector<BenchResult> default_benchmark(
    const std::vector<Dataset>& family,
    const std::vector<ClassifierConfig>& configs, const CvSpec& cv,
    int jobs) {
  if (family.empty()) throw ValidationError("default_benchmark: empty family");
  const std::size_t n_trials = configs.size() * family.size();
  std::vector<double> acc(n_trials, 0.0);
  parallel_for(n_trials, jobs, [&](std::size_t t) {
    const std::size_t c = t / family.size();
    const std::size_t d = t % family.size();
    acc[t] = cross_val_accuracy(configs[c], family[d], cv);
  });

  std::vector<BenchResult> results;
  for (std::size_t c = 0; c < configs.size(); ++c) {
    BenchResult r;
    r.id = configs[c].id;
    r.per_dataset.assign(acc.begin() + static_cast<std::ptrdiff_t>(
                                            c * family.size()),
                         acc.begin() + static_cast<std::ptrdiff_t>(
                                           (c + 1) * family.size()));
    r.stats = stats_over(r.per_dataset);
    results.push_back(std::move(r));
  }
  std::sort(results.begin(), results.end(),
            [](const BenchResult& a, const BenchResult& b) {
              if (a.stats.mean != b.stats.mean)
                return a.stats.mean > b.stats.mean;
              return a.id < b.id;
            });
  return results;
}

SweepReport sweep_parameter(const ClassifierConfig& base,
                            const std::string& param,
                            const std::vector<Dataset>& family,
                            const CvSpec& cv, int jobs,
                            const std::vector<ParamValue>* grid_override,
                            const std::vector<double>* gamma_def_cache) {
  if (family.empty()) throw ValidationError("sweep_parameter: empty family");
  const auto& schema = schema_for(base.id);
  const ParamDef& def = schema.require(param);
  const std::vector<ParamValue>& grid =
      grid_override != nullptr ? *grid_override : def.grid;
  if (grid.empty())
    throw ValidationError("sweep_parameter: empty grid for " + base.id + "." +
                          param);
  if (gamma_def_cache != nullptr &&
      gamma_def_cache->size() != family.size())
    throw ValidationError("sweep_parameter: bad gamma_def cache size");

  std::vector<ClassifierConfig> variants;
  for (const auto& value : grid) {
    ClassifierConfig c = base;
    c.values[param] = value;
    validate_config(c);
    variants.push_back(std::move(c));
  }
  const ClassifierConfig defaults = default_config(base.id);

  SweepReport report;
  report.id = base.id;
  report.param = param;
  report.display = schema.display_name + " -" + param;
  report.gamma_def.resize(family.size());
  report.gamma_max.resize(family.size());
  report.per_dataset_s.resize(family.size());

  // trial layout: per dataset, [gamma_def (unless cached), each grid value]
  const std::size_t per_dataset = variants.size() + (gamma_def_cache ? 0 : 1);
  std::vector<double> acc(family.size() * per_dataset, 0.0);
  parallel_for(acc.size(), jobs, [&](std::size_t t) {
    const std::size_t d = t / per_dataset;
    const std::size_t j = t % per_dataset;
    if (!gamma_def_cache && j == 0) {
      acc[t] = cross_val_accuracy(defaults, family[d], cv);
    } else {
      const std::size_t v = gamma_def_cache ? j : j - 1;
      acc[t] = cross_val_accuracy(variants[v], family[d], cv);
    }
  });

  for (std::size_t d = 0; d < family.size(); ++d) {
    const double gdef = gamma_def_cache
                            ? (*gamma_def_cache)[d]
                            : acc[d * per_dataset];
    double gmax = -std::numeric_limits<double>::infinity();
    for (std::size_t v = 0; v < variants.size(); ++v)
      gmax = std::max(gmax,
                      acc[d * per_dataset + v + (gamma_def_cache ? 0 : 1)]);
    report.gamma_def[d] = gdef;
    report.gamma_max[d] = gmax;
    report.per_dataset_s[d] = gmax - gdef;
  }
  const EvalStats s = stats_over(report.per_dataset_s);
  report.mean_s = s.mean;
  report.std_s = s.deviation;
  report.max_s = s.best;
  return report;
}

SearchReport random_search_with(const ClassifierSchema& schema,
                                int n_datasets, int n_configs,
                                std::uint64_t seed,
                                const TrialEvaluator& evaluator,
                                const std::vector<double>& default_accuracy,
                                int jobs) {
  if (n_configs < 1)
    throw ValidationError("random_search: n_configs must be >= 1");
  if (schema.params.empty())
    throw ValidationError("random_search: classifier '" + schema.id +
                          "' has no tunable parameters");
  if (static_cast<int>(default_accuracy.size()) != n_datasets)
    throw ValidationError("random_search: bad default accuracy size");

  // The same sampled configs are evaluated on every dataset; config j is a
  // pure function of (seed, j), so any execution order gives one answer.
  Rng base(seed);
  std::vector<ClassifierConfig> configs;
  configs.reserve(static_cast<std::size_t>(n_configs));
  for (int j = 0; j < n_configs; ++j) {
    Rng stream = base.derive(static_cast<std::uint64_t>(j));
    configs.push_back(sample_config(schema, stream));
  }

  SearchReport report;
  report.id = schema.id;
  report.n_configs = n_configs;
  report.seed = seed;
  report.default_accuracy = default_accuracy;

  const std::size_t n_trials =
      static_cast<std::size_t>(n_datasets) * static_cast<std::size_t>(n_configs);
  std::vector<double> acc(n_trials, 0.0);
  parallel_for(n_trials, jobs, [&](std::size_t t) {
    const auto d = static_cast<int>(t / static_cast<std::size_t>(n_configs));
    const auto j = static_cast<std::size_t>(t % static_cast<std::size_t>(n_configs));
    acc[t] = evaluator(d, configs[j]);
  });

  report.deltas.resize(n_trials);
  report.per_dataset_p.resize(static_cast<std::size_t>(n_datasets));
  report.best_accuracy.resize(static_cast<std::size_t>(n_datasets));
  report.best_config.resize(static_cast<std::size_t>(n_datasets));

  long long improving = 0;
  double sum = 0.0, sum2 = 0.0, maximum = 0.0;
  for (int d = 0; d < n_datasets; ++d) {
    long long local_improving = 0;
    double best = -std::numeric_limits<double>::infinity();
    std::size_t best_j = 0;
    for (int j = 0; j < n_configs; ++j) {
      const std::size_t t = static_cast<std::size_t>(d) * n_configs + j;
      const double delta = acc[t] - default_accuracy[static_cast<std::size_t>(d)];
      report.deltas[t] = delta;
      if (delta > 0.0) {
        ++improving;
        ++local_improving;
        sum += delta;
        sum2 += delta * delta;
        maximum = std::max(maximum, delta);
      }
      if (acc[t] > best) {
        best = acc[t];
        best_j = static_cast<std::size_t>(j);
      }
    }
    report.per_dataset_p[static_cast<std::size_t>(d)] =
        100.0 * static_cast<double>(local_improving) / n_configs;
    report.best_accuracy[static_cast<std::size_t>(d)] = best;
    report.best_config[static_cast<std::size_t>(d)] = configs[best_j];
  }
  report.p_value =
      100.0 * static_cast<double>(improving) / static_cast<double>(n_trials);
  if (improving > 0) {
    report.mean = sum / static_cast<double>(improving);
    const double var =
        sum2 / static_cast<double>(improving) - report.mean * report.mean;
    report.deviation = std::sqrt(std::max(var, 0.0));
    report.maximum = maximum;
  }
  return report;
}

SearchReport random_search(const std::string& id,
                           const std::vector<Dataset>& family, int n_configs,
                           std::uint64_t seed, const CvSpec& cv, int jobs) {
  if (family.empty()) throw ValidationError("random_search: empty family");
  const auto& schema = schema_for(id);
  const ClassifierConfig defaults = default_config(id);

  std::vector<double> default_accuracy(family.size(), 0.0);
  parallel_for(family.size(), jobs, [&](std::size_t d) {
    default_accuracy[d] = cross_val_accuracy(defaults, family[d], cv);
  });
  return random_search_with(
      schema, static_cast<int>(family.size()), n_configs, seed,
      [&](int d, const ClassifierConfig& config) {
        return cross_val_accuracy(config, family[static_cast<std::size_t>(d)],
                                  cv);
      },
      default_accuracy, jobs);
}

std::vector<RankedEntry> best_of_random_ranking(
    const std::vector<SearchReport>& reports, std::size_t family_size) {
  if (reports.empty())
    throw ValidationError("best_of_random_ranking: no reports");
  std::vector<RankedEntry> ranking;
  for (const auto& r : reports) {
    if (r.best_accuracy.size() != family_size)
      throw ValidationError(
          "best_of_random_ranking: report for '" + r.id +
          "' covers a different family");
    const EvalStats s = stats_over(r.best_accuracy);
    ranking.push_back({r.id, s.mean, s.deviation});
  }
  std::sort(ranking.begin(), ranking.end(),
            [](const RankedEntry& a, const RankedEntry& b) {
              if (a.mean != b.mean) return a.mean > b.mean;
              return a.id < b.id;
            });
  return ranking;
}

std::vector<CurveSeries> feature_curve(
    const std::vector<std::vector<Dataset>>& families,
    const std::vector<ClassifierConfig>& configs, const CvSpec& cv,
    int jobs) {
  if (families.empty()) throw ValidationError("feature_curve: no families");
  std::vector<int> feature_counts;
  for (const auto& family : families) {
    if (family.empty()) throw ValidationError("feature_curve: empty family");
    feature_counts.push_back(family.front().n_features());
  }
  for (std::size_t i = 0; i < feature_counts.size(); ++i)
    for (std::size_t j = i + 1; j < feature_counts.size(); ++j)
      if (feature_counts[i] == feature_counts[j])
        throw ValidationError("feature_curve: duplicate family for F=" +
                              std::to_string(feature_counts[i]));

  std::vector<CurveSeries> series(configs.size());
  for (std::size_t c = 0; c < configs.size(); ++c)
    series[c].id = configs[c].id;

  std::vector<std::size_t> order(families.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return feature_counts[a] < feature_counts[b];
  });

  for (std::size_t oi : order) {
    const auto results = default_benchmark(families[oi], configs, cv, jobs);
    for (std::size_t c = 0; c < configs.size(); ++c) {
      const auto it = std::find_if(
          results.begin(), results.end(),
          [&](const BenchResult& r) { return r.id == configs[c].id; });
      series[c].points.emplace_back(feature_counts[oi], it->stats.mean);
    }
  }
  return series;
}

}  // namespace clfbench
