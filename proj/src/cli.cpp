#include "clfbench/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "clfbench/common.hpp"
#include "clfbench/dataset_io.hpp"
#include "clfbench/evaluation.hpp"
#include "clfbench/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace clfbench::cli {

namespace {

void write_text_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw IoError("write failed for " + path.string());
}

void write_json_file(const fs::path& path, const json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

json load_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw IoError(path.string() + ": bad JSON: " + e.what());
  }
  return j;
}

std::uint64_t stable_hash(const std::string& text) {
  // FNV-1a, keeps per-classifier search streams apart.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

int default_jobs() {
  if (const char* env = std::getenv("CLFBENCH_JOBS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      throw ValidationError("CLFBENCH_JOBS must be an integer");
    }
  }
  return 1;
}

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  return static_cast<int>(
      std::max(1u, std::thread::hardware_concurrency()));
}

std::vector<std::string> parse_classifier_list(const std::string& text) {
  if (text == "all") return classifier_ids();
  std::vector<std::string> ids;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string id =
        text.substr(start, comma == std::string::npos ? std::string::npos
                                                      : comma - start);
    if (!id.empty()) {
      schema_for(id);  // throws for unknown ids
      ids.push_back(id);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (ids.empty()) throw ValidationError("no classifiers selected");
  return ids;
}

struct Override {
  std::string id;
  std::string param;
  std::string text;
};

std::vector<Override> parse_overrides(const std::vector<std::string>& sets) {
  std::vector<Override> out;
  for (const auto& s : sets) {
    const auto dot = s.find('.');
    const auto eq = s.find('=');
    if (dot == std::string::npos || eq == std::string::npos || eq < dot)
      throw ValidationError("--set expects id.param=value, got '" + s + "'");
    out.push_back({s.substr(0, dot), s.substr(dot + 1, eq - dot - 1),
                   s.substr(eq + 1)});
  }
  return out;
}

ClassifierConfig configured(const std::string& id,
                            const std::vector<Override>& overrides) {
  ClassifierConfig config = default_config(id);
  for (const auto& o : overrides)
    if (o.id == id) apply_override(config, o.param, o.text);
  validate_config(config);
  return config;
}

json overrides_to_json(const std::vector<Override>& overrides) {
  json j = json::object();
  for (const auto& o : overrides) j[o.id + "." + o.param] = o.text;
  return j;
}

json family_summary(const std::vector<Dataset>& family,
                    const std::string& dir) {
  return {{"dir", dir},
          {"n_datasets", family.size()},
          {"spec", generator_spec_to_json(family.front().meta.spec)}};
}

// ---- table builders (shared by the writers and `report`) ---------------

std::string display_name_of(const std::string& id) {
  return schema_for(id).display_name;
}

Table bench_table(const json& results) {
  Table t;
  t.title = "Accuracy with default parameters";
  t.headers = {"#", "Classifier", "Average", "Deviation", "Best case",
               "Worst case"};
  t.sort_key = "Average";
  int rank = 1;
  for (const auto& r : results) {
    t.rows.push_back({std::to_string(rank++),
                      r.at("name").get<std::string>(),
                      r.at("mean").get<double>(),
                      r.at("deviation").get<double>(),
                      r.at("best").get<double>(),
                      r.at("worst").get<double>()});
  }
  return t;
}

Table sweep_table(const json& rows) {
  Table t;
  t.title = "One-dimensional sensitivity";
  t.headers = {"Classifier", "Parameter", "<S>", "dS", "max S"};
  t.sort_key = "";
  for (const auto& r : rows) {
    t.rows.push_back({r.at("name").get<std::string>(),
                      "-" + r.at("param").get<std::string>(),
                      r.at("mean_s").get<double>(),
                      r.at("std_s").get<double>(),
                      r.at("max_s").get<double>()});
  }
  return t;
}

Table search_table(const json& results) {
  Table t;
  t.title = "Random-configuration search";
  t.headers = {"#", "Classifier", "p-value", "Mean", "Deviation", "Maximum"};
  t.sort_key = "p-value";
  int rank = 1;
  for (const auto& r : results) {
    t.rows.push_back({std::to_string(rank++),
                      r.at("name").get<std::string>(),
                      r.at("p_value").get<double>(),
                      r.at("mean").get<double>(),
                      r.at("deviation").get<double>(),
                      r.at("maximum").get<double>()});
  }
  return t;
}

Table ranking_table(const json& ranking) {
  Table t;
  t.title = "Best random configuration per dataset";
  t.headers = {"#", "Classifier", "Average", "Deviation"};
  t.sort_key = "Average";
  int rank = 1;
  for (const auto& r : ranking) {
    t.rows.push_back({std::to_string(rank++),
                      r.at("name").get<std::string>(),
                      r.at("mean").get<double>(),
                      r.at("deviation").get<double>()});
  }
  return t;
}

// ---- subcommand payloads ------------------------------------------------

struct GenArgs {
  int features = 2, classes = 10, per_class = 40, count = 50;
  double alpha = 1.0;
  std::uint64_t seed = 1;
  std::string out;
  std::string f_sigma = "uniform:0.1,0.3";
  std::string f_c = "uniform:-1,1";
};

int run_gen(const GenArgs& a) {
  GeneratorSpec spec;
  spec.n_features = a.features;
  spec.n_classes = a.classes;
  spec.per_class = a.per_class;
  spec.alpha = a.alpha;
  spec.n_datasets = a.count;
  spec.seed = a.seed;
  spec.f_sigma = DistributionSpec::parse(a.f_sigma);
  spec.f_c = DistributionSpec::parse(a.f_c);
  spec.validate();
  std::cerr << "gen: " << spec.n_datasets << " datasets, F=" << spec.n_features
            << ", C=" << spec.n_classes << ", alpha=" << spec.alpha << "\n";
  const auto family = gen_family(spec);
  save_family(family, a.out);
  std::cerr << "gen: wrote " << a.out << "\n";
  return 0;
}

struct EvalArgs {
  std::string data;
  std::string out;
  std::string classifiers = "all";
  int folds = 10;
  std::uint64_t seed = 1;
  int jobs = 0;
  std::vector<std::string> sets;
};

json run_config_json(const std::string& command, const EvalArgs& a,
                     const std::vector<Override>& overrides) {
  return {{"command", command},
          {"data", a.data},
          {"out", a.out},
          {"classifiers", a.classifiers},
          {"cv", {{"folds", a.folds}, {"seed", a.seed}}},
          {"seed", a.seed},
          {"overrides", overrides_to_json(overrides)}};
}

int run_bench(const EvalArgs& a) {
  const auto overrides = parse_overrides(a.sets);
  const auto ids = parse_classifier_list(a.classifiers);
  const auto family = load_family(a.data);
  const CvSpec cv{a.folds, a.seed};
  const int jobs = resolve_jobs(a.jobs == 0 ? default_jobs() : a.jobs);

  std::vector<ClassifierConfig> configs;
  for (const auto& id : ids) configs.push_back(configured(id, overrides));
  std::cerr << "bench: " << ids.size() << " classifiers x " << family.size()
            << " datasets (" << cv.folds << "-fold, jobs=" << jobs << ")\n";
  const auto results = default_benchmark(family, configs, cv, jobs);

  json jresults = json::array();
  for (const auto& r : results) {
    jresults.push_back({{"id", r.id},
                        {"name", display_name_of(r.id)},
                        {"mean", r.stats.mean},
                        {"deviation", r.stats.deviation},
                        {"best", r.stats.best},
                        {"worst", r.stats.worst},
                        {"per_dataset", r.per_dataset}});
  }
  json out{{"protocol", "bench"},
           {"run_config", run_config_json("bench", a, overrides)},
           {"cv", {{"folds", cv.folds}, {"seed", cv.seed}}},
           {"family", family_summary(family, a.data)},
           {"results", jresults}};
  write_json_file(a.out, out);
  std::cerr << "bench: wrote " << a.out << "\n";
  return 0;
}

struct SweepRowSpec {
  std::string id;
  std::string param;
  std::string display;
  std::vector<Override> base;  // applied on top of defaults
};

std::vector<SweepRowSpec> sweep_rows_for(const std::string& id) {
  const auto& schema = schema_for(id);
  std::vector<SweepRowSpec> rows;
  for (const auto& p : schema.params) {
    if (p.grid.empty()) continue;
    if (id == "svm" && (p.name == "E" || p.name == "G" || p.name == "S"))
      continue;  // emitted below with their kernel bases
    rows.push_back({id, p.name, schema.display_name + " -" + p.name, {}});
  }
  if (id == "svm") {
    rows.push_back({id, "E", "SVM (poly kernel) -E", {}});
    rows.push_back({id, "E", "SVM (np kernel) -E", {{"svm", "kernel", "np"}}});
    rows.push_back(
        {id, "G", "SVM (rbf kernel) -G", {{"svm", "kernel", "rbf"}}});
    rows.push_back(
        {id, "S", "SVM (puk kernel) -S", {{"svm", "kernel", "puk"}}});
  }
  return rows;
}

struct SweepArgs : EvalArgs {
  std::string classifier = "all";
  std::string param = "all";
};

int run_sweep(const SweepArgs& a) {
  const auto overrides = parse_overrides(a.sets);
  const auto ids = parse_classifier_list(a.classifier);
  const auto family = load_family(a.data);
  const CvSpec cv{a.folds, a.seed};
  const int jobs = resolve_jobs(a.jobs == 0 ? default_jobs() : a.jobs);

  std::vector<SweepRowSpec> rows;
  for (const auto& id : ids) {
    auto all_rows = sweep_rows_for(id);
    if (a.param != "all") {
      std::erase_if(all_rows, [&](const SweepRowSpec& r) {
        return r.param != a.param;
      });
      if (all_rows.empty())
        throw ValidationError("classifier '" + id + "' has no swept parameter '" +
                              a.param + "'");
    }
    rows.insert(rows.end(), all_rows.begin(), all_rows.end());
  }

  // Gamma_def is the all-default accuracy, shared across a classifier's rows.
  std::map<std::string, std::vector<double>> gamma_def_cache;
  for (const auto& id : ids) {
    std::cerr << "sweep: defaults for " << id << "\n";
    std::vector<double> acc(family.size(), 0.0);
    const ClassifierConfig defaults = default_config(id);
    parallel_for(family.size(), jobs, [&](std::size_t d) {
      acc[d] = cross_val_accuracy(defaults, family[d], cv);
    });
    gamma_def_cache[id] = std::move(acc);
  }

  json jrows = json::array();
  for (const auto& row : rows) {
    std::cerr << "sweep: " << row.display << "\n";
    ClassifierConfig base = default_config(row.id);
    for (const auto& o : row.base) apply_override(base, o.param, o.text);
    for (const auto& o : overrides)
      if (o.id == row.id) apply_override(base, o.param, o.text);
    const auto report = sweep_parameter(base, row.param, family, cv, jobs,
                                        nullptr, &gamma_def_cache[row.id]);
    json base_overrides = json::object();
    for (const auto& o : row.base) base_overrides[o.param] = o.text;
    jrows.push_back({{"id", row.id},
                     {"name", row.display},
                     {"param", row.param},
                     {"base", base_overrides},
                     {"mean_s", report.mean_s},
                     {"std_s", report.std_s},
                     {"max_s", report.max_s},
                     {"per_dataset_s", report.per_dataset_s},
                     {"gamma_def", report.gamma_def},
                     {"gamma_max", report.gamma_max}});
  }

  EvalArgs base_args = a;
  base_args.classifiers = a.classifier;
  json run_config = run_config_json("sweep", base_args, overrides);
  run_config["param"] = a.param;
  json out{{"protocol", "sweep"},
           {"run_config", run_config},
           {"cv", {{"folds", cv.folds}, {"seed", cv.seed}}},
           {"family", family_summary(family, a.data)},
           {"rows", jrows}};
  write_json_file(a.out, out);
  std::cerr << "sweep: wrote " << a.out << "\n";
  return 0;
}

struct SearchArgs : EvalArgs {
  std::string classifier = "all";
  int configs = 200;
};

int run_search(const SearchArgs& a) {
  const auto overrides = parse_overrides(a.sets);
  if (!overrides.empty())
    throw ValidationError("--set is not meaningful for search");
  const auto ids = parse_classifier_list(a.classifier);
  const auto family = load_family(a.data);
  const CvSpec cv{a.folds, a.seed};
  const int jobs = resolve_jobs(a.jobs == 0 ? default_jobs() : a.jobs);

  std::vector<SearchReport> reports;
  json jresults = json::array();
  for (const auto& id : ids) {
    std::cerr << "search: " << id << " (" << a.configs << " configs x "
              << family.size() << " datasets)\n";
    const std::uint64_t search_seed =
        Rng(a.seed).derive(stable_hash(id)).seed();
    auto report = random_search(id, family, a.configs, search_seed, cv, jobs);
    json best = json::array();
    for (std::size_t d = 0; d < family.size(); ++d)
      best.push_back({{"accuracy", report.best_accuracy[d]},
                      {"config", config_to_json(report.best_config[d])}});
    jresults.push_back({{"id", id},
                        {"name", display_name_of(id)},
                        {"p_value", report.p_value},
                        {"per_dataset_p", report.per_dataset_p},
                        {"mean", report.mean},
                        {"deviation", report.deviation},
                        {"maximum", report.maximum},
                        {"default_accuracy", report.default_accuracy},
                        {"best", best},
                        {"deltas", report.deltas}});
    reports.push_back(std::move(report));
  }

  json jranking = json::array();
  for (const auto& e : best_of_random_ranking(reports, family.size()))
    jranking.push_back({{"id", e.id},
                        {"name", display_name_of(e.id)},
                        {"mean", e.mean},
                        {"deviation", e.deviation}});

  EvalArgs base_args = a;
  base_args.classifiers = a.classifier;
  json run_config = run_config_json("search", base_args, {});
  run_config["configs"] = a.configs;
  json out{{"protocol", "search"},
           {"run_config", run_config},
           {"cv", {{"folds", cv.folds}, {"seed", cv.seed}}},
           {"family", family_summary(family, a.data)},
           {"n_configs", a.configs},
           {"results", jresults},
           {"ranking", jranking}};
  write_json_file(a.out, out);
  std::cerr << "search: wrote " << a.out << "\n";
  return 0;
}

struct CurveArgs {
  std::vector<std::string> data;
  std::string out;
  std::string json_out;
  std::string classifiers = "all";
  int folds = 10;
  std::uint64_t seed = 1;
  int jobs = 0;
  std::vector<std::string> sets;
};

int run_curve(const CurveArgs& a) {
  const auto overrides = parse_overrides(a.sets);
  const auto ids = parse_classifier_list(a.classifiers);
  const CvSpec cv{a.folds, a.seed};
  const int jobs = resolve_jobs(a.jobs == 0 ? default_jobs() : a.jobs);

  std::vector<std::vector<Dataset>> families;
  for (const auto& dir : a.data) families.push_back(load_family(dir));
  std::vector<ClassifierConfig> configs;
  for (const auto& id : ids) configs.push_back(configured(id, overrides));

  std::cerr << "curve: " << families.size() << " families x " << ids.size()
            << " classifiers\n";
  const auto series = feature_curve(families, configs, cv, jobs);

  std::vector<NamedSeries> named;
  for (const auto& s : series) {
    NamedSeries ns;
    ns.name = display_name_of(s.id);
    for (const auto& [f, acc] : s.points) ns.points.push_back({f, acc});
    named.push_back(std::move(ns));
  }
  write_text_file(a.out, curve_data(named));
  std::cerr << "curve: wrote " << a.out << "\n";

  if (!a.json_out.empty()) {
    json jseries = json::array();
    for (const auto& s : series) {
      json points = json::array();
      for (const auto& [f, acc] : s.points)
        points.push_back({{"F", f}, {"accuracy", acc}});
      jseries.push_back({{"id", s.id},
                         {"name", display_name_of(s.id)},
                         {"points", points}});
    }
    json run_config{{"command", "curve"},
                    {"data", a.data},
                    {"out", a.out},
                    {"classifiers", a.classifiers},
                    {"cv", {{"folds", a.folds}, {"seed", a.seed}}},
                    {"seed", a.seed},
                    {"overrides", overrides_to_json(overrides)}};
    write_json_file(a.json_out, json{{"protocol", "curve"},
                                     {"run_config", run_config},
                                     {"series", jseries}});
    std::cerr << "curve: wrote " << a.json_out << "\n";
  }
  return 0;
}

struct ReportArgs {
  std::string in;
  std::string format = "markdown";
  std::string out;
  std::string histogram_dir;
  int bins = 20;
};

int run_report(const ReportArgs& a) {
  const json stored = load_json_file(a.in);
  if (!stored.contains("protocol"))
    throw IoError(a.in + ": not a results file (no protocol field)");
  const std::string protocol = stored.at("protocol").get<std::string>();
  const TableFormat format = parse_format(a.format);

  std::string rendered;
  if (protocol == "bench") {
    rendered = render_table(bench_table(stored.at("results")), format);
  } else if (protocol == "sweep") {
    rendered = render_table(sweep_table(stored.at("rows")), format);
  } else if (protocol == "search") {
    rendered = render_table(search_table(stored.at("results")), format);
    rendered += "\n";
    rendered += render_table(ranking_table(stored.at("ranking")), format);
  } else if (protocol == "curve") {
    std::vector<NamedSeries> named;
    for (const auto& s : stored.at("series")) {
      NamedSeries ns;
      ns.name = s.at("name").get<std::string>();
      for (const auto& p : s.at("points"))
        ns.points.push_back(
            {p.at("F").get<int>(), p.at("accuracy").get<double>()});
      named.push_back(std::move(ns));
    }
    rendered = curve_data(named);
  } else {
    throw IoError(a.in + ": unknown protocol '" + protocol + "'");
  }
  write_text_file(a.out, rendered);
  std::cerr << "report: wrote " << a.out << "\n";

  if (!a.histogram_dir.empty()) {
    fs::create_directories(a.histogram_dir);
    if (protocol == "search") {
      for (const auto& r : stored.at("results")) {
        const auto deltas = r.at("deltas").get<std::vector<double>>();
        const auto h = histogram(deltas, a.bins);
        write_text_file(fs::path(a.histogram_dir) /
                            ("deltas_" + r.at("id").get<std::string>() + ".csv"),
                        histogram_csv(h));
      }
    } else if (protocol == "bench") {
      for (const auto& r : stored.at("results")) {
        const auto acc = r.at("per_dataset").get<std::vector<double>>();
        const auto h = histogram(acc, a.bins);
        write_text_file(fs::path(a.histogram_dir) /
                            ("accuracy_" + r.at("id").get<std::string>() + ".csv"),
                        histogram_csv(h));
      }
    } else {
      throw ValidationError("--histogram-dir applies to bench/search results");
    }
    std::cerr << "report: wrote histograms under " << a.histogram_dir << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"classifier comparison laboratory"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a dataset family");
  gen->add_option("--features", gen_args.features, "features per instance");
  gen->add_option("--classes", gen_args.classes, "number of classes");
  gen->add_option("--per-class", gen_args.per_class, "instances per class");
  gen->add_option("--alpha", gen_args.alpha, "class separation factor");
  gen->add_option("--count", gen_args.count, "datasets in the family");
  gen->add_option("--seed", gen_args.seed, "generator seed");
  gen->add_option("--f-sigma", gen_args.f_sigma,
                  "distribution of feature std deviations (kind:a,b)");
  gen->add_option("--f-c", gen_args.f_c,
                  "distribution of feature correlations (kind:a,b)");
  gen->add_option("--out", gen_args.out, "output directory")->required();

  auto add_eval_options = [](CLI::App* cmd, EvalArgs& a) {
    cmd->add_option("--data", a.data, "family directory")->required();
    cmd->add_option("--out", a.out, "output JSON file")->required();
    cmd->add_option("--folds", a.folds, "cross-validation folds");
    cmd->add_option("--seed", a.seed, "global seed");
    cmd->add_option("--jobs", a.jobs, "worker threads (0 = all cores)");
    cmd->add_option("--set", a.sets, "parameter override id.param=value");
  };

  EvalArgs bench_args;
  auto* bench = app.add_subcommand("bench", "default-parameter benchmark");
  add_eval_options(bench, bench_args);
  bench->add_option("--classifiers", bench_args.classifiers,
                    "comma list of classifier ids, or 'all'");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "one-dimensional sensitivity");
  add_eval_options(sweep, sweep_args);
  sweep->add_option("--classifier", sweep_args.classifier,
                    "classifier id or 'all'");
  sweep->add_option("--param", sweep_args.param, "parameter name or 'all'");

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "random parameter search");
  add_eval_options(search, search_args);
  search->add_option("--classifier", search_args.classifier,
                     "classifier id or 'all'");
  search->add_option("--configs", search_args.configs,
                     "random configurations per classifier");

  CurveArgs curve_args;
  auto* curve = app.add_subcommand("curve", "accuracy versus feature count");
  curve->add_option("--data", curve_args.data, "family directory (repeat)")
      ->required();
  curve->add_option("--out", curve_args.out, "output CSV")->required();
  curve->add_option("--json", curve_args.json_out, "also write a JSON result");
  curve->add_option("--classifiers", curve_args.classifiers,
                    "comma list of classifier ids, or 'all'");
  curve->add_option("--folds", curve_args.folds, "cross-validation folds");
  curve->add_option("--seed", curve_args.seed, "global seed");
  curve->add_option("--jobs", curve_args.jobs, "worker threads (0 = all cores)");
  curve->add_option("--set", curve_args.sets,
                    "parameter override id.param=value");

  ReportArgs report_args;
  auto* report = app.add_subcommand("report", "re-render a stored result");
  report->add_option("--in", report_args.in, "stored JSON result")->required();
  report->add_option("--format", report_args.format, "csv, json or markdown");
  report->add_option("--out", report_args.out, "output file")->required();
  report->add_option("--histogram-dir", report_args.histogram_dir,
                     "also write per-classifier histogram CSVs here");
  report->add_option("--bins", report_args.bins, "histogram bins");

  std::string schemas_out;
  auto* schemas = app.add_subcommand("schemas", "export parameter schemas");
  schemas->add_option("--out", schemas_out, "output JSON file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) return run_gen(gen_args);
    if (bench->parsed()) return run_bench(bench_args);
    if (sweep->parsed()) return run_sweep(sweep_args);
    if (search->parsed()) return run_search(search_args);
    if (curve->parsed()) return run_curve(curve_args);
    if (report->parsed()) return run_report(report_args);
    if (schemas->parsed()) {
      write_json_file(schemas_out, schemas_to_json());
      std::cerr << "schemas: wrote " << schemas_out << "\n";
      return 0;
    }
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace clfbench::cli
