#include "clfbench/dataset_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "clfbench/common.hpp"

namespace fs = std::filesystem;

namespace clfbench {

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

namespace {

double parse_double(std::string_view text, const fs::path& file, int line) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc{} || res.ptr != end)
    throw IoError(file.string() + ":" + std::to_string(line) +
                  ": bad numeric field '" + std::string(text) + "'");
  return value;
}

fs::path sidecar_path(const fs::path& csv_path) {
  fs::path p = csv_path;
  p.replace_extension(".json");
  return p;
}

std::vector<std::string_view> split_csv_line(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

nlohmann::json vector_to_json(const Vector& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

Vector vector_from_json(const nlohmann::json& arr) {
  Vector v(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = arr[i].get<double>();
  return v;
}

nlohmann::json distribution_to_json(const DistributionSpec& d) {
  return {{"kind",
           d.kind == DistributionSpec::Kind::Uniform ? "uniform" : "gaussian"},
          {"a", d.a},
          {"b", d.b}};
}

DistributionSpec distribution_from_json(const nlohmann::json& j) {
  DistributionSpec d;
  d.kind = j.at("kind").get<std::string>() == "uniform"
               ? DistributionSpec::Kind::Uniform
               : DistributionSpec::Kind::Gaussian;
  d.a = j.at("a").get<double>();
  d.b = j.at("b").get<double>();
  return d;
}

}  // namespace

nlohmann::json generator_spec_to_json(const GeneratorSpec& spec) {
  return {{"n_classes", spec.n_classes},
          {"n_features", spec.n_features},
          {"per_class", spec.per_class},
          {"alpha", spec.alpha},
          {"f_sigma", distribution_to_json(spec.f_sigma)},
          {"f_c", distribution_to_json(spec.f_c)},
          {"n_datasets", spec.n_datasets},
          {"seed", spec.seed}};
}

GeneratorSpec generator_spec_from_json(const nlohmann::json& j) {
  GeneratorSpec spec;
  spec.n_classes = j.at("n_classes").get<int>();
  spec.n_features = j.at("n_features").get<int>();
  spec.per_class = j.at("per_class").get<int>();
  spec.alpha = j.at("alpha").get<double>();
  spec.f_sigma = distribution_from_json(j.at("f_sigma"));
  spec.f_c = distribution_from_json(j.at("f_c"));
  spec.n_datasets = j.at("n_datasets").get<int>();
  spec.seed = j.at("seed").get<std::uint64_t>();
  return spec;
}

nlohmann::json dataset_meta_to_json(const DatasetMeta& meta) {
  nlohmann::json models = nlohmann::json::array();
  for (const auto& cm : meta.class_models)
    models.push_back({{"mean", vector_to_json(cm.mean)},
                      {"target_stds", vector_to_json(cm.target_stds)},
                      {"root_spec",
                       {{"m", cm.root_spec.m},
                        {"mu_g", cm.root_spec.mu_g},
                        {"sigma_g2", cm.root_spec.sigma_g2}}}});
  return {{"spec", generator_spec_to_json(meta.spec)},
          {"dataset_index", meta.dataset_index},
          {"class_models", models},
          {"realized_correlation_moments",
           {{"mean", meta.realized_correlation_moments.mean},
            {"variance", meta.realized_correlation_moments.variance},
            {"count", meta.realized_correlation_moments.count}}}};
}

DatasetMeta dataset_meta_from_json(const nlohmann::json& j) {
  DatasetMeta meta;
  meta.spec = generator_spec_from_json(j.at("spec"));
  meta.dataset_index = j.at("dataset_index").get<int>();
  for (const auto& cm : j.at("class_models")) {
    ClassSummary summary;
    summary.mean = vector_from_json(cm.at("mean"));
    summary.target_stds = vector_from_json(cm.at("target_stds"));
    const auto& rs = cm.at("root_spec");
    summary.root_spec = {rs.at("m").get<int>(), rs.at("mu_g").get<double>(),
                         rs.at("sigma_g2").get<double>()};
    meta.class_models.push_back(std::move(summary));
  }
  const auto& rc = j.at("realized_correlation_moments");
  meta.realized_correlation_moments = {rc.at("mean").get<double>(),
                                       rc.at("variance").get<double>(),
                                       rc.at("count").get<long long>()};
  return meta;
}

void save_dataset(const Dataset& d, const fs::path& csv_path) {
  std::ofstream out(csv_path);
  if (!out) throw IoError("cannot open " + csv_path.string() + " for writing");

  const int f = d.n_features();
  for (int i = 0; i < f; ++i) out << "f" << (i + 1) << ",";
  out << "label\n";
  for (int r = 0; r < d.n_rows(); ++r) {
    for (int c = 0; c < f; ++c) out << format_double(d.instances(r, c)) << ",";
    out << d.labels[static_cast<std::size_t>(r)] << "\n";
  }
  if (!out) throw IoError("write failed for " + csv_path.string());
  out.close();

  std::ofstream side(sidecar_path(csv_path));
  if (!side)
    throw IoError("cannot open " + sidecar_path(csv_path).string() +
                  " for writing");
  side << dataset_meta_to_json(d.meta).dump(2) << "\n";
  if (!side) throw IoError("write failed for " + sidecar_path(csv_path).string());
}

Dataset load_dataset(const fs::path& csv_path) {
  std::ifstream in(csv_path);
  if (!in) throw IoError("cannot open " + csv_path.string());

  std::string line;
  int line_no = 0;
  if (!std::getline(in, line))
    throw IoError(csv_path.string() + ":1: empty file");
  ++line_no;
  const auto header = split_csv_line(line);
  if (header.size() < 2 || header.back() != "label")
    throw IoError(csv_path.string() + ":1: bad header, expected f1,...,label");
  const int f = static_cast<int>(header.size()) - 1;
  for (int i = 0; i < f; ++i)
    if (header[static_cast<std::size_t>(i)] != "f" + std::to_string(i + 1))
      throw IoError(csv_path.string() + ":1: bad header column " +
                    std::to_string(i + 1));

  std::vector<double> values;
  std::vector<int> labels;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (static_cast<int>(fields.size()) != f + 1)
      throw IoError(csv_path.string() + ":" + std::to_string(line_no) +
                    ": expected " + std::to_string(f + 1) + " fields, got " +
                    std::to_string(fields.size()));
    for (int c = 0; c < f; ++c)
      values.push_back(
          parse_double(fields[static_cast<std::size_t>(c)], csv_path, line_no));
    int label = 0;
    const auto& lf = fields.back();
    auto res = std::from_chars(lf.data(), lf.data() + lf.size(), label);
    if (res.ec != std::errc{} || res.ptr != lf.data() + lf.size())
      throw IoError(csv_path.string() + ":" + std::to_string(line_no) +
                    ": bad label '" + std::string(lf) + "'");
    labels.push_back(label);
  }

  Dataset d;
  const auto rows = static_cast<Eigen::Index>(labels.size());
  d.instances = Matrix(rows, f);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (int c = 0; c < f; ++c)
      d.instances(r, c) = values[static_cast<std::size_t>(r) * f + c];
  d.labels = std::move(labels);

  const fs::path side = sidecar_path(csv_path);
  std::ifstream meta_in(side);
  if (!meta_in) throw IoError("missing metadata sidecar " + side.string());
  nlohmann::json j;
  try {
    meta_in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(side.string() + ": bad JSON: " + e.what());
  }
  try {
    d.meta = dataset_meta_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(side.string() + ": bad metadata: " + e.what());
  }
  return d;
}

namespace {

std::string dataset_file_name(int index) {
  std::ostringstream os;
  os << "ds_";
  const std::string n = std::to_string(index);
  for (std::size_t i = n.size(); i < 3; ++i) os << '0';
  os << n << ".csv";
  return os.str();
}

}  // namespace

void save_family(const std::vector<Dataset>& family, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string());
  for (std::size_t k = 0; k < family.size(); ++k)
    save_dataset(family[k], dir / dataset_file_name(static_cast<int>(k)));
}

std::vector<Dataset> load_family(const fs::path& dir) {
  if (!fs::exists(dir)) throw IoError("no such directory: " + dir.string());
  if (!fs::is_directory(dir))
    throw IoError("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (name.size() > 7 && name.rfind("ds_", 0) == 0 &&
        entry.path().extension() == ".csv")
      files.push_back(entry.path());
  }
  if (files.empty())
    throw IoError("no ds_*.csv datasets found in " + dir.string());
  std::sort(files.begin(), files.end());
  std::vector<Dataset> out;
  out.reserve(files.size());
  for (const auto& f : files) out.push_back(load_dataset(f));
  return out;
}

}  // namespace clfbench
