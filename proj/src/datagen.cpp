#include "clfbench/datagen.hpp"

#include <cmath>
#include <sstream>

#include "clfbench/common.hpp"

namespace clfbench {

double DistributionSpec::mean() const {
  return kind == Kind::Uniform ? 0.5 * (a + b) : a;
}

double DistributionSpec::variance() const {
  return kind == Kind::Uniform ? (b - a) * (b - a) / 12.0 : b * b;
}

double DistributionSpec::sample(Rng& rng) const {
  return kind == Kind::Uniform ? rng.next_uniform(a, b)
                               : a + b * rng.next_normal();
}

void DistributionSpec::validate(const std::string& what) const {
  if (kind == Kind::Uniform) {
    if (!(a < b))
      throw ValidationError(what + ": uniform bounds must satisfy lo < hi");
  } else {
    if (!(b > 0.0))
      throw ValidationError(what + ": gaussian std must be positive");
  }
}

DistributionSpec DistributionSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ValidationError("distribution spec must look like kind:a,b, got '" +
                          text + "'");
  const std::string kind = text.substr(0, colon);
  const std::string args = text.substr(colon + 1);
  const auto comma = args.find(',');
  if (comma == std::string::npos)
    throw ValidationError("distribution spec needs two parameters, got '" +
                          text + "'");
  DistributionSpec out;
  if (kind == "uniform")
    out.kind = Kind::Uniform;
  else if (kind == "gaussian")
    out.kind = Kind::Gaussian;
  else
    throw ValidationError("unknown distribution kind '" + kind + "'");
  try {
    out.a = std::stod(args.substr(0, comma));
    out.b = std::stod(args.substr(comma + 1));
  } catch (const std::exception&) {
    throw ValidationError("bad distribution parameters in '" + text + "'");
  }
  return out;
}

std::string DistributionSpec::to_string() const {
  std::ostringstream os;
  os << (kind == Kind::Uniform ? "uniform" : "gaussian") << ":" << a << ","
     << b;
  return os.str();
}

void GeneratorSpec::validate() const {
  if (n_classes < 2) throw ValidationError("n_classes must be >= 2");
  if (n_features < 2) throw ValidationError("n_features must be >= 2");
  if (per_class < n_features + 1)
    throw ValidationError("per_class must be >= n_features + 1");
  if (!(alpha > 0.0)) throw ValidationError("alpha must be positive");
  if (n_datasets < 1) throw ValidationError("n_datasets must be >= 1");
  f_sigma.validate("f_sigma");
  f_c.validate("f_c");
  if (f_sigma.kind == DistributionSpec::Kind::Uniform && f_sigma.a <= 0.0)
    throw ValidationError("f_sigma uniform bounds must be positive");
  if (f_c.kind == DistributionSpec::Kind::Uniform &&
      (f_c.a < -1.0 || f_c.b > 1.0))
    throw ValidationError("f_c support must lie inside (-1, 1)");
}

RootSpec moment_match(double mu_d, double mu_o, double s_o2, int n_features) {
  if (!(mu_d > 0.0)) throw ValidationError("moment_match: mu_d must be > 0");
  if (!(mu_o >= 0.0 && mu_o < mu_d))
    throw ValidationError("moment_match: need 0 <= mu_o < mu_d");
  if (!(s_o2 > 0.0)) throw ValidationError("moment_match: s_o2 must be > 0");
  if (n_features < 1)
    throw ValidationError("moment_match: n_features must be >= 1");

  // With i.i.d. entries of mean mu_g and variance sigma_g2, GG^T has
  // off-diagonal mean m*mu_g^2, diagonal mean m*(sigma_g2 + mu_g^2) and
  // off-diagonal variance (mu_d^2 - mu_o^2)/m, which fixes m.
  const long long m_raw =
      std::llround((mu_d * mu_d - mu_o * mu_o) / s_o2);
  RootSpec spec;
  spec.m = static_cast<int>(std::max<long long>({m_raw, 1, n_features}));
  spec.mu_g = std::sqrt(mu_o / spec.m);
  spec.sigma_g2 = mu_d / spec.m - spec.mu_g * spec.mu_g;
  if (!(spec.sigma_g2 > 0.0))
    throw NumericError("moment_match: infeasible targets (sigma_g2 <= 0)");
  return spec;
}

ClassModel draw_class_model(int n_features, double alpha,
                            const DistributionSpec& f_sigma,
                            const DistributionSpec& f_c, Rng& rng) {
  if (n_features < 1) throw ValidationError("draw_class_model: F must be >= 1");
  if (!(alpha > 0.0))
    throw ValidationError("draw_class_model: alpha must be positive");

  ClassModel model;
  model.mean = Vector(n_features);
  for (int f = 0; f < n_features; ++f)
    model.mean(f) = rng.next_uniform(-1.0, 1.0);

  model.target_stds = Vector(n_features);
  for (int f = 0; f < n_features; ++f) {
    double sigma = f_sigma.sample(rng);
    if (f_sigma.kind == DistributionSpec::Kind::Gaussian)
      sigma = std::max(std::fabs(sigma), 1e-6);
    model.target_stds(f) = sigma / alpha;
  }

  // Correlations are targeted on the normalized scale (unit diagonal), then
  // each row is rescaled to its exact target standard deviation. Rescaling
  // rows leaves the realized correlations untouched and keeps PSD.
  model.root_spec = moment_match(1.0, f_c.mean(), f_c.variance(), n_features);
  const double entry_std = std::sqrt(model.root_spec.sigma_g2);

  Matrix g(n_features, model.root_spec.m);
  for (int i = 0; i < n_features; ++i)
    for (int j = 0; j < model.root_spec.m; ++j)
      g(i, j) = model.root_spec.mu_g + entry_std * rng.next_normal();

  Vector row_norms(n_features);
  for (int i = 0; i < n_features; ++i) {
    row_norms(i) = g.row(i).norm();
    if (!(row_norms(i) > 0.0))
      throw NumericError("draw_class_model: degenerate zero root row");
  }

  model.realized_correlations.reserve(
      static_cast<std::size_t>(n_features) * (n_features - 1) / 2);
  for (int i = 0; i < n_features; ++i)
    for (int j = i + 1; j < n_features; ++j)
      model.realized_correlations.push_back(g.row(i).dot(g.row(j)) /
                                            (row_norms(i) * row_norms(j)));

  model.root = Matrix(n_features, model.root_spec.m);
  for (int i = 0; i < n_features; ++i)
    model.root.row(i) = g.row(i) * (model.target_stds(i) / row_norms(i));
  return model;
}

Matrix sample_instances(const ClassModel& model, int n, Rng& rng) {
  if (n < 0) throw ValidationError("sample_instances: n must be >= 0");
  const auto f = model.root.rows();
  const auto m = model.root.cols();
  Matrix out(n, f);
  Vector z(m);
  for (int r = 0; r < n; ++r) {
    for (Eigen::Index j = 0; j < m; ++j) z(j) = rng.next_normal();
    out.row(r) = (model.mean + model.root * z).transpose();
  }
  return out;
}

namespace {

CorrelationMoments pool_correlations(const std::vector<ClassModel>& models) {
  CorrelationMoments out;
  double sum = 0.0, sum2 = 0.0;
  for (const auto& m : models)
    for (double r : m.realized_correlations) {
      sum += r;
      sum2 += r * r;
      ++out.count;
    }
  if (out.count > 0) {
    out.mean = sum / out.count;
    out.variance = sum2 / out.count - out.mean * out.mean;
  }
  return out;
}

}  // namespace

Dataset gen_dataset(const GeneratorSpec& spec, int index) {
  spec.validate();
  if (index < 0 || index >= spec.n_datasets)
    throw ValidationError("gen_dataset: index out of range");

  Rng ds_rng = Rng(spec.seed).derive(static_cast<std::uint64_t>(index));

  Dataset d;
  d.meta.spec = spec;
  d.meta.dataset_index = index;
  d.instances = Matrix(spec.per_class * spec.n_classes, spec.n_features);
  d.labels.resize(static_cast<std::size_t>(spec.per_class) * spec.n_classes);

  std::vector<ClassModel> models;
  models.reserve(spec.n_classes);
  for (int c = 0; c < spec.n_classes; ++c) {
    Rng model_rng = ds_rng.derive(2 * static_cast<std::uint64_t>(c));
    Rng sample_rng = ds_rng.derive(2 * static_cast<std::uint64_t>(c) + 1);
    ClassModel model = draw_class_model(spec.n_features, spec.alpha,
                                        spec.f_sigma, spec.f_c, model_rng);
    d.instances.middleRows(c * spec.per_class, spec.per_class) =
        sample_instances(model, spec.per_class, sample_rng);
    for (int r = 0; r < spec.per_class; ++r)
      d.labels[static_cast<std::size_t>(c) * spec.per_class + r] = c;
    d.meta.class_models.push_back(
        {model.mean, model.target_stds, model.root_spec});
    models.push_back(std::move(model));
  }
  d.meta.realized_correlation_moments = pool_correlations(models);
  return d;
}

std::vector<Dataset> gen_family(const GeneratorSpec& spec) {
  spec.validate();
  std::vector<Dataset> out;
  out.reserve(spec.n_datasets);
  for (int k = 0; k < spec.n_datasets; ++k) out.push_back(gen_dataset(spec, k));
  return out;
}

std::string family_dir_name(int n_features) {
  return "DB" + std::to_string(n_features) + "F";
}

}  // namespace clfbench
