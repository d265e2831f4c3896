#include "clfbench/params.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "clfbench/common.hpp"

namespace clfbench {

namespace {

const char* kind_name(ParamKind k) {
  switch (k) {
    case ParamKind::Int: return "int";
    case ParamKind::Real: return "real";
    case ParamKind::Bool: return "bool";
    case ParamKind::Choice: return "choice";
  }
  return "?";
}

ParamDef int_param(std::string name, long long def,
                   std::vector<long long> grid, RandomRange range,
                   double hard_lo, double hard_hi, std::string doc,
                   bool inert = false) {
  ParamDef p;
  p.name = std::move(name);
  p.kind = ParamKind::Int;
  p.default_value = def;
  for (long long g : grid) p.grid.emplace_back(g);
  p.range = range;
  p.hard_lo = hard_lo;
  p.hard_hi = hard_hi;
  p.inert = inert;
  p.doc = std::move(doc);
  return p;
}

ParamDef real_param(std::string name, double def, std::vector<double> grid,
                    RandomRange range, double hard_lo, double hard_hi,
                    std::string doc, bool inert = false) {
  ParamDef p;
  p.name = std::move(name);
  p.kind = ParamKind::Real;
  p.default_value = def;
  for (double g : grid) p.grid.emplace_back(g);
  p.range = range;
  p.hard_lo = hard_lo;
  p.hard_hi = hard_hi;
  p.inert = inert;
  p.doc = std::move(doc);
  return p;
}

ParamDef bool_param(std::string name, std::string doc, bool inert = false) {
  ParamDef p;
  p.name = std::move(name);
  p.kind = ParamKind::Bool;
  p.default_value = false;
  p.grid.emplace_back(true);  // sweep = flip the flag
  p.inert = inert;
  p.doc = std::move(doc);
  return p;
}

ParamDef choice_param(std::string name, std::string def,
                      std::vector<std::string> choices, std::string doc) {
  ParamDef p;
  p.name = std::move(name);
  p.kind = ParamKind::Choice;
  p.default_value = def;
  for (const auto& c : choices)
    if (c != def) p.grid.emplace_back(c);
  p.choices = std::move(choices);
  p.doc = std::move(doc);
  return p;
}

std::vector<ClassifierSchema> build_registry() {
  std::vector<ClassifierSchema> reg;

  {
    ClassifierSchema s{"knn", "kNN", {}};
    s.params.push_back(int_param(
        "K", 1, {2, 3, 5, 7, 10, 15, 20, 30, 50}, {1, 50, true}, 1, 1000,
        "number of neighbors"));
    s.params.push_back(bool_param("I", "inverse-distance vote weighting"));
    s.params.push_back(bool_param("F", "1-distance similarity vote weighting"));
    s.params.push_back(bool_param(
        "X", "pick the best K' in 1..K by leave-one-out on the training set"));
    reg.push_back(std::move(s));
  }
  {
    ClassifierSchema s{"naive_bayes", "Naive Bayes", {}};
    s.params.push_back(bool_param("K", "kernel density estimator per feature"));
    s.params.push_back(
        bool_param("D", "discretize into 10 equal-frequency bins"));
    reg.push_back(std::move(s));
  }
  {
    ClassifierSchema s{"logistic", "Logistic", {}};
    s.params.push_back(real_param(
        "R", 1e-8,
        {1e-10, 1e-9, 1e-7, 1e-6, 1e-5, 1e-4, 1e-3, 1e-2, 1e-1, 1.0, 10.0},
        {1e-10, 10.0, true}, 0.0, 1e12, "ridge penalty on non-intercept weights"));
    s.params.push_back(int_param("M", 200, {10, 25, 50, 100, 500},
                                 {10, 500, true}, 1, 100000,
                                 "maximum Newton iterations"));
    reg.push_back(std::move(s));
  }
  {
    ClassifierSchema s{"c45", "C4.5", {}};
    s.params.push_back(bool_param("U", "no pruning"));
    s.params.push_back(bool_param("S", "subtree raising", /*inert=*/true));
    s.params.push_back(bool_param("A", "Laplace-smoothed leaf probabilities"));
    s.params.push_back(real_param("C", 0.25, {0.05, 0.1, 0.15, 0.35, 0.5},
                                  {0.01, 0.5, false}, 1e-6, 0.5,
                                  "pruning confidence factor"));
    s.params.push_back(int_param("M", 2, {1, 3, 5, 10, 20}, {1, 20, true}, 1,
                                 1000000, "minimum instances per leaf"));
    s.params.push_back(int_param(
        "N", 0, {2, 3, 5, 10}, {0, 10, false}, 0, 100,
        "reduced-error pruning folds; below 2 keeps confidence pruning"));
    reg.push_back(std::move(s));
  }
  {
    ClassifierSchema s{"cart", "Simple Cart", {}};
    s.params.push_back(int_param("S", 1, {2, 3, 5, 10}, {1, 1000, true}, 1,
                                 1000000000, "pruning cross-validation seed"));
    s.params.push_back(real_param("C", 1.0, {0.25, 0.5, 0.75},
                                  {0.1, 1.0, false}, 1e-6, 1.0,
                                  "training-fraction option", /*inert=*/true));
    s.params.push_back(int_param("M", 2, {1, 3, 5, 10, 20}, {1, 20, true}, 1,
                                 1000000, "minimum instances per leaf"));
    s.params.push_back(int_param("N", 5, {2, 3, 10}, {2, 10, false}, 2, 100,
                                 "pruning cross-validation folds"));
    s.params.push_back(bool_param("A", "one-standard-error pruning rule"));
    s.params.push_back(bool_param(
        "H", "binary-split heuristic for nominal attributes", /*inert=*/true));
    s.params.push_back(bool_param("U", "no pruning"));
    reg.push_back(std::move(s));
  }
  {
    ClassifierSchema s{"forest", "Random Forest", {}};
    s.params.push_back(int_param("I", 10, {1, 25, 50, 100}, {1, 100, true}, 1,
                                 10000, "number of trees"));
    s.params.push_back(int_param(
        "K", 0, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, {0, 10, false}, 0, 10000,
        "candidate features per split; 0 means floor(log2 F) + 1"));
    s.params.push_back(int_param("depth", 0, {1, 2, 5, 10, 25}, {0, 25, false},
                                 0, 1000000,
                                 "maximum tree depth; 0 means unlimited"));
    s.params.push_back(int_param("S", 1, {2, 3, 4, 5, 6, 7, 8, 9, 10, 11},
                                 {1, 1000, true}, 1, 1000000000,
                                 "bootstrap / feature-sampling seed"));
    reg.push_back(std::move(s));
  }
  {
    ClassifierSchema s{"svm", "SVM", {}};
    s.params.push_back(real_param("C", 1.0,
                                  {1e-3, 1e-2, 1e-1, 10.0, 100.0, 1000.0},
                                  {1e-3, 1e3, true}, 1e-12, 1e9,
                                  "soft-margin complexity"));
    s.params.push_back(real_param("L", 1e-3, {1e-4, 1e-2, 1e-1},
                                  {1e-5, 1e-1, true}, 1e-12, 0.5,
                                  "KKT tolerance"));
    s.params.push_back(real_param("P", 1e-12, {1e-10, 1e-8, 1e-5, 1e-3},
                                  {1e-12, 1e-2, true}, 1e-15, 0.1,
                                  "round-off epsilon"));
    s.params.push_back(int_param("V", -1, {5, 10}, {-1, 10, false}, -1, 100,
                                 "probability-calibration folds",
                                 /*inert=*/true));
    s.params.push_back(int_param("W", 1, {2, 3, 5}, {1, 1000, true}, 1,
                                 1000000000, "probability-calibration seed",
                                 /*inert=*/true));
    s.params.push_back(choice_param(
        "N", "0", {"0", "1", "2"},
        "feature scaling: 0 normalize to [0,1], 1 standardize, 2 none"));
    s.params.push_back(choice_param("kernel", "poly",
                                    {"poly", "np", "rbf", "puk"},
                                    "kernel family"));
    s.params.push_back(int_param("E", 1, {2, 3, 4, 5}, {1, 5, false}, 1, 10,
                                 "polynomial exponent (poly / np kernels)"));
    s.params.push_back(real_param("G", 0.5, {1e-3, 1e-2, 1e-1, 1.0, 10.0},
                                  {1e-3, 10.0, true}, 1e-9, 1e6,
                                  "RBF gamma"));
    s.params.push_back(real_param("S", 1.0, {0.1, 0.5, 2.0, 5.0, 10.0},
                                  {0.1, 10.0, true}, 1e-9, 1e6,
                                  "Puk kernel sigma"));
    reg.push_back(std::move(s));
  }
  {
    ClassifierSchema s{"mlp", "Perceptron", {}};
    s.params.push_back(bool_param("D", "halve the learning rate every epoch"));
    s.params.push_back(bool_param("C", "numeric-class option", /*inert=*/true));
    s.params.push_back(bool_param("E", "reset option", /*inert=*/true));
    s.params.push_back(int_param(
        "H", 0, {1, 2, 4, 8, 16, 32}, {0, 32, false}, 0, 1024,
        "hidden units; 0 (alias 'a') means round((F+C)/2)"));
    s.params.push_back(real_param("L", 0.3, {0.01, 0.05, 0.1, 0.5, 1.0},
                                  {0.01, 1.0, true}, 1e-9, 10.0,
                                  "learning rate"));
    s.params.push_back(real_param("M", 0.2, {0.0, 0.5, 0.9}, {0.0, 0.9, false},
                                  0.0, 0.999, "momentum"));
    s.params.push_back(int_param("N", 500, {50, 100, 1000}, {50, 1000, true},
                                 1, 1000000, "training epochs"));
    s.params.push_back(int_param(
        "V", 0, {10, 20, 30}, {0, 30, false}, 0, 50,
        "validation holdout percent; 0 disables early stopping"));
    reg.push_back(std::move(s));
  }
  return reg;
}

long long as_int(const ParamValue& v) { return std::get<long long>(v); }
double as_real(const ParamValue& v) { return std::get<double>(v); }

}  // namespace

const ParamDef* ClassifierSchema::find(const std::string& name) const {
  for (const auto& p : params)
    if (p.name == name) return &p;
  return nullptr;
}

const ParamDef& ClassifierSchema::require(const std::string& name) const {
  const ParamDef* p = find(name);
  if (!p)
    throw ValidationError("classifier '" + id + "' has no parameter '" + name +
                          "'");
  return *p;
}

const std::vector<ClassifierSchema>& schema_registry() {
  static const std::vector<ClassifierSchema> reg = build_registry();
  return reg;
}

const ClassifierSchema& schema_for(const std::string& id) {
  for (const auto& s : schema_registry())
    if (s.id == id) return s;
  throw ValidationError("unknown classifier '" + id + "'");
}

std::vector<std::string> classifier_ids() {
  std::vector<std::string> ids;
  for (const auto& s : schema_registry()) ids.push_back(s.id);
  return ids;
}

ClassifierConfig default_config(const std::string& id) {
  const auto& schema = schema_for(id);
  ClassifierConfig config;
  config.id = schema.id;
  for (const auto& p : schema.params) config.values[p.name] = p.default_value;
  return config;
}

void validate_config(const ClassifierConfig& config) {
  const auto& schema = schema_for(config.id);
  for (const auto& p : schema.params) {
    const auto it = config.values.find(p.name);
    if (it == config.values.end())
      throw ValidationError(config.id + ": missing parameter '" + p.name + "'");
    const ParamValue& v = it->second;
    switch (p.kind) {
      case ParamKind::Int: {
        if (!std::holds_alternative<long long>(v))
          throw ValidationError(config.id + "." + p.name + ": expected int");
        const double x = static_cast<double>(as_int(v));
        if (x < p.hard_lo || x > p.hard_hi)
          throw ValidationError(config.id + "." + p.name + "=" +
                                std::to_string(as_int(v)) +
                                " outside admissible range");
        break;
      }
      case ParamKind::Real: {
        if (!std::holds_alternative<double>(v))
          throw ValidationError(config.id + "." + p.name + ": expected real");
        const double x = as_real(v);
        if (!(x >= p.hard_lo && x <= p.hard_hi))
          throw ValidationError(config.id + "." + p.name + "=" +
                                std::to_string(x) +
                                " outside admissible range");
        break;
      }
      case ParamKind::Bool:
        if (!std::holds_alternative<bool>(v))
          throw ValidationError(config.id + "." + p.name + ": expected bool");
        break;
      case ParamKind::Choice: {
        if (!std::holds_alternative<std::string>(v))
          throw ValidationError(config.id + "." + p.name + ": expected choice");
        const auto& s = std::get<std::string>(v);
        if (std::find(p.choices.begin(), p.choices.end(), s) ==
            p.choices.end())
          throw ValidationError(config.id + "." + p.name + "='" + s +
                                "' is not an admissible choice");
        break;
      }
    }
  }
  for (const auto& [name, _] : config.values)
    if (!schema.find(name))
      throw ValidationError(config.id + ": unknown parameter '" + name + "'");
}

ClassifierConfig sample_config(const ClassifierSchema& schema, Rng& rng) {
  ClassifierConfig config;
  config.id = schema.id;
  for (const auto& p : schema.params) {
    switch (p.kind) {
      case ParamKind::Int: {
        long long v;
        if (p.range.log_scale) {
          const double u = rng.next_uniform(std::log(p.range.lo),
                                            std::log(p.range.hi));
          v = std::llround(std::exp(u));
        } else {
          v = rng.next_int(static_cast<std::int64_t>(p.range.lo),
                           static_cast<std::int64_t>(p.range.hi));
        }
        v = std::clamp(v, static_cast<long long>(p.range.lo),
                       static_cast<long long>(p.range.hi));
        config.values[p.name] = v;
        break;
      }
      case ParamKind::Real: {
        double v;
        if (p.range.log_scale)
          v = std::exp(
              rng.next_uniform(std::log(p.range.lo), std::log(p.range.hi)));
        else
          v = rng.next_uniform(p.range.lo, p.range.hi);
        config.values[p.name] = v;
        break;
      }
      case ParamKind::Bool:
        config.values[p.name] = static_cast<bool>(rng.next_u64() & 1u);
        break;
      case ParamKind::Choice: {
        const auto idx = rng.next_int(0, static_cast<std::int64_t>(
                                             p.choices.size() - 1));
        config.values[p.name] = p.choices[static_cast<std::size_t>(idx)];
        break;
      }
    }
  }
  return config;
}

void apply_override(ClassifierConfig& config, const std::string& name,
                    const std::string& text) {
  const auto& schema = schema_for(config.id);
  const ParamDef& p = schema.require(name);
  try {
    switch (p.kind) {
      case ParamKind::Int:
        if (config.id == "mlp" && p.name == "H" && text == "a")
          config.values[name] = static_cast<long long>(0);
        else
          config.values[name] = static_cast<long long>(std::stoll(text));
        break;
      case ParamKind::Real:
        config.values[name] = std::stod(text);
        break;
      case ParamKind::Bool:
        if (text == "1" || text == "true" || text == "on")
          config.values[name] = true;
        else if (text == "0" || text == "false" || text == "off")
          config.values[name] = false;
        else
          throw ValidationError("bad boolean '" + text + "'");
        break;
      case ParamKind::Choice:
        config.values[name] = text;
        break;
    }
  } catch (const std::invalid_argument&) {
    throw ValidationError(config.id + "." + name + ": cannot parse '" + text +
                          "' as " + kind_name(p.kind));
  } catch (const std::out_of_range&) {
    throw ValidationError(config.id + "." + name + ": value '" + text +
                          "' out of range");
  }
}

std::string canonical_string(const ClassifierConfig& config) {
  std::ostringstream os;
  os << config.id << "{";
  bool first = true;
  for (const auto& [name, value] : config.values) {
    if (!first) os << ",";
    first = false;
    os << name << "=";
    std::visit(
        [&os](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, bool>)
            os << (v ? 1 : 0);
          else
            os << v;
        },
        value);
  }
  os << "}";
  return os.str();
}

long long get_int(const ClassifierConfig& c, const std::string& name) {
  const auto it = c.values.find(name);
  if (it == c.values.end() || !std::holds_alternative<long long>(it->second))
    throw ValidationError(c.id + ": missing int parameter '" + name + "'");
  return std::get<long long>(it->second);
}

double get_real(const ClassifierConfig& c, const std::string& name) {
  const auto it = c.values.find(name);
  if (it == c.values.end() || !std::holds_alternative<double>(it->second))
    throw ValidationError(c.id + ": missing real parameter '" + name + "'");
  return std::get<double>(it->second);
}

bool get_bool(const ClassifierConfig& c, const std::string& name) {
  const auto it = c.values.find(name);
  if (it == c.values.end() || !std::holds_alternative<bool>(it->second))
    throw ValidationError(c.id + ": missing bool parameter '" + name + "'");
  return std::get<bool>(it->second);
}

std::string get_choice(const ClassifierConfig& c, const std::string& name) {
  const auto it = c.values.find(name);
  if (it == c.values.end() || !std::holds_alternative<std::string>(it->second))
    throw ValidationError(c.id + ": missing choice parameter '" + name + "'");
  return std::get<std::string>(it->second);
}

nlohmann::json param_value_to_json(const ParamValue& v) {
  return std::visit([](const auto& x) { return nlohmann::json(x); }, v);
}

ParamValue param_value_from_json(const nlohmann::json& j, ParamKind kind) {
  switch (kind) {
    case ParamKind::Int: return j.get<long long>();
    case ParamKind::Real: return j.get<double>();
    case ParamKind::Bool: return j.get<bool>();
    case ParamKind::Choice: return j.get<std::string>();
  }
  throw ValidationError("bad param kind");
}

nlohmann::json config_to_json(const ClassifierConfig& config) {
  nlohmann::json values;
  for (const auto& [name, value] : config.values)
    values[name] = param_value_to_json(value);
  return {{"id", config.id}, {"values", values}};
}

ClassifierConfig config_from_json(const nlohmann::json& j) {
  ClassifierConfig config;
  config.id = j.at("id").get<std::string>();
  const auto& schema = schema_for(config.id);
  for (const auto& [name, value] : j.at("values").items())
    config.values[name] =
        param_value_from_json(value, schema.require(name).kind);
  return config;
}

nlohmann::json schemas_to_json() {
  nlohmann::json classifiers = nlohmann::json::array();
  for (const auto& s : schema_registry()) {
    nlohmann::json params = nlohmann::json::array();
    for (const auto& p : s.params) {
      nlohmann::json grid = nlohmann::json::array();
      for (const auto& g : p.grid) grid.push_back(param_value_to_json(g));
      nlohmann::json range;
      if (p.kind == ParamKind::Choice)
        range = {{"choices", p.choices}};
      else if (p.kind == ParamKind::Bool)
        range = {{"choices", {false, true}}};
      else
        range = {{"lo", p.range.lo},
                 {"hi", p.range.hi},
                 {"scale", p.range.log_scale ? "log" : "linear"}};
      params.push_back({{"name", p.name},
                        {"kind", kind_name(p.kind)},
                        {"default", param_value_to_json(p.default_value)},
                        {"grid", grid},
                        {"range", range},
                        {"inert", p.inert},
                        {"doc", p.doc}});
    }
    classifiers.push_back(
        {{"id", s.id}, {"display_name", s.display_name}, {"params", params}});
  }
  return {{"classifiers", classifiers}};
}

}  // namespace clfbench
