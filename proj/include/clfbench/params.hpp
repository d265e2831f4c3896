#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "clfbench/rng.hpp"

namespace clfbench {

using ParamValue = std::variant<long long, double, bool, std::string>;

enum class ParamKind { Int, Real, Bool, Choice };

/// Sampling range for the multidimensional protocol. Numeric parameters are
/// drawn from [lo, hi], log-uniformly when log_scale is set; booleans are a
/// fair coin; choices are uniform over the choice set.
struct RandomRange {
  double lo = 0.0;
  double hi = 0.0;
  bool log_scale = false;
};

struct ParamDef {
  std::string name;  // flag-style, e.g. "K"
  ParamKind kind = ParamKind::Int;
  ParamValue default_value;
  std::vector<ParamValue> grid;  // one-dimensional sweep values, default excluded
  RandomRange range;
  std::vector<std::string> choices;  // admissible set for Choice kind
  double hard_lo = 0.0;              // admissible numeric bounds
  double hard_hi = 0.0;
  bool inert = false;  // accepted for completeness, no effect on predictions
  std::string doc;
};

struct ClassifierSchema {
  std::string id;            // e.g. "knn"
  std::string display_name;  // e.g. "kNN" (reports use the paper's names)
  std::vector<ParamDef> params;

  const ParamDef* find(const std::string& name) const;
  const ParamDef& require(const std::string& name) const;
};

/// The classifier roster, in fixed order.
const std::vector<ClassifierSchema>& schema_registry();
const ClassifierSchema& schema_for(const std::string& id);
std::vector<std::string> classifier_ids();

/// One concrete assignment of every schema parameter.
struct ClassifierConfig {
  std::string id;
  std::map<std::string, ParamValue> values;

  bool operator==(const ClassifierConfig&) const = default;
};

ClassifierConfig default_config(const std::string& id);

/// Checks the assignment against the schema (complete, every value in its
/// admissible set). Throws ValidationError.
void validate_config(const ClassifierConfig& config);

/// Random configuration for the multidimensional protocol.
ClassifierConfig sample_config(const ClassifierSchema& schema, Rng& rng);

/// Applies a textual override like K=5 or kernel=rbf, parsing by kind.
void apply_override(ClassifierConfig& config, const std::string& name,
                    const std::string& text);

/// Stable single-line rendering, e.g. knn{F=0,I=0,K=3,X=0}.
std::string canonical_string(const ClassifierConfig& config);

// typed accessors (throw ValidationError on kind mismatch)
long long get_int(const ClassifierConfig& c, const std::string& name);
double get_real(const ClassifierConfig& c, const std::string& name);
bool get_bool(const ClassifierConfig& c, const std::string& name);
std::string get_choice(const ClassifierConfig& c, const std::string& name);

nlohmann::json param_value_to_json(const ParamValue& v);
ParamValue param_value_from_json(const nlohmann::json& j, ParamKind kind);
nlohmann::json config_to_json(const ClassifierConfig& config);
ClassifierConfig config_from_json(const nlohmann::json& j);

/// Full registry as JSON (the schemas.json interface): per classifier an
/// array of {name, kind, default, grid, range}.
nlohmann::json schemas_to_json();

}  // namespace clfbench
