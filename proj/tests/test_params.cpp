#include <doctest.h>

#include <set>

#include "clfbench/common.hpp"
#include "clfbench/params.hpp"

using namespace clfbench;

TEST_CASE("registry covers the roster and rejects unknown ids") {
  const auto ids = classifier_ids();
  const std::set<std::string> expected{"knn",  "naive_bayes", "logistic",
                                       "c45",  "cart",        "forest",
                                       "svm",  "mlp"};
  CHECK(std::set<std::string>(ids.begin(), ids.end()) == expected);
  CHECK_THROWS_AS(schema_for("bayesnet"), ValidationError);
}

TEST_CASE("every parameter of the sensitivity tables exists exactly once") {
  const auto has = [](const char* id, const char* name) {
    return schema_for(id).find(name) != nullptr;
  };
  for (const char* p : {"K", "I", "F", "X"}) CHECK(has("knn", p));
  for (const char* p : {"U", "S", "A", "C", "M", "N"}) CHECK(has("c45", p));
  for (const char* p : {"R", "M"}) CHECK(has("logistic", p));
  for (const char* p : {"K", "D"}) CHECK(has("naive_bayes", p));
  for (const char* p : {"D", "C", "H", "L", "M", "N", "V", "E"})
    CHECK(has("mlp", p));
  for (const char* p : {"I", "K", "depth", "S"}) CHECK(has("forest", p));
  for (const char* p : {"S", "C", "M", "N", "A", "H", "U"})
    CHECK(has("cart", p));
  for (const char* p : {"C", "L", "P", "V", "W", "N", "E", "G", "S"})
    CHECK(has("svm", p));

  for (const auto& schema : schema_registry()) {
    std::set<std::string> names;
    for (const auto& p : schema.params) CHECK(names.insert(p.name).second);
  }
}

TEST_CASE("inert flags are marked as documented deviations") {
  CHECK(schema_for("c45").require("S").inert);
  CHECK(schema_for("mlp").require("C").inert);
  CHECK(schema_for("mlp").require("E").inert);
  CHECK(schema_for("svm").require("V").inert);
  CHECK(schema_for("svm").require("W").inert);
  CHECK(schema_for("cart").require("C").inert);
  CHECK(schema_for("cart").require("H").inert);
  CHECK_FALSE(schema_for("knn").require("K").inert);
}

TEST_CASE("sweep grids exclude defaults; random ranges contain them") {
  for (const auto& schema : schema_registry()) {
    for (const auto& p : schema.params) {
      for (const auto& g : p.grid) CHECK(g != p.default_value);
      switch (p.kind) {
        case ParamKind::Int: {
          const auto d = std::get<long long>(p.default_value);
          CHECK(static_cast<double>(d) >= p.range.lo);
          CHECK(static_cast<double>(d) <= p.range.hi);
          break;
        }
        case ParamKind::Real: {
          const double d = std::get<double>(p.default_value);
          CHECK(d >= p.range.lo);
          CHECK(d <= p.range.hi);
          break;
        }
        case ParamKind::Bool:
          break;  // both values sampled
        case ParamKind::Choice: {
          const auto& d = std::get<std::string>(p.default_value);
          CHECK(std::find(p.choices.begin(), p.choices.end(), d) !=
                p.choices.end());
          break;
        }
      }
    }
  }
}

TEST_CASE("config validation enforces admissible sets") {
  ClassifierConfig config = default_config("knn");
  validate_config(config);

  config.values["K"] = static_cast<long long>(0);
  CHECK_THROWS_AS(validate_config(config), ValidationError);

  config = default_config("svm");
  config.values["kernel"] = std::string("sigmoid");
  CHECK_THROWS_AS(validate_config(config), ValidationError);

  config = default_config("mlp");
  config.values.erase("L");
  CHECK_THROWS_AS(validate_config(config), ValidationError);
}

TEST_CASE("sampled configs are valid, deterministic and span the ranges") {
  for (const auto& schema : schema_registry()) {
    Rng a(101), b(101);
    for (int t = 0; t < 50; ++t) {
      Rng sa = a.derive(static_cast<std::uint64_t>(t));
      Rng sb = b.derive(static_cast<std::uint64_t>(t));
      const auto ca = sample_config(schema, sa);
      const auto cb = sample_config(schema, sb);
      CHECK(ca == cb);
      validate_config(ca);
    }
  }
  // log-uniform K sampling actually reaches both ends of [1, 50]
  const auto& knn_schema = schema_for("knn");
  Rng rng(7);
  long long lo = 1000, hi = 0;
  for (int t = 0; t < 400; ++t) {
    Rng s = rng.derive(static_cast<std::uint64_t>(t));
    const auto c = sample_config(knn_schema, s);
    lo = std::min(lo, std::get<long long>(c.values.at("K")));
    hi = std::max(hi, std::get<long long>(c.values.at("K")));
  }
  CHECK(lo <= 2);
  CHECK(hi >= 30);
}

TEST_CASE("overrides parse by kind and mlp.H accepts the 'a' alias") {
  ClassifierConfig config = default_config("mlp");
  apply_override(config, "H", "16");
  CHECK(std::get<long long>(config.values.at("H")) == 16);
  apply_override(config, "H", "a");
  CHECK(std::get<long long>(config.values.at("H")) == 0);
  apply_override(config, "D", "on");
  CHECK(std::get<bool>(config.values.at("D")));
  CHECK_THROWS_AS(apply_override(config, "L", "fast"), ValidationError);
  CHECK_THROWS_AS(apply_override(config, "Q", "1"), ValidationError);
}

TEST_CASE("schemas export as JSON with the documented fields") {
  const auto j = schemas_to_json();
  REQUIRE(j.contains("classifiers"));
  CHECK(j.at("classifiers").size() == 8);
  for (const auto& c : j.at("classifiers")) {
    CHECK(c.contains("id"));
    for (const auto& p : c.at("params")) {
      CHECK(p.contains("name"));
      CHECK(p.contains("kind"));
      CHECK(p.contains("default"));
      CHECK(p.contains("grid"));
      CHECK(p.contains("range"));
    }
  }
}

TEST_CASE("canonical strings and JSON round trips are stable") {
  ClassifierConfig config = default_config("knn");
  CHECK(canonical_string(config) == "knn{F=0,I=0,K=1,X=0}");
  const auto j = config_to_json(config);
  CHECK(config_from_json(j) == config);
}
