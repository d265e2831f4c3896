#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "clfbench/datagen.hpp"

namespace clfbench {

/// Shortest decimal form of x that parses back to the same bits.
std::string format_double(double x);

/// Writes `d` as CSV (header f1..fF,label, features in round-trip-exact
/// form) plus a JSON metadata sidecar next to it (same stem, .json).
void save_dataset(const Dataset& d, const std::filesystem::path& csv_path);

/// Reads a dataset saved by save_dataset. Throws IoError for missing files
/// and for malformed content, naming the first bad line.
Dataset load_dataset(const std::filesystem::path& csv_path);

/// Writes a family as dir/ds_000.csv, ds_000.json, ... Creates dir.
void save_family(const std::vector<Dataset>& family,
                 const std::filesystem::path& dir);

/// Loads every ds_*.csv of a family directory, in index order.
std::vector<Dataset> load_family(const std::filesystem::path& dir);

nlohmann::json generator_spec_to_json(const GeneratorSpec& spec);
GeneratorSpec generator_spec_from_json(const nlohmann::json& j);
nlohmann::json dataset_meta_to_json(const DatasetMeta& meta);
DatasetMeta dataset_meta_from_json(const nlohmann::json& j);

}  // namespace clfbench
