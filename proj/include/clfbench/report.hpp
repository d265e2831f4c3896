#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace clfbench {

using TableCell = std::variant<std::string, double>;

/// Rectangular table; row order is fixed by the builder (sort_key records
/// which column it was sorted by).
struct Table {
  std::string title;
  std::vector<std::string> headers;
  std::vector<std::vector<TableCell>> rows;
  std::string sort_key;

  bool operator==(const Table&) const = default;
};

enum class TableFormat { Csv, Json, Markdown };

TableFormat parse_format(const std::string& name);

/// CSV and markdown print numeric cells with two decimals (the tables here
/// hold percentages); JSON keeps full precision and round-trips.
std::string render_table(const Table& table, TableFormat format);

nlohmann::json table_to_json(const Table& table);
Table table_from_json(const nlohmann::json& j);

struct Histogram {
  std::vector<double> edges;      // n_bins + 1, strictly increasing
  std::vector<long long> counts;  // n_bins
  long long total = 0;
};

/// Equal-width bins spanning [min, max] with a right-inclusive last bin.
/// A degenerate value range is widened to unit width around the value.
Histogram histogram(const std::vector<double>& values, int n_bins);

/// CSV rendering with columns bin_lo,bin_hi,count.
std::string histogram_csv(const Histogram& h);

struct CurvePoint {
  int f = 0;
  double accuracy = 0.0;
};

struct NamedSeries {
  std::string name;
  std::vector<CurvePoint> points;
};

/// Long-form CSV (classifier,F,mean_accuracy). Each series must be sorted
/// by F ascending.
std::string curve_data(const std::vector<NamedSeries>& series);

}  // namespace clfbench
