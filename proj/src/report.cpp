#include "clfbench/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "clfbench/common.hpp"

namespace clfbench {

namespace {

std::string two_decimals(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string cell_text(const TableCell& cell) {
  if (std::holds_alternative<double>(cell))
    return two_decimals(std::get<double>(cell));
  return std::get<std::string>(cell);
}

void check_rectangular(const Table& table) {
  for (const auto& row : table.rows)
    if (row.size() != table.headers.size())
      throw ValidationError("render_table: ragged row (expected " +
                            std::to_string(table.headers.size()) +
                            " cells, got " + std::to_string(row.size()) + ")");
}

}  // namespace

TableFormat parse_format(const std::string& name) {
  if (name == "csv") return TableFormat::Csv;
  if (name == "json") return TableFormat::Json;
  if (name == "markdown" || name == "md") return TableFormat::Markdown;
  throw ValidationError("unknown table format '" + name + "'");
}

std::string render_table(const Table& table, TableFormat format) {
  check_rectangular(table);
  std::ostringstream os;
  switch (format) {
    case TableFormat::Csv: {
      for (std::size_t i = 0; i < table.headers.size(); ++i)
        os << (i ? "," : "") << table.headers[i];
      os << "\n";
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
          os << (i ? "," : "") << cell_text(row[i]);
        os << "\n";
      }
      return os.str();
    }
    case TableFormat::Json:
      return table_to_json(table).dump(2) + "\n";
    case TableFormat::Markdown: {
      if (!table.title.empty()) os << "## " << table.title << "\n\n";
      os << "|";
      for (const auto& h : table.headers) os << " " << h << " |";
      os << "\n|";
      for (std::size_t i = 0; i < table.headers.size(); ++i) os << " --- |";
      os << "\n";
      for (const auto& row : table.rows) {
        os << "|";
        for (const auto& cell : row) os << " " << cell_text(cell) << " |";
        os << "\n";
      }
      return os.str();
    }
  }
  throw ValidationError("render_table: bad format");
}

nlohmann::json table_to_json(const Table& table) {
  check_rectangular(table);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& cell : row) {
      if (std::holds_alternative<double>(cell))
        r.push_back(std::get<double>(cell));
      else
        r.push_back(std::get<std::string>(cell));
    }
    rows.push_back(std::move(r));
  }
  return {{"title", table.title},
          {"headers", table.headers},
          {"rows", rows},
          {"sort_key", table.sort_key}};
}

Table table_from_json(const nlohmann::json& j) {
  Table table;
  table.title = j.at("title").get<std::string>();
  table.headers = j.at("headers").get<std::vector<std::string>>();
  table.sort_key = j.at("sort_key").get<std::string>();
  for (const auto& row : j.at("rows")) {
    std::vector<TableCell> cells;
    for (const auto& cell : row) {
      if (cell.is_number())
        cells.emplace_back(cell.get<double>());
      else
        cells.emplace_back(cell.get<std::string>());
    }
    table.rows.push_back(std::move(cells));
  }
  return table;
}

Histogram histogram(const std::vector<double>& values, int n_bins) {
  if (values.empty()) throw ValidationError("histogram: empty values");
  if (n_bins < 1) throw ValidationError("histogram: n_bins must be >= 1");

  double lo = values.front(), hi = values.front();
  for (double v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!(hi > lo)) {
    lo -= 0.5;
    hi += 0.5;
  }
  Histogram h;
  h.edges.resize(static_cast<std::size_t>(n_bins) + 1);
  for (int i = 0; i <= n_bins; ++i)
    h.edges[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * static_cast<double>(i) / n_bins;
  h.counts.assign(static_cast<std::size_t>(n_bins), 0);
  const double width = (hi - lo) / n_bins;
  for (double v : values) {
    auto bin = static_cast<long long>(std::floor((v - lo) / width));
    bin = std::clamp<long long>(bin, 0, n_bins - 1);  // last bin right-inclusive
    ++h.counts[static_cast<std::size_t>(bin)];
    ++h.total;
  }
  return h;
}

std::string histogram_csv(const Histogram& h) {
  std::ostringstream os;
  os << "bin_lo,bin_hi,count\n";
  for (std::size_t b = 0; b < h.counts.size(); ++b)
    os << h.edges[b] << "," << h.edges[b + 1] << "," << h.counts[b] << "\n";
  return os.str();
}

std::string curve_data(const std::vector<NamedSeries>& series) {
  std::ostringstream os;
  os << "classifier,F,mean_accuracy\n";
  for (const auto& s : series) {
    for (std::size_t i = 1; i < s.points.size(); ++i)
      if (s.points[i].f <= s.points[i - 1].f)
        throw ValidationError("curve_data: series '" + s.name +
                              "' is not sorted by F");
    for (const auto& p : s.points)
      os << s.name << "," << p.f << "," << two_decimals(p.accuracy) << "\n";
  }
  return os.str();
}

}  // namespace clfbench
