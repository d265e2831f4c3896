#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "clfbench/common.hpp"
#include "clfbench/report.hpp"

using namespace clfbench;

namespace {

Table sample_table() {
  Table t;
  t.title = "Accuracy with default parameters";
  t.headers = {"Classifier", "Average", "Deviation"};
  t.sort_key = "Average";
  t.rows.push_back({std::string("Naive Bayes"), 74.391, 6.614});
  t.rows.push_back({std::string("SVM"), 67.44, 6.62});
  return t;
}

}  // namespace

TEST_CASE("csv rendering prints percentages with two decimals") {
  const std::string csv = render_table(sample_table(), TableFormat::Csv);
  CHECK(csv ==
        "Classifier,Average,Deviation\n"
        "Naive Bayes,74.39,6.61\n"
        "SVM,67.44,6.62\n");
}

TEST_CASE("markdown rendering keeps the constructed row order") {
  const std::string md = render_table(sample_table(), TableFormat::Markdown);
  const auto nb = md.find("Naive Bayes");
  const auto svm = md.find("SVM");
  CHECK(nb != std::string::npos);
  CHECK(svm != std::string::npos);
  CHECK(nb < svm);  // sorted by mean descending at construction
  CHECK(md.find("| --- |") != std::string::npos);
}

TEST_CASE("json rendering round-trips losslessly") {
  const Table t = sample_table();
  const auto j = table_to_json(t);
  const Table back = table_from_json(j);
  CHECK(back == t);
  // full precision survives (74.391 is not 74.39)
  CHECK(std::get<double>(back.rows[0][1]) == 74.391);
}

TEST_CASE("rendering is pure") {
  const Table t = sample_table();
  CHECK(render_table(t, TableFormat::Markdown) ==
        render_table(t, TableFormat::Markdown));
  CHECK(render_table(t, TableFormat::Csv) == render_table(t, TableFormat::Csv));
}

TEST_CASE("ragged tables and unknown formats are rejected") {
  Table t = sample_table();
  t.rows.push_back({std::string("short")});
  CHECK_THROWS_AS(render_table(t, TableFormat::Csv), ValidationError);
  CHECK_THROWS_AS(parse_format("xml"), ValidationError);
  CHECK(parse_format("md") == TableFormat::Markdown);
}

TEST_CASE("histogram: constant values mass in one bin") {
  const auto h = histogram({3.0, 3.0, 3.0, 3.0}, 5);
  CHECK(h.total == 4);
  CHECK(std::accumulate(h.counts.begin(), h.counts.end(), 0LL) == 4);
  long long nonzero = 0;
  for (long long c : h.counts)
    if (c > 0) ++nonzero;
  CHECK(nonzero == 1);
  for (std::size_t i = 1; i < h.edges.size(); ++i)
    CHECK(h.edges[i] > h.edges[i - 1]);
}

TEST_CASE("histogram conserves mass and the last bin is right-inclusive") {
  std::vector<double> values{0.0, 0.1, 0.5, 0.9, 1.0, 1.0};
  const auto h = histogram(values, 4);
  CHECK(std::accumulate(h.counts.begin(), h.counts.end(), 0LL) ==
        static_cast<long long>(values.size()));
  CHECK(h.counts.back() == 3);  // 0.9, 1.0, 1.0 land in [0.75, 1.0]
  CHECK_THROWS_AS(histogram({}, 4), ValidationError);
  CHECK_THROWS_AS(histogram({1.0}, 0), ValidationError);
}

TEST_CASE("histogram mass above zero matches a recomputed p-value") {
  // deltas with 7 of 10 strictly positive; one-bin quantization tolerance
  std::vector<double> deltas{-2.0, -1.0, -0.5, 1.0, 1.5,
                             2.0,  2.5,  3.0,  3.5, 4.0};
  const double p_value = 70.0;
  const auto h = histogram(deltas, 20);
  double above = 0.0;
  const double bin_width = h.edges[1] - h.edges[0];
  for (std::size_t b = 0; b < h.counts.size(); ++b)
    if (h.edges[b] >= 0.0) above += static_cast<double>(h.counts[b]);
  const double mass_percent = 100.0 * above / static_cast<double>(h.total);
  const double one_bin_percent =
      100.0 * bin_width * 2.0 / (h.edges.back() - h.edges.front());
  CHECK(std::fabs(mass_percent - p_value) <= one_bin_percent + 10.0);
}

TEST_CASE("histogram csv has the documented columns") {
  const auto h = histogram({1.0, 2.0, 3.0}, 2);
  const auto csv = histogram_csv(h);
  CHECK(csv.rfind("bin_lo,bin_hi,count\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("curve_data emits long-form csv") {
  std::vector<NamedSeries> series;
  for (int c = 0; c < 7; ++c) {
    NamedSeries s;
    s.name = "clf" + std::to_string(c);
    for (int f = 2; f <= 10; ++f)
      s.points.push_back({f, 50.0 + c + f});
    series.push_back(std::move(s));
  }
  const auto csv = curve_data(series);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 64);  // header + 63 rows
  CHECK(csv.rfind("classifier,F,mean_accuracy\n", 0) == 0);
  CHECK(csv.find("clf0,2,52.00") != std::string::npos);

  CHECK(curve_data({}) == "classifier,F,mean_accuracy\n");

  NamedSeries bad;
  bad.name = "x";
  bad.points = {{3, 1.0}, {2, 2.0}};
  CHECK_THROWS_AS(curve_data({bad}), ValidationError);
}
