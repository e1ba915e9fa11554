#include <doctest.h>

#include "masip/error.hpp"
#include "masip/reporting.hpp"

using namespace masip;

namespace {

ExperimentSuite suite_of(SuiteKind kind, std::vector<std::vector<MnemonicSet>> groups,
                         std::string catalog = "toy") {
  ExperimentSuite s{kind, std::move(catalog), {}, {}, {}};
  for (std::size_t g = 0; g < groups.size(); ++g) {
    ApplicationGroup group{kind == SuiteKind::Intra ? "D" + std::to_string(g) : set_name(g, groups.size()), {}};
    for (std::size_t i = 0; i < groups[g].size(); ++i)
      group.members.push_back({"m" + std::to_string(i), groups[g][i], groups[g][i]});
    s.results.push_back(analyze_group(group));
  }
  compute_means(s);
  return s;
}

}  // namespace

TEST_CASE("tenths") {
  CHECK(Tenths::parse("46.9").value == 469);
  CHECK(Tenths::parse("0.0").value == 0);
  CHECK(Tenths::parse("-1.5").value == -15);
  CHECK(Tenths{1000}.str() == "100.0");
  CHECK_THROWS_AS(Tenths::parse("47"), InputError);
  CHECK_THROWS_AS(Tenths::parse("4.75"), InputError);
  CHECK_THROWS_AS(Tenths::parse(".5"), InputError);
  CHECK_THROWS_AS(Tenths::parse("a.b"), InputError);
}

TEST_CASE("one group gives member rows, a group row and a mean row") {
  const auto s = suite_of(SuiteKind::Intra, {{{"a", "b"}, {"a", "c"}, {"a"}, {"a", "b", "c", "d"}}});
  const auto rows = report_rows(s);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].kind == RowKind::Member);
  CHECK(rows[0].indiv == 2u);
  CHECK(rows[0].base == 1u);
  CHECK(rows[0].union_count == 4u);
  CHECK(rows[0].extra_cost_pct == Tenths{250});
  CHECK_FALSE(rows[0].reusability_pct);
  CHECK(rows[4].kind == RowKind::Group);
  CHECK(rows[4].reusability_pct == Tenths{250});
  CHECK(rows[5].kind == RowKind::SuiteMean);
  CHECK(rows[5].group.empty());
  CHECK_FALSE(rows[5].indiv);

  const std::string csv = emit_table(s, TableFormat::Csv);
  CHECK(csv.substr(0, csv.find('\n')) == kCsvHeader);
  CHECK(csv.find("intra,D0,m0,2,1,4,,25.0,member\n") != std::string::npos);
  CHECK(csv.find("intra,D0,,,1,4,25.0,31.3,group\n") != std::string::npos);
  CHECK(csv.find("intra,,,,,,25.0,31.3,suite_mean\n") != std::string::npos);
  CHECK(parse_report_csv(csv) == rows);
  CHECK(emit_table(s, TableFormat::Csv) == csv);
}

TEST_CASE("csv round-trip with quoting") {
  std::vector<ReportRow> rows{{"inter", "SET, \"x\"", "a", 1, 0, 2, std::nullopt, Tenths{500}, RowKind::Member}};
  CHECK(parse_report_csv(rows_to_csv(rows)) == rows);
  CHECK_THROWS_AS(parse_report_csv("bad header\n"), InputError);
  CHECK_THROWS_AS(parse_report_csv(std::string(kCsvHeader) + "\na,b\n"), InputError);
  CHECK_THROWS_AS(parse_report_csv(std::string(kCsvHeader) + "\ni,g,m,x,,,,,member\n"), InputError);
  CHECK_THROWS_AS(parse_report_csv(std::string(kCsvHeader) + "\ni,g,m,,,,,,other\n"), InputError);
}

TEST_CASE("markdown shows group cells once") {
  const auto s = suite_of(SuiteKind::Intra, {{{"a", "b"}, {"a"}}, {{"x"}}});
  const std::string md = emit_table(s, TableFormat::Markdown);
  CHECK(md.find("| D0 | m0 | 2 | 1 | 2 |  | 50.0 |") != std::string::npos);
  CHECK(md.find("|  | m1 | 1 |  |  |  | 0.0 |") != std::string::npos);
  CHECK(md.find("|  | (group) |  | 1 | 2 | 50.0 | 25.0 |") != std::string::npos);
  CHECK(md.find("| **Mean** |") != std::string::npos);
}

TEST_CASE("plot data") {
  const auto intra = suite_of(SuiteKind::Intra, {{{"a", "b"}, {"a"}}, {{"x"}}});
  const auto inter = suite_of(SuiteKind::Inter, {{{"a"}, {"b"}}, {{"a"}, {"a", "c"}}, {{"q"}}});
  const auto files = emit_plot_data(intra, inter, true);
  REQUIRE(files.size() == 4);
  CHECK(files[0].name == "intra_plot.csv");
  CHECK(files[0].content == "label,reusability_pct,extra_cost_pct\nD0,50.0,25.0\nD1,100.0,0.0\nMEAN,75.0,12.5\n");
  CHECK(files[1].name == "intra_plot.svg");
  CHECK(files[1].content.rfind("<svg", 0) == 0);
  CHECK(files[2].name == "inter_plot.csv");
  // First SET has an empty base: reusability 0 is still a valid series value.
  CHECK(files[2].content.find("SET-01,0.0,50.0\n") != std::string::npos);
  CHECK(files[2].content.find("\nMEAN,") != std::string::npos);

  const auto other = suite_of(SuiteKind::Inter, {{{"a"}}}, "pisa");
  CHECK_THROWS_AS(emit_plot_data(intra, other), InputError);
  CHECK_THROWS_AS(emit_plot_data(inter, intra), UsageError);
}

TEST_CASE("empty suites are rejected") {
  ExperimentSuite empty;
  CHECK_THROWS_AS(report_rows(empty), ConsistencyError);
  CHECK_THROWS_AS(plot_series_csv(empty), ConsistencyError);
}
