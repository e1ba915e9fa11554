#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "masip/experiment.hpp"

namespace masip {

/// A percentage at one-decimal resolution, stored as tenths (46.9 -> 469).
struct Tenths {
  std::int64_t value = 0;

  static Tenths from(const Rational& percent) { return {percent.round_scaled(1)}; }
  static Tenths parse(std::string_view text);
  std::string str() const;

  bool operator==(const Tenths&) const = default;
};

enum class RowKind { Member, Group, SuiteMean };
std::string_view to_string(RowKind kind);

struct ReportRow {
  std::string suite_kind;
  std::string group;   // empty on the suite mean row
  std::string member;  // empty on group and mean rows
  std::optional<std::size_t> indiv;
  std::optional<std::size_t> base;
  std::optional<std::size_t> union_count;
  std::optional<Tenths> reusability_pct;
  std::optional<Tenths> extra_cost_pct;
  RowKind kind = RowKind::Member;

  bool operator==(const ReportRow&) const = default;
};

enum class TableFormat { Csv, Markdown };
TableFormat table_format_from_string(std::string_view s);

inline constexpr std::string_view kCsvHeader =
    "suite,group,member,indiv,base,union,reusability_pct,extra_cost_pct,row_kind";
inline constexpr std::string_view kPlotCsvHeader = "label,reusability_pct,extra_cost_pct";

/// Member rows, then the group row, for each result in order; one suite mean row last.
std::vector<ReportRow> report_rows(const ExperimentSuite& suite);

std::string emit_table(const ExperimentSuite& suite, TableFormat format);
std::string rows_to_csv(const std::vector<ReportRow>& rows);
/// Inverse of rows_to_csv. Throws InputError on malformed input.
std::vector<ReportRow> parse_report_csv(std::string_view text);

struct OutputFile {
  std::string name;
  std::string content;
};

std::string plot_series_csv(const ExperimentSuite& suite);
std::string plot_svg(const ExperimentSuite& suite);

/// Plot data for an intra/inter pair built against the same catalog.
std::vector<OutputFile> emit_plot_data(const ExperimentSuite& intra, const ExperimentSuite& inter,
                                       bool with_svg = false);

}  // namespace masip
