#include "masip/reporting.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "masip/error.hpp"
#include "text_util.hpp"

namespace masip {
namespace {

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::vector<std::string> split_csv_record(std::string_view line, std::size_t lineno) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back().push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back().push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back().push_back(c);
    }
  }
  if (quoted) throw InputError("csv line " + std::to_string(lineno) + ": unterminated quote");
  return fields;
}

template <class T>
std::string opt_str(const std::optional<T>& v) {
  if (!v) return {};
  if constexpr (std::is_same_v<T, Tenths>) return v->str();
  else return std::to_string(*v);
}

std::optional<std::size_t> parse_count(const std::string& s, std::size_t lineno) {
  if (s.empty()) return std::nullopt;
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw InputError("csv line " + std::to_string(lineno) + ": bad count '" + s + "'");
  return v;
}

std::string member_label(const ReportRow& row) {
  return row.kind == RowKind::Group ? "(group)" : row.member;
}

}  // namespace

Tenths Tenths::parse(std::string_view text) {
  const bool negative = !text.empty() && text.front() == '-';
  if (negative) text.remove_prefix(1);
  const auto dot = text.find('.');
  if (dot == std::string_view::npos || dot == 0 || text.size() != dot + 2)
    throw InputError("expected a one-decimal percentage, got '" + std::string(text) + "'");
  std::int64_t whole = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + dot, whole);
  const char frac = text[dot + 1];
  if (ec != std::errc() || p != text.data() + dot || frac < '0' || frac > '9')
    throw InputError("expected a one-decimal percentage, got '" + std::string(text) + "'");
  const std::int64_t v = whole * 10 + (frac - '0');
  return {negative ? -v : v};
}

std::string Tenths::str() const { return format_scaled(value, 1); }

std::string_view to_string(RowKind kind) {
  switch (kind) {
    case RowKind::Member: return "member";
    case RowKind::Group: return "group";
    case RowKind::SuiteMean: return "suite_mean";
  }
  return "member";
}

TableFormat table_format_from_string(std::string_view s) {
  if (s == "csv") return TableFormat::Csv;
  if (s == "markdown" || s == "md") return TableFormat::Markdown;
  throw UsageError("unknown table format '" + std::string(s) + "' (expected csv or markdown)");
}

std::vector<ReportRow> report_rows(const ExperimentSuite& suite) {
  if (suite.results.empty()) throw ConsistencyError("cannot report an empty suite");
  const std::string kind(to_string(suite.kind));
  std::vector<ReportRow> rows;
  for (const auto& r : suite.results) {
    for (const auto& m : r.per_member) {
      rows.push_back({kind, r.group_name, m.label, m.indiv, r.base.size(), r.union_set.size(),
                      std::nullopt, Tenths::from(m.extra_cost), RowKind::Member});
    }
    rows.push_back({kind, r.group_name, "", std::nullopt, r.base.size(), r.union_set.size(),
                    Tenths::from(r.reusability), Tenths::from(r.mean_extra_cost), RowKind::Group});
  }
  rows.push_back({kind, "", "", std::nullopt, std::nullopt, std::nullopt,
                  Tenths::from(suite.mean_reusability), Tenths::from(suite.mean_extra_cost),
                  RowKind::SuiteMean});
  return rows;
}

std::string rows_to_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << csv_field(r.suite_kind) << ',' << csv_field(r.group) << ',' << csv_field(r.member) << ','
        << opt_str(r.indiv) << ',' << opt_str(r.base) << ',' << opt_str(r.union_count) << ','
        << opt_str(r.reusability_pct) << ',' << opt_str(r.extra_cost_pct) << ','
        << to_string(r.kind) << '\n';
  }
  return out.str();
}

std::vector<ReportRow> parse_report_csv(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty() || lines.front() != kCsvHeader) throw InputError("csv: missing or wrong header");
  std::vector<ReportRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto f = split_csv_record(lines[i], i + 1);
    if (f.size() != 9) throw InputError("csv line " + std::to_string(i + 1) + ": expected 9 fields");
    ReportRow r;
    r.suite_kind = f[0];
    r.group = f[1];
    r.member = f[2];
    r.indiv = parse_count(f[3], i + 1);
    r.base = parse_count(f[4], i + 1);
    r.union_count = parse_count(f[5], i + 1);
    if (!f[6].empty()) r.reusability_pct = Tenths::parse(f[6]);
    if (!f[7].empty()) r.extra_cost_pct = Tenths::parse(f[7]);
    if (f[8] == "member") r.kind = RowKind::Member;
    else if (f[8] == "group") r.kind = RowKind::Group;
    else if (f[8] == "suite_mean") r.kind = RowKind::SuiteMean;
    else throw InputError("csv line " + std::to_string(i + 1) + ": bad row_kind '" + f[8] + "'");
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string emit_table(const ExperimentSuite& suite, TableFormat format) {
  const auto rows = report_rows(suite);
  if (format == TableFormat::Csv) return rows_to_csv(rows);

  std::ostringstream out;
  out << "| Group | Member | Indiv. | Inter. | Union | Reusability (%) | Extra cost (%) |\n"
      << "|---|---|---:|---:|---:|---:|---:|\n";
  std::string current;
  for (const auto& r : rows) {
    if (r.kind == RowKind::SuiteMean) {
      out << "| **Mean** | | | | | " << opt_str(r.reusability_pct) << " | "
          << opt_str(r.extra_cost_pct) << " |\n";
      continue;
    }
    // Group name, base and union appear once per group, on its first member row.
    const bool first = r.group != current;
    current = r.group;
    const bool show = first || r.kind == RowKind::Group;
    out << "| " << (first ? r.group : "") << " | " << member_label(r) << " | " << opt_str(r.indiv)
        << " | " << (show ? opt_str(r.base) : "") << " | " << (show ? opt_str(r.union_count) : "")
        << " | " << opt_str(r.reusability_pct) << " | " << opt_str(r.extra_cost_pct) << " |\n";
  }
  return out.str();
}

std::string plot_series_csv(const ExperimentSuite& suite) {
  if (suite.results.empty()) throw ConsistencyError("cannot plot an empty suite");
  std::ostringstream out;
  out << kPlotCsvHeader << '\n';
  for (const auto& r : suite.results)
    out << csv_field(r.group_name) << ',' << r.reusability.to_fixed(1) << ','
        << r.mean_extra_cost.to_fixed(1) << '\n';
  out << "MEAN," << suite.mean_reusability.to_fixed(1) << ',' << suite.mean_extra_cost.to_fixed(1)
      << '\n';
  return out.str();
}

std::string plot_svg(const ExperimentSuite& suite) {
  if (suite.results.empty()) throw ConsistencyError("cannot plot an empty suite");
  constexpr int kBar = 14, kGap = 10, kLeft = 50, kTop = 30, kHeight = 200, kBottom = 60;
  const int n = static_cast<int>(suite.results.size());
  const int width = kLeft + n * (2 * kBar + kGap) + 20;
  const int total_height = kTop + kHeight + kBottom;
  auto y_of = [&](const Rational& pct) {
    return kTop + kHeight - static_cast<int>(pct.round_scaled(1) * kHeight / 1000);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << total_height << "\" font-family=\"sans-serif\" font-size=\"10\">\n";
  svg << "<text x=\"" << kLeft << "\" y=\"16\">" << to_string(suite.kind) << "-domain ("
      << suite.catalog_name << ")</text>\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + kHeight << "\" x2=\"" << width - 10
      << "\" y2=\"" << kTop + kHeight << "\" stroke=\"black\"/>\n";
  for (int tick = 0; tick <= 100; tick += 25) {
    const int y = kTop + kHeight - tick * kHeight / 100;
    svg << "<text x=\"" << kLeft - 6 << "\" y=\"" << y + 3 << "\" text-anchor=\"end\">" << tick
        << "</text>\n";
  }
  for (int i = 0; i < n; ++i) {
    const auto& r = suite.results[i];
    const int x = kLeft + i * (2 * kBar + kGap) + kGap / 2;
    const int yr = y_of(r.reusability), ye = y_of(r.mean_extra_cost);
    svg << "<rect x=\"" << x << "\" y=\"" << yr << "\" width=\"" << kBar << "\" height=\""
        << kTop + kHeight - yr << "\" fill=\"#4477aa\"/>\n";
    svg << "<rect x=\"" << x + kBar << "\" y=\"" << ye << "\" width=\"" << kBar << "\" height=\""
        << kTop + kHeight - ye << "\" fill=\"#ee6677\"/>\n";
    svg << "<text x=\"" << x + kBar << "\" y=\"" << kTop + kHeight + 12
        << "\" text-anchor=\"end\" transform=\"rotate(-45 " << x + kBar << ' '
        << kTop + kHeight + 12 << ")\">" << r.group_name << "</text>\n";
  }
  const int mr = y_of(suite.mean_reusability), me = y_of(suite.mean_extra_cost);
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << mr << "\" x2=\"" << width - 10 << "\" y2=\"" << mr
      << "\" stroke=\"#4477aa\" stroke-dasharray=\"4 2\"/>\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << me << "\" x2=\"" << width - 10 << "\" y2=\"" << me
      << "\" stroke=\"#ee6677\" stroke-dasharray=\"4 2\"/>\n";
  svg << "<text x=\"" << width - 10 << "\" y=\"" << mr - 3 << "\" text-anchor=\"end\">mean reusability "
      << suite.mean_reusability.to_fixed(1) << "</text>\n";
  svg << "<text x=\"" << width - 10 << "\" y=\"" << me - 3
      << "\" text-anchor=\"end\">mean extra cost " << suite.mean_extra_cost.to_fixed(1)
      << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

std::vector<OutputFile> emit_plot_data(const ExperimentSuite& intra, const ExperimentSuite& inter,
                                       bool with_svg) {
  if (intra.catalog_name != inter.catalog_name)
    throw InputError("plot suites come from different catalogs ('" + intra.catalog_name +
                     "' vs '" + inter.catalog_name + "')");
  if (intra.kind != SuiteKind::Intra || inter.kind != SuiteKind::Inter)
    throw UsageError("plot data expects an intra suite and an inter suite");
  std::vector<OutputFile> files;
  for (const auto* s : {&intra, &inter}) {
    const std::string stem = std::string(to_string(s->kind)) + "_plot";
    files.push_back({stem + ".csv", plot_series_csv(*s)});
    if (with_svg) files.push_back({stem + ".svg", plot_svg(*s)});
  }
  return files;
}

}  // namespace masip
