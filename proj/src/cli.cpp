#include "masip/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

#include <unistd.h>

#include <CLI11.hpp>

#include "masip/asm_ingest.hpp"
#include "masip/error.hpp"
#include "masip/experiment.hpp"
#include "masip/isa_catalog.hpp"
#include "masip/reporting.hpp"
#include "text_util.hpp"

namespace masip {
namespace {

bool color_enabled(std::ostream& err) {
  return &err == &std::cerr && std::getenv("NO_COLOR") == nullptr && ::isatty(STDERR_FILENO);
}

// Keeps diagnostics on a single line.
std::string one_line(std::string s) {
  for (auto& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

void diag(std::ostream& err, std::string_view level, const std::string& msg) {
  if (color_enabled(err))
    err << (level == "error" ? "\033[31m" : "\033[33m") << level << ":\033[0m " << one_line(msg) << '\n';
  else
    err << level << ": " << one_line(msg) << '\n';
}

void emit(const std::optional<std::filesystem::path>& path, const std::string& content,
          std::ostream& out) {
  if (path) detail::write_file(*path, content);
  else out << content;
}

struct ProfileArgs {
  std::vector<std::string> files;
  std::string catalog, mode = "lenient", app, domain = "default";
  std::optional<std::string> out;
};

struct AnalyzeArgs {
  std::string config, kind = "both", format = "csv";
  std::optional<std::string> out_dir;
  std::optional<std::size_t> group_size;
  bool svg = false;
};

int cmd_catalog_validate(const std::string& path, std::ostream& out) {
  const IsaCatalog catalog = load_catalog(path);
  out << catalog.name() << ": " << catalog.size() << " mnemonics\n";
  out << "aliases: " << catalog.aliases().size() << '\n';
  return 0;
}

int cmd_profile(const ProfileArgs& a, std::ostream& out, std::ostream& err) {
  const IsaCatalog catalog = load_catalog(a.catalog);
  const ParseMode mode = parse_mode_from_string(a.mode);
  std::vector<std::filesystem::path> files(a.files.begin(), a.files.end());
  const std::string app = a.app.empty() ? files.front().stem().string() : a.app;
  const InstructionProfile profile = build_profile(app, a.domain, files, catalog, mode);

  if (!profile.unknown.empty()) {
    std::string list;
    for (const auto& u : profile.unknown) list += (list.empty() ? "" : ", ") + u;
    diag(err, "warning", std::to_string(profile.unknown.size()) + " unknown mnemonic(s): " + list);
  }
  if (profile.used.empty()) diag(err, "warning", "profile '" + app + "' uses no known instructions");

  std::optional<std::filesystem::path> path;
  if (a.out) path = *a.out;
  emit(path, to_json(profile).dump(2) + "\n", out);
  return 0;
}

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  ExperimentConfig config = load_config(a.config);
  if (a.group_size) {
    config.group_size = *a.group_size;
    config.validate();
  }
  const TableFormat format = table_format_from_string(a.format);
  std::vector<SuiteKind> kinds;
  if (a.kind == "both") kinds = {SuiteKind::Intra, SuiteKind::Inter};
  else kinds = {suite_kind_from_string(a.kind)};

  const Corpus corpus = load_corpus(config);
  std::vector<ExperimentSuite> suites;
  for (auto k : kinds)
    suites.push_back(k == SuiteKind::Intra ? run_intra(corpus) : run_inter(corpus, config.group_size));

  if (!a.out_dir) {
    for (const auto& s : suites) out << emit_table(s, format);
    return 0;
  }
  const std::filesystem::path dir(*a.out_dir);
  const std::string ext = format == TableFormat::Csv ? ".csv" : ".md";
  for (const auto& s : suites) {
    const std::string stem(to_string(s.kind));
    detail::write_file(dir / (stem + "_suite.json"), to_json(s).dump(2) + "\n");
    detail::write_file(dir / (stem + "_table" + ext), emit_table(s, format));
  }
  if (suites.size() == 2) {
    for (const auto& f : emit_plot_data(suites[0], suites[1], a.svg))
      detail::write_file(dir / f.name, f.content);
  } else {
    const std::string stem = std::string(to_string(suites[0].kind)) + "_plot";
    detail::write_file(dir / (stem + ".csv"), plot_series_csv(suites[0]));
    if (a.svg) detail::write_file(dir / (stem + ".svg"), plot_svg(suites[0]));
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Instruction-usage analysis for multi-application ASIP design", "masip"};
  app.require_subcommand(1);

  auto* catalog_cmd = app.add_subcommand("catalog", "Inspect ISA catalogs");
  catalog_cmd->require_subcommand(1);
  std::string catalog_path;
  auto* validate = catalog_cmd->add_subcommand("validate", "Load and check a catalog file");
  validate->add_option("path", catalog_path, "Catalog file")->required();

  ProfileArgs pa;
  auto* profile = app.add_subcommand("profile", "Build one application's instruction profile");
  profile->add_option("files", pa.files, "Assembly listings")->required();
  profile->add_option("--catalog", pa.catalog, "ISA catalog file")->required();
  profile->add_option("--mode", pa.mode, "strict or lenient")->check(CLI::IsMember({"strict", "lenient"}));
  profile->add_option("--app", pa.app, "Application name (default: first file's stem)");
  profile->add_option("--domain", pa.domain, "Domain name");
  profile->add_option("--out", pa.out, "Output JSON path (default: stdout)");

  AnalyzeArgs aa;
  auto* analyze = app.add_subcommand("analyze", "Run intra- and/or inter-domain experiments");
  analyze->add_option("--config", aa.config, "Experiment config JSON")->required();
  analyze->add_option("--kind", aa.kind, "intra, inter or both")
      ->check(CLI::IsMember({"intra", "inter", "both"}));
  analyze->add_option("--out-dir", aa.out_dir, "Directory for suite, table and plot files");
  analyze->add_option("--format", aa.format, "Table format: csv or markdown")
      ->check(CLI::IsMember({"csv", "markdown"}));
  analyze->add_option("--group-size", aa.group_size, "Domains per inter-domain combination");
  analyze->add_flag("--svg", aa.svg, "Also write SVG bar charts");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    diag(err, "error", e.what());
    return 1;
  }

  try {
    if (*validate) return cmd_catalog_validate(catalog_path, out);
    if (*profile) return cmd_profile(pa, out, err);
    if (*analyze) return cmd_analyze(aa, out);
    return 1;
  } catch (const Error& e) {
    diag(err, "error", e.what());
    return e.exit_code();
  } catch (const std::filesystem::filesystem_error& e) {
    diag(err, "error", e.what());
    return 2;
  } catch (const std::exception& e) {
    diag(err, "error", std::string("internal: ") + e.what());
    return 3;
  }
}

}  // namespace masip
